"""Explicit families and the three-part interval split."""

import random

import pytest

from mstd import (
    CENTER_SET,
    ArithProg,
    ConstraintViolationError,
    IntSet,
    InvalidParameterError,
    Kind,
    Partition3Spec,
    ap,
    classify,
    default_blocks,
    is_arithmetic_progression,
    k_set,
    middle_window,
    nathanson_set,
    partition3,
    union_two_aps,
    validate_partition_spec,
)
from tests._oracles import naive_cards, naive_is_sum_dominant

# the canonical worked split at m=21, element by element
A1_M21 = (
    [1, 2, 3, 4, 8, 9, 11, 13, 14, 15, 20, 24]
    + list(range(25, 62, 2))
    + [62, 71, 72, 84]
    + list(range(85, 122, 2))
    + [122, 126, 131, 132, 133, 136, 138, 142, 143, 144, 145]
)
A2_M21 = (
    [5, 6, 7, 10, 12, 16, 17, 18, 19, 21, 22, 23]
    + list(range(26, 61, 2))
    + [63, 64, 65, 67, 74, 75, 76, 79, 81, 82, 83]
    + list(range(86, 121, 2))
    + [123, 124, 125]
    + [127, 128, 129, 130, 134, 135, 137, 139, 140, 141]
)
S_M21 = [66, 68, 69, 70, 73, 77, 78, 80]


class TestAp:
    def test_golden(self):
        assert ap(7, 4, 5).elements == (7, 11, 15, 19, 23)
        assert ap(0, 1, 1).elements == (0,)

    def test_validation_passthrough(self):
        with pytest.raises(InvalidParameterError):
            ap(0, 0, 5)


class TestKSet:
    def test_smallest_member(self):
        assert k_set(9).elements == (0, 1, 2, 4, 7, 8, 9, 13, 15, 16)

    def test_cards_at_nine(self):
        c = classify(k_set(9))
        assert (c.sum_card, c.diff_card) == (32, 31)

    @pytest.mark.parametrize("m", range(9, 61))
    def test_excess_one(self, m):
        s = k_set(m)
        assert len(s) == m + 1
        c = classify(s)
        assert c.kind is Kind.SUM_DOMINANT and c.excess == 1

    def test_rejects_small_m(self):
        with pytest.raises(InvalidParameterError):
            k_set(8)

    def test_matches_naive(self):
        for m in (9, 12, 25):
            sc, dc = naive_cards(k_set(m).elements)
            c = classify(k_set(m))
            assert (c.sum_card, c.diff_card) == (sc, dc)


class TestNathanson:
    def test_smallest_member(self):
        assert nathanson_set(5).elements == (0, 2, 3, 4, 7, 11, 15, 19, 20, 22)

    @pytest.mark.parametrize("k", range(5, 31))
    def test_excess_one(self, k):
        c = classify(nathanson_set(k))
        assert c.kind is Kind.SUM_DOMINANT and c.excess == 1

    def test_rejects_small_k(self):
        with pytest.raises(InvalidParameterError):
            nathanson_set(4)

    def test_matches_naive(self):
        for k in (5, 8, 12):
            sc, dc = naive_cards(nathanson_set(k).elements)
            c = classify(nathanson_set(k))
            assert (c.sum_card, c.diff_card) == (sc, dc)


class TestUnionTwoAps:
    def test_golden(self):
        assert union_two_aps(ArithProg(0, 1, 2),
                             ArithProg(2, 1, 2)).elements == (0, 1, 2, 3)
        assert union_two_aps(ArithProg(0, 1, 4),
                             ArithProg(10, 1, 2)).elements \
            == (0, 1, 2, 3, 10, 11)

    def test_same_diff_overlap_merges(self):
        rng = random.Random(47)
        for _ in range(200):
            d = rng.randint(1, 8)
            n1 = rng.randint(2, 12)
            p1 = ArithProg(rng.randint(0, 60), d, n1)
            # force an overlap by starting p2 on one of p1's terms
            p2 = ArithProg(p1.start + d * rng.randint(0, n1 - 1), d,
                           rng.randint(2, 12))
            u = union_two_aps(p1, p2)
            assert is_arithmetic_progression(u) is not None

    def test_same_diff_union_never_sum_dominant(self):
        rng = random.Random(53)
        for _ in range(200):
            d = rng.randint(1, 6)
            p1 = ArithProg(rng.randint(0, 30), d, rng.randint(1, 8))
            p2 = ArithProg(rng.randint(0, 30), d, rng.randint(1, 8))
            u = union_two_aps(p1, p2)
            assert not naive_is_sum_dominant(u.elements)


class TestMiddleWindow:
    def test_smallest(self):
        assert middle_window(21).elements == (67, 71, 72, 74, 75, 76, 79)

    def test_grows_by_one(self):
        for m in range(21, 50):
            assert len(middle_window(m + 1)) == len(middle_window(m)) + 1

    def test_excludes_center(self):
        for m in (21, 40, 90):
            assert middle_window(m).isdisjoint(CENTER_SET)

    def test_rejects_small_m(self):
        with pytest.raises(InvalidParameterError):
            middle_window(20)


class TestValidateSpec:
    def test_worked_example_valid(self):
        spec = Partition3Spec(21, IntSet([71, 72]),
                              IntSet([67, 74, 75, 76, 79]))
        assert validate_partition_spec(spec) == []

    def test_default_blocks_valid_range(self):
        for m in range(21, 121):
            spec = default_blocks(m)
            assert validate_partition_spec(spec) == [], m

    def test_overlap_flagged(self):
        spec = Partition3Spec(21, IntSet([71, 72]),
                              IntSet([71, 74, 75, 76, 79]))
        names = [v.constraint for v in validate_partition_spec(spec)]
        assert "disjointness" in names

    def test_coverage_flagged(self):
        spec = Partition3Spec(21, IntSet([71, 72]), IntSet([74, 75, 76, 79]))
        out = validate_partition_spec(spec)
        assert [v.constraint for v in out] == ["coverage"]
        assert out[0].positions == (67,)

    def test_missing_triplet_flagged(self):
        # m2 holds no three consecutive elements at all
        spec = Partition3Spec(21, IntSet([71, 72, 74, 75]),
                              IntSet([67, 76, 79]))
        out = validate_partition_spec(spec)
        assert [v.constraint for v in out] == ["m2-triplet-chain"]

    def test_missing_pair_flagged(self):
        spec = Partition3Spec(21, IntSet([67, 71, 74, 79]),
                              IntSet([72, 75, 76]))
        names = [v.constraint for v in validate_partition_spec(spec)]
        assert "m1-pair-chain" in names

    def test_small_m_flagged(self):
        spec = Partition3Spec(9, IntSet([71, 72]), IntSet([67]))
        out = validate_partition_spec(spec)
        assert [v.constraint for v in out] == ["m-range"]


class TestPartition3:
    def worked_spec(self):
        return Partition3Spec(21, IntSet([71, 72]),
                              IntSet([67, 74, 75, 76, 79]))

    def test_worked_example_exact(self):
        r = partition3(self.worked_spec())
        assert r.a1.elements == tuple(A1_M21)
        assert r.a2.elements == tuple(A2_M21)
        assert r.s.elements == tuple(S_M21)
        assert r.span == 145

    def test_worked_example_excesses(self):
        r = partition3(self.worked_spec())
        assert classify(r.a1).excess == 2
        assert classify(r.a2).excess == 2
        assert classify(r.s).excess == 1

    def test_parts_partition_interval(self):
        for m in (21, 30, 55):
            r = partition3(default_blocks(m))
            assert r.span == 124 + m
            assert r.a1.isdisjoint(r.a2)
            assert r.a1.isdisjoint(r.s) and r.a2.isdisjoint(r.s)
            assert (r.a1 | r.a2 | r.s) == IntSet(range(1, r.span + 1))

    @pytest.mark.parametrize("m", range(21, 41))
    def test_parts_sum_dominant(self, m):
        r = partition3(default_blocks(m))
        for part in (r.a1, r.a2, r.s):
            assert classify(part).kind is Kind.SUM_DOMINANT

    def test_invalid_spec_raises(self):
        bad = Partition3Spec(21, IntSet([71, 72]),
                             IntSet([71, 74, 75, 76, 79]))
        with pytest.raises(ConstraintViolationError) as info:
            partition3(bad)
        assert any(v.constraint == "disjointness"
                   for v in info.value.violations)


class TestDefaultBlocks:
    def test_smallest(self):
        spec = default_blocks(21)
        assert spec.m1.elements == (71, 72)
        assert spec.m2.elements == (67, 74, 75, 76, 79)

    def test_rejects_small_m(self):
        with pytest.raises(InvalidParameterError):
            default_blocks(20)

    def test_window_division(self):
        for m in (21, 37, 64, 120):
            spec = default_blocks(m)
            assert spec.m1.isdisjoint(spec.m2)
            assert (spec.m1 | spec.m2) == middle_window(m)
