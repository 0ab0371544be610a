"""Set carrier, bitmask kernel, classification, notation round trips."""

import random

import pytest

from mstd import (
    Classification,
    DegenerateSetError,
    EmptySetError,
    GapNotation,
    IntSet,
    InvalidParameterError,
    Kind,
    ParseError,
    UNIVERSE_CAP,
    UniverseOverflowError,
    bits_of,
    classify,
    diffset,
    elements_of,
    format_gap_notation,
    format_set_literal,
    gaps_of,
    normalize_affine,
    parse_gap_notation,
    parse_set_literal,
    sum_diff_cards,
    sumset,
    symmetry_center,
)
from tests._oracles import naive_cards, naive_diffset, naive_sumset


class TestIntSet:
    def test_dedup_and_order(self):
        a = IntSet([5, 1, 3, 1, 5])
        assert a.elements == (1, 3, 5)
        assert len(a) == 3
        assert list(a) == [1, 3, 5]

    def test_membership(self):
        a = IntSet([0, 2, 9])
        assert 2 in a and 9 in a and 0 in a
        assert 1 not in a
        assert -3 not in a
        assert "2" not in a

    def test_bits_round_trip(self):
        a = IntSet([0, 4, 7])
        assert a.bits == 0b10010001
        assert IntSet.from_bits(a.bits) == a
        assert elements_of(bits_of([7, 0, 4])) == (0, 4, 7)

    def test_operators(self):
        a = IntSet([1, 2, 3])
        b = IntSet([3, 4])
        assert (a | b).elements == (1, 2, 3, 4)
        assert (a & b).elements == (3,)
        assert (a - b).elements == (1, 2)
        assert (a ^ b).elements == (1, 2, 4)
        assert not a.isdisjoint(b)
        assert a.isdisjoint(IntSet([9]))

    def test_shift(self):
        assert IntSet([3, 5]).shift(4).elements == (7, 9)
        assert IntSet([3, 5]).shift(-3).elements == (0, 2)
        with pytest.raises(InvalidParameterError):
            IntSet([3, 5]).shift(-4)

    def test_min_max_diameter(self):
        a = IntSet([2, 9, 11])
        assert (a.min, a.max, a.diameter) == (2, 11, 9)
        empty = IntSet()
        for prop in ("min", "max", "diameter"):
            with pytest.raises(EmptySetError):
                getattr(empty, prop)

    def test_eq_hash(self):
        assert IntSet([1, 2]) == IntSet((2, 1))
        assert hash(IntSet([1, 2])) == hash(IntSet([2, 1]))
        assert IntSet([1]) != IntSet([2])
        assert len({IntSet([1, 2]), IntSet([2, 1])}) == 1

    def test_repr(self):
        assert repr(IntSet([1, 2])) == "IntSet({1, 2})"

    def test_rejects_bad_elements(self):
        with pytest.raises(InvalidParameterError):
            IntSet([-1])
        with pytest.raises(InvalidParameterError):
            IntSet([1.5])
        with pytest.raises(InvalidParameterError):
            IntSet([True])

    def test_universe_cap(self):
        IntSet([UNIVERSE_CAP - 1])
        with pytest.raises(UniverseOverflowError):
            IntSet([UNIVERSE_CAP])


class TestArithmetic:
    def test_sumset_golden(self):
        s = sumset(IntSet([0, 1, 3]))
        assert s.elements == (0, 1, 2, 3, 4, 6)

    def test_diffset_golden(self):
        mags, card = diffset(IntSet([0, 1, 3]))
        assert mags.elements == (0, 1, 2, 3)
        assert card == 7

    def test_diffset_singleton(self):
        mags, card = diffset(IntSet([5]))
        assert mags.elements == (0,)
        assert card == 1

    def test_empty_rejected(self):
        with pytest.raises(EmptySetError):
            sumset(IntSet())
        with pytest.raises(EmptySetError):
            diffset(IntSet())
        with pytest.raises(EmptySetError):
            classify(IntSet())

    def test_classify_sum_dominant(self):
        c = classify(IntSet([0, 2, 3, 4, 7, 11, 12, 14]))
        assert c == Classification(Kind.SUM_DOMINANT, 26, 25)
        assert c.excess == 1

    def test_classify_difference_dominant(self):
        c = classify(IntSet([0, 1, 3]))
        assert c.kind is Kind.DIFFERENCE_DOMINANT
        assert (c.sum_card, c.diff_card, c.excess) == (6, 7, -1)

    def test_classify_balanced(self):
        c = classify(IntSet([3, 5, 7, 9, 11]))
        assert c.kind is Kind.BALANCED
        assert c.excess == 0

    def test_kernel_matches_naive_exhaustive(self):
        # every nonempty subset of {0..10}
        for mask in range(1, 1 << 11):
            elems = elements_of(mask)
            sc, dc = sum_diff_cards(mask, elems)
            nsc, ndc = naive_cards(elems)
            assert (sc, dc) == (nsc, ndc), elems

    def test_kernel_matches_naive_random(self):
        rng = random.Random(20260817)
        for _ in range(2000):
            mask = rng.getrandbits(64) | 1
            elems = elements_of(mask)
            assert sum_diff_cards(mask) == naive_cards(elems)

    def test_sumset_diffset_against_naive(self):
        rng = random.Random(7)
        for _ in range(200):
            elems = sorted(rng.sample(range(100), rng.randint(1, 12)))
            a = IntSet(elems)
            assert set(sumset(a).elements) == naive_sumset(elems)
            mags = {abs(d) for d in naive_diffset(elems)}
            assert set(diffset(a)[0].elements) == mags


class TestSymmetry:
    def test_center_detected(self):
        assert symmetry_center(IntSet([3, 5, 7, 9, 11])) == 14
        assert symmetry_center(IntSet([0, 1, 3, 4])) == 4
        assert symmetry_center(IntSet([5])) == 10

    def test_no_center(self):
        assert symmetry_center(IntSet([0, 1, 3])) is None
        assert symmetry_center(IntSet([0, 2, 3, 4, 7, 11, 12, 14])) is None

    def test_symmetric_implies_balanced_small(self):
        # all symmetric subsets of {0..12}
        for mask in range(1, 1 << 13):
            elems = elements_of(mask)
            c = elems[0] + elems[-1]
            if all((c - e) in set(elems) for e in elems):
                assert symmetry_center(IntSet(elems)) == c
                assert classify(IntSet(elems)).kind is Kind.BALANCED

    def test_empty_rejected(self):
        with pytest.raises(EmptySetError):
            symmetry_center(IntSet())


class TestNormalize:
    def test_golden(self):
        assert normalize_affine(IntSet([6, 10, 14])).elements == (0, 1, 2)
        assert normalize_affine(IntSet([0, 3])).elements == (0, 1)
        assert normalize_affine(IntSet([5, 6])).elements == (0, 1)

    def test_fixed_point(self):
        a = IntSet([0, 1, 5])
        assert normalize_affine(a) == a

    def test_preserves_classification(self):
        rng = random.Random(11)
        for _ in range(300):
            elems = sorted(rng.sample(range(60), rng.randint(2, 10)))
            g = rng.randint(1, 4)
            t = rng.randint(0, 20)
            scaled = IntSet(e * g + t for e in elems)
            c1 = classify(scaled)
            c2 = classify(normalize_affine(scaled))
            assert c1.kind is c2.kind
            assert c1.excess == c2.excess

    def test_degenerate(self):
        with pytest.raises(DegenerateSetError):
            normalize_affine(IntSet([7]))
        with pytest.raises(EmptySetError):
            normalize_affine(IntSet())


class TestGapNotation:
    def test_format_golden(self):
        assert format_gap_notation(IntSet([2, 3, 9, 10, 15])) == "(2 | 1, 6, 1, 5)"
        assert format_gap_notation(IntSet([7])) == "(7 |)"

    def test_parse_golden(self):
        g = parse_gap_notation("(2 | 1, 6, 1, 5)")
        assert g == GapNotation(2, (1, 6, 1, 5))
        assert g.to_intset().elements == (2, 3, 9, 10, 15)
        assert parse_gap_notation("(7 |)").to_intset().elements == (7,)
        assert parse_gap_notation("  ( 0 | 3 )  ").to_intset().elements == (0, 3)

    def test_round_trip_random(self):
        rng = random.Random(3)
        for _ in range(500):
            elems = sorted(rng.sample(range(200), rng.randint(1, 15)))
            a = IntSet(elems)
            text = format_gap_notation(a)
            assert parse_gap_notation(text).to_intset() == a

    def test_gaps_of(self):
        assert gaps_of(IntSet([2, 3, 9, 10, 15])) == (1, 6, 1, 5)
        assert gaps_of(IntSet([4])) == ()
        with pytest.raises(EmptySetError):
            gaps_of(IntSet())

    def test_gap_notation_validates(self):
        with pytest.raises(InvalidParameterError):
            GapNotation(0, (1, 0, 2))
        with pytest.raises(InvalidParameterError):
            GapNotation(-3, (1,)).to_intset()

    @pytest.mark.parametrize("text,offset", [
        ("", 0),
        ("3 | 1)", 0),
        ("(x | 1)", 1),
        ("(3 | 0)", 5),
        ("(3 | -2)", 5),
        ("(3 | 1,)", 7),
        ("(3 | 1 2)", 7),
        ("(3 | 1", 6),
        ("(3 | 1) x", 8),
        ("(-3 | 1)", 1),
    ])
    def test_parse_errors_with_offsets(self, text, offset):
        with pytest.raises(ParseError) as err:
            parse_gap_notation(text)
        assert err.value.offset == offset


class TestSetLiteral:
    @pytest.mark.parametrize("text,expect", [
        ("{1, 2, 3}", (1, 2, 3)),
        ("{3,1,2}", (1, 2, 3)),
        ("1 2 3", (1, 2, 3)),
        ("1,2,3", (1, 2, 3)),
        ("7", (7,)),
        ("{1, 1, 2}", (1, 2)),
        ("{}", ()),
        ("  { 4 }  ", (4,)),
    ])
    def test_accepts(self, text, expect):
        assert parse_set_literal(text).elements == expect

    @pytest.mark.parametrize("text,offset", [
        ("{1, -4}", 4),
        ("-4", 0),
        ("abc", 0),
        ("1,,2", 2),
        ("{1", 0),
        ("1}", 1),
        ("", 0),
        ("   ", 0),
        ("{1,}", 3),
        ("{1} x", 4),
        ("{1 : 2}", 3),
    ])
    def test_rejects_with_offset(self, text, offset):
        with pytest.raises(ParseError) as err:
            parse_set_literal(text)
        assert err.value.offset == offset

    def test_format_literal(self):
        assert format_set_literal(IntSet([0, 1, 3])) == "{0, 1, 3}"
        assert format_set_literal(IntSet()) == "{}"

    def test_round_trip(self):
        rng = random.Random(5)
        for _ in range(200):
            a = IntSet(rng.sample(range(80), rng.randint(0, 12)))
            assert parse_set_literal(format_set_literal(a)) == a
