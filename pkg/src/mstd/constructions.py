"""Explicit families of sum-dominant sets and the three-part interval split.

k_set(m) is the workhorse family

    K(m) = {0,1,2,4} u {7,...,m} u {m+4, m+6, m+7},   m >= 9

with |K+K| - |K-K| = 1 for every m: the sumset misses only 2m+11 out of
{0..2m+14} while the difference magnitudes miss only m+1. nathanson_set(k)
is the classic three-progression family

    {0,2,4} u {3,7,11,...,4k-1} u {4k, 4k+2}

sum-dominant with excess exactly +1 for each admitted k. (Some printings
drop the element 4; that variant is symmetric about 2k+1 after doubling,
hence balanced, so the corrected form above is what the family's
sum-dominance claim actually requires.)

partition3 splits the interval {1,...,124+m} into three pairwise disjoint
sum-dominant sets built from fixed anchor blocks plus a caller-supplied
division (M1, M2) of the middle window {66,...,59+m} minus the fixed
center set. M1 must carry a chain of disjoint consecutive pairs, starting
inside {66..101}, consecutive pair starts at most 39 apart, ending with a
pair inside {24+m..59+m}; M2 must carry the analogous chain of triplets
(starts at most 40 apart, first inside {66..105}, last inside
{20+m..59+m}). The chains keep every middle element within reach of both
ends so the assembled parts stay sum-dominant for every m >= 21.

default_blocks(m) picks a canonical (M1, M2): pair starts on the grid
66 + 30t, each shifted right off the center set, clipped to the window;
everything else goes to M2. The grid spacing (30 <= 39, and <= 40 for
the complementary triplet runs) keeps both chains valid; a slide-left
repair loop backs it up in case a future block change ever invalidates
a clipped tail. At m=21 this yields M1 = {71,72}, M2 = {67,74,75,76,79}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import IntSet
from .errors import ConstraintViolationError, InvalidParameterError
from .lemmas import ArithProg, is_arithmetic_progression

# fixed anchor blocks of the three-part split
LOW_BLOCK_1 = IntSet((1, 2, 3, 4, 8, 9, 11, 13, 14, 15, 20))
HIGH_BLOCK_1 = IntSet((21, 26, 27, 28, 31, 33, 37, 38, 39, 40))
LOW_BLOCK_2 = IntSet((5, 6, 7, 10, 12, 16, 17, 18, 19))
HIGH_BLOCK_2 = IntSet((22, 23, 24, 25, 29, 30, 32, 34, 35, 36))

# the third part: fixed for every m, excess +1 on its own
CENTER_SET = IntSet((66, 68, 69, 70, 73, 77, 78, 80))

MIN_WINDOW_M = 21


def ap(start: int, diff: int, length: int) -> IntSet:
    """Expand the arithmetic progression start, start+diff, ... (length terms)."""
    return ArithProg(start, diff, length).expand()


def k_set(m: int) -> IntSet:
    """The m+1 element family {0,1,2,4} u {7..m} u {m+4, m+6, m+7}.

    Sum-dominant with excess exactly +1 for every m >= 9.
    """
    if m < 9:
        raise InvalidParameterError(f"k_set needs m >= 9, got {m}")
    elems = [0, 1, 2, 4]
    elems.extend(range(7, m + 1))
    elems.extend((m + 4, m + 6, m + 7))
    return IntSet(elems)


def nathanson_set(k: int) -> IntSet:
    """Three-progression family {0,2,4} u {3,7,...,4k-1} u {4k, 4k+2}.

    Sum-dominant with excess exactly +1 for every k >= 5.
    """
    if k < 5:
        raise InvalidParameterError(f"nathanson_set needs k >= 5, got {k}")
    elems = [0, 2, 4]
    elems.extend(range(3, 4 * k, 4))
    elems.extend((4 * k, 4 * k + 2))
    return IntSet(elems)


def union_two_aps(p1: ArithProg, p2: ArithProg) -> IntSet:
    """Union of two progressions.

    When the progressions share a common difference and overlap, the
    union collapses to a single progression (verified here), which is
    why such unions are never sum-dominant.
    """
    a = p1.expand()
    b = p2.expand()
    out = a | b
    if p1.diff == p2.diff and not a.isdisjoint(b):
        assert is_arithmetic_progression(out) is not None
    return out


# ---------------------------------------------------------------------------
# three-part split


@dataclass(frozen=True)
class Partition3Spec:
    """Parameters of the split: interval scale m and the window division."""

    m: int
    m1: IntSet
    m2: IntSet


@dataclass(frozen=True)
class SpecViolation:
    """One failed spec constraint with the positions that break it."""

    constraint: str
    positions: tuple[int, ...]
    message: str


@dataclass(frozen=True)
class Partition3Result:
    a1: IntSet
    a2: IntSet
    s: IntSet
    span: int


def middle_window(m: int) -> IntSet:
    """The free middle positions {66..59+m} minus the fixed center set."""
    if m < MIN_WINDOW_M:
        raise InvalidParameterError(f"window needs m >= {MIN_WINDOW_M}, got {m}")
    return IntSet(range(66, 60 + m)) - CENTER_SET


def _run_starts(s: IntSet, width: int) -> list[int]:
    # x such that x, x+1, ..., x+width-1 all lie in s
    bits = s.bits
    run = bits
    for i in range(1, width):
        run &= bits >> i
    out = []
    while run:
        low = run & -run
        out.append(low.bit_length() - 1)
        run ^= low
    return out


def _chain_exists(s: IntSet, width: int, max_gap: int,
                  first_lo: int, first_hi: int,
                  last_lo: int, last_hi: int) -> bool:
    """Reachability over runs of `width` consecutive elements of s.

    A chain is a sequence of disjoint runs with consecutive start
    positions at most max_gap apart, whose first run fits in
    [first_lo, first_hi] and whose last fits in [last_lo, last_hi].
    Starts ascend, so one left-to-right sweep settles reachability.
    """
    reach: list[int] = []
    for x in _run_starts(s, width):
        ok = first_lo <= x and x + width - 1 <= first_hi
        if not ok:
            ok = any(y + width <= x <= y + max_gap for y in reach)
        if ok:
            if last_lo <= x and x + width - 1 <= last_hi:
                return True
            reach.append(x)
    return False


def validate_partition_spec(spec: Partition3Spec) -> list[SpecViolation]:
    """Check every spec invariant; an empty list means the spec is valid."""
    out: list[SpecViolation] = []
    m = spec.m
    if m < MIN_WINDOW_M:
        out.append(SpecViolation(
            "m-range", (m,), f"m must be at least {MIN_WINDOW_M}, got {m}"))
        return out

    overlap = spec.m1 & spec.m2
    if len(overlap):
        out.append(SpecViolation(
            "disjointness", overlap.elements,
            f"m1 and m2 share {len(overlap)} element(s)"))

    window = middle_window(m)
    mismatch = (spec.m1 | spec.m2) ^ window
    if len(mismatch):
        out.append(SpecViolation(
            "coverage", mismatch.elements,
            "m1 u m2 differs from the middle window at these positions"))

    if not _chain_exists(spec.m1, 2, 39, 66, 101, 24 + m, 59 + m):
        out.append(SpecViolation(
            "m1-pair-chain", tuple(_run_starts(spec.m1, 2)),
            "no chain of consecutive-element pairs spans the window "
            "(starts <= 39 apart, first pair in {66..101}, "
            f"last pair in {{{24 + m}..{59 + m}}})"))

    if not _chain_exists(spec.m2, 3, 40, 66, 105, 20 + m, 59 + m):
        out.append(SpecViolation(
            "m2-triplet-chain", tuple(_run_starts(spec.m2, 3)),
            "no chain of consecutive-element triplets spans the window "
            "(starts <= 40 apart, first triplet in {66..105}, "
            f"last triplet in {{{20 + m}..{59 + m}}})"))
    return out


def _odd_steps(lo: int, hi: int) -> list[int]:
    # lo, lo+2, ..., hi
    return list(range(lo, hi + 1, 2))


def partition3(spec: Partition3Spec) -> Partition3Result:
    """Assemble the three-part split of {1,...,124+m} from a valid spec.

    Part one is low anchor 1 + odd bridge up to the window + spec.m1 +
    odd bridge after the window + shifted high anchor 1; part two gets
    the complementary blocks and spec.m2; part three is the fixed
    center set. Raises ConstraintViolationError on an invalid spec.
    """
    violations = validate_partition_spec(spec)
    if violations:
        raise ConstraintViolationError(violations)
    m = spec.m

    bridge_low_1 = IntSet([24] + _odd_steps(25, 61) + [62])
    bridge_high_1 = IntSet([63 + m] + _odd_steps(64 + m, 100 + m) + [101 + m])
    bridge_low_2 = IntSet([21, 22, 23] + _odd_steps(26, 60) + [63, 64, 65])
    bridge_high_2 = IntSet(
        [60 + m, 61 + m, 62 + m] + _odd_steps(65 + m, 99 + m)
        + [102 + m, 103 + m, 104 + m])

    a1 = LOW_BLOCK_1 | bridge_low_1 | spec.m1 | bridge_high_1 \
        | HIGH_BLOCK_1.shift(m + 84)
    a2 = LOW_BLOCK_2 | bridge_low_2 | spec.m2 | bridge_high_2 \
        | HIGH_BLOCK_2.shift(m + 84)

    span = 124 + m
    # forced by construction; cheap to confirm
    assert a1.isdisjoint(a2) and a1.isdisjoint(CENTER_SET) \
        and a2.isdisjoint(CENTER_SET)
    assert (a1 | a2 | CENTER_SET) == IntSet(range(1, span + 1))
    return Partition3Result(a1, a2, CENTER_SET, span)


def default_blocks(m: int) -> Partition3Spec:
    """Canonical valid window division for any m >= 21.

    Pair starts sit on the grid 66 + 30t, shifted right past the center
    set, clipped to the window; M2 takes the rest. If validation ever
    failed, pair starts would slide left one step at a time until it
    passes; the grid never actually needs the repair.
    """
    if m < MIN_WINDOW_M:
        raise InvalidParameterError(f"default_blocks needs m >= 21, got {m}")
    center = CENTER_SET.bits
    hi = 59 + m

    starts = []
    t = 0
    while True:
        p = 66 + 30 * t
        while (center >> p) & 3:  # pair {p, p+1} touches the center set
            p += 1
        if p + 1 > hi:
            break
        starts.append(p)
        t += 1

    def build(pair_starts):
        m1 = IntSet([x for p in pair_starts for x in (p, p + 1)])
        return Partition3Spec(m, m1, middle_window(m) - m1)

    spec = build(starts)
    for _ in range(len(starts) * 40):
        if not validate_partition_spec(spec):
            return spec
        moved = False
        for i in reversed(range(len(starts))):
            q = starts[i] - 1
            floor = 66 if i == 0 else starts[i - 1] + 2
            while q >= floor and (center >> q) & 3:
                q -= 1
            if q >= floor:
                starts[i] = q
                moved = True
                break
        if not moved:
            break
        spec = build(starts)
    violations = validate_partition_spec(spec)
    if violations:
        raise ConstraintViolationError(violations)
    return spec
