"""Structural conditions that force a set to be not sum-dominant.

Both checks look only at the gap sequence of A (consecutive differences
of the sorted elements), so they run in O(|A|) and never touch the
quadratic-size sumset. Each returns a LemmaVerdict: applies=True means
the hypothesis holds and the set is guaranteed not sum-dominant;
applies=False says nothing either way.

ms_condition1: if every gap is at most 2, then |A+A| <= |A-A|. With max
element M and min 0, A-A realizes every magnitude that A+A can miss
often enough that sums never pull ahead; small gaps leave no room for
the asymmetry sum-dominance needs.

ms_condition2: if every gap is either 1 or m, and the first and last
maximal runs of unit gaps each contain at least m-1 unit steps, then A
is not sum-dominant. A set whose gaps are all m (no unit runs at all)
is an arithmetic progression and the condition applies vacuously.

new_sums_on_extend measures the marginal cost of growing a set: how
many sums (x + a for a in A u {x}) are new when x joins A. Extending
an AP {0..n-1} by the next term always adds exactly 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import IntSet, UNIVERSE_CAP, gaps_of
from .errors import EmptySetError, InvalidParameterError, UniverseOverflowError

NOT_SUM_DOMINANT = "not-sum-dominant"


@dataclass(frozen=True)
class ArithProg:
    """Arithmetic progression start, start+diff, ..., start+(length-1)*diff."""

    start: int
    diff: int
    length: int

    def __post_init__(self):
        if self.start < 0:
            raise InvalidParameterError(f"start {self.start} is negative")
        if self.diff < 1:
            raise InvalidParameterError(f"diff {self.diff} is not positive")
        if self.length < 1:
            raise InvalidParameterError(f"length {self.length} is not positive")

    @property
    def last(self) -> int:
        return self.start + (self.length - 1) * self.diff

    def expand(self) -> IntSet:
        # cap check before materializing; length can be huge
        if self.last >= UNIVERSE_CAP:
            raise UniverseOverflowError(
                f"progression reaches {self.last}, beyond the cap {UNIVERSE_CAP}"
            )
        return IntSet(self.start + i * self.diff for i in range(self.length))


@dataclass(frozen=True)
class LemmaVerdict:
    """Outcome of a structural check.

    applies=True carries the guarantee string; applies=False carries
    None and promises nothing about the set.
    """

    applies: bool
    guarantee: str | None = None


_HOLDS = LemmaVerdict(True, NOT_SUM_DOMINANT)
_NO_CLAIM = LemmaVerdict(False, None)


def is_arithmetic_progression(a: IntSet) -> ArithProg | None:
    """Recognize A as an AP, or return None.

    Singletons are APs of length 1 with diff 1 by convention.
    """
    if len(a) == 0:
        raise EmptySetError("empty set is not a progression")
    if len(a) == 1:
        return ArithProg(a.min, 1, 1)
    gaps = gaps_of(a)
    d = gaps[0]
    if any(g != d for g in gaps):
        return None
    return ArithProg(a.min, d, len(a))


def ms_condition1(a: IntSet) -> LemmaVerdict:
    """Gap condition: every consecutive gap at most 2.

    Applying sets satisfy |A+A| <= |A-A|, i.e. are not sum-dominant.
    Singletons apply vacuously.
    """
    if len(a) == 0:
        raise EmptySetError("cannot check the empty set")
    if all(g <= 2 for g in gaps_of(a)):
        return _HOLDS
    return _NO_CLAIM


def ms_condition2(a: IntSet, m: int) -> LemmaVerdict:
    """Two-valued gap condition with block gap m >= 2.

    Applies when every gap is 1 or m and the first and last maximal
    runs of unit gaps each have length at least m-1. A pure-m gap
    sequence (no unit runs) applies vacuously: the set is an AP.
    Applying sets are not sum-dominant.
    """
    if len(a) == 0:
        raise EmptySetError("cannot check the empty set")
    if m < 2:
        raise InvalidParameterError(f"block gap m={m} must be at least 2")
    gaps = gaps_of(a)
    if any(g != 1 and g != m for g in gaps):
        return _NO_CLAIM

    runs = []
    cur = 0
    for g in gaps:
        if g == 1:
            cur += 1
        elif cur:
            runs.append(cur)
            cur = 0
    if cur:
        runs.append(cur)

    if not runs:
        return _HOLDS
    if runs[0] >= m - 1 and runs[-1] >= m - 1:
        return _HOLDS
    return _NO_CLAIM


def infer_block_gap(a: IntSet) -> int | None:
    """The unique gap value other than 1, if exactly one exists."""
    if len(a) == 0:
        raise EmptySetError("empty set has no gaps")
    other = {g for g in gaps_of(a) if g != 1}
    if len(other) == 1:
        return other.pop()
    return None


def new_sums_on_extend(base: IntSet, x: int) -> int:
    """Count sums gained when x joins base.

    Returns |B+B| - |A+A| for B = A u {x}. The new sums are exactly
    {x + b : b in B} minus the old sumset, computed with one extra
    shift on the bitmask. x must be a fresh nonnegative element below
    the universe cap.
    """
    if len(base) == 0:
        raise EmptySetError("cannot extend the empty set")
    if x < 0:
        raise InvalidParameterError(f"extension point {x} is negative")
    if x >= UNIVERSE_CAP:
        raise UniverseOverflowError(f"extension point {x} is beyond the cap")
    if x in base:
        raise InvalidParameterError(f"extension point {x} is already in the set")
    bits = base.bits
    old = 0
    for e in base.elements:
        old |= bits << e
    bits2 = bits | (1 << x)
    new = old | (bits2 << x)
    return new.bit_count() - old.bit_count()
