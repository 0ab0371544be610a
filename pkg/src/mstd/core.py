"""Finite integer sets and their sum/difference arithmetic.

For a finite set A of nonnegative integers the sumset and difference set
are

    A+A = {a + b : a, b in A}
    A-A = {a - b : a, b in A}

A-A is symmetric about 0, so it is stored as the set of nonnegative
magnitudes D = {|a - b|} and its true cardinality recovered as
2*|D \\ {0}| + 1 = 2*|D| - 1 (0 is always present for nonempty A). A is

    sum-dominant        if |A+A| > |A-A|
    balanced            if |A+A| = |A-A|
    difference-dominant if |A+A| < |A-A|

with excess := |A+A| - |A-A|. Sums are "harder to make" than differences
(a+b gives one sum, a-b gives two differences), so sum-dominant sets are
rare; the interesting computations are exact counts over many candidate
sets.

The canonical machine representation is a dense bitmask: a set A with
max(A) = M becomes the integer sum of 2**a over a in A, i.e. bit a is set
iff a is in A. Then for each a in A

    bits(A) << a   contributes exactly the sums {a + b : b in A}
    bits(A) >> a   contributes the magnitudes {b - a : b in A, b >= a}

so OR-accumulating |A| shifted copies yields bits(A+A) and bits(D), and
popcounts give the cardinalities. This does |A| big-integer operations on
~2M-bit words instead of |A|^2 Python-level pair loops, which is what
makes the exhaustive searches in mstd.search feasible in pure Python.

Elements must lie in [0, UNIVERSE_CAP); beyond that the dense masks stop
being a sensible encoding and construction raises UniverseOverflowError.

Gap notation describes a set by its first element and the run of
consecutive gaps: {2, 3, 9, 10, 15} is written "(2 | 1, 6, 1, 5)" and a
singleton {7} is "(7 |)". Parsing and formatting are exact inverses on
canonical text.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    DegenerateSetError,
    EmptySetError,
    InvalidParameterError,
    ParseError,
    UniverseOverflowError,
)

UNIVERSE_CAP = 1 << 24


# ---------------------------------------------------------------------------
# bitmask kernel


def bits_of(elements: Iterable[int]) -> int:
    """Pack an iterable of nonnegative ints into a dense bitmask."""
    bits = 0
    for e in elements:
        bits |= 1 << e
    return bits


def elements_of(bits: int) -> tuple[int, ...]:
    """Unpack a bitmask into a sorted tuple of elements."""
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return tuple(out)


def sumset_bits(bits: int) -> int:
    """Bitmask of A+A from the bitmask of A."""
    s = 0
    b = bits
    while b:
        low = b & -b
        s |= bits << (low.bit_length() - 1)
        b ^= low
    return s


def diff_bits(bits: int) -> int:
    """Bitmask of the nonnegative difference magnitudes of A."""
    d = 0
    b = bits
    while b:
        low = b & -b
        d |= bits >> (low.bit_length() - 1)
        b ^= low
    return d


def sum_diff_cards(bits: int, elements: tuple[int, ...] | None = None) -> tuple[int, int]:
    """Cardinalities (|A+A|, |A-A|) straight from a bitmask.

    Parameters
    ----------
    bits : int
        Dense bitmask of a nonempty set A.
    elements : tuple of int, optional
        The elements of A if the caller already has them; skips one
        unpacking pass in hot loops.

    Returns
    -------
    (int, int)
        |A+A| and the signed-difference cardinality 2*popcount(D) - 1.
    """
    if elements is None:
        elements = elements_of(bits)
    s = 0
    d = 0
    for e in elements:
        s |= bits << e
        d |= bits >> e
    return s.bit_count(), 2 * d.bit_count() - 1


# ---------------------------------------------------------------------------
# set carrier


class IntSet:
    """Immutable finite set of nonnegative integers below UNIVERSE_CAP.

    Stores both the sorted element tuple and the dense bitmask; all
    arithmetic in this package runs on the mask. Supports len, iteration,
    membership, equality/hash, and the set operators | & - ^.
    """

    __slots__ = ("_elements", "_bits")

    def __init__(self, elements: Iterable[int] = ()):
        elems = sorted(set(elements))
        bits = 0
        for e in elems:
            if not isinstance(e, int) or isinstance(e, bool):
                raise InvalidParameterError(f"set element {e!r} is not an int")
            if e < 0:
                raise InvalidParameterError(f"set element {e} is negative")
            if e >= UNIVERSE_CAP:
                raise UniverseOverflowError(
                    f"element {e} is at or beyond the universe cap {UNIVERSE_CAP}"
                )
            bits |= 1 << e
        self._elements = tuple(elems)
        self._bits = bits

    @classmethod
    def from_bits(cls, bits: int) -> "IntSet":
        """Rebuild an IntSet from a dense bitmask."""
        if bits < 0:
            raise InvalidParameterError("bitmask is negative")
        if bits.bit_length() > UNIVERSE_CAP:
            raise UniverseOverflowError("bitmask extends beyond the universe cap")
        self = object.__new__(cls)
        self._elements = elements_of(bits)
        self._bits = bits
        return self

    @property
    def elements(self) -> tuple[int, ...]:
        return self._elements

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def min(self) -> int:
        if not self._elements:
            raise EmptySetError("empty set has no minimum")
        return self._elements[0]

    @property
    def max(self) -> int:
        if not self._elements:
            raise EmptySetError("empty set has no maximum")
        return self._elements[-1]

    @property
    def diameter(self) -> int:
        """max - min; needs at least one element."""
        return self.max - self.min

    def shift(self, offset: int) -> "IntSet":
        """Translate every element by offset (result must stay nonnegative)."""
        if self._elements and self._elements[0] + offset < 0:
            raise InvalidParameterError(f"shift by {offset} goes negative")
        return IntSet(e + offset for e in self._elements)

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self._elements)

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and 0 <= x and (self._bits >> x) & 1 == 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntSet):
            return self._bits == other._bits
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._bits)

    def __or__(self, other: "IntSet") -> "IntSet":
        return IntSet.from_bits(self._bits | other._bits)

    def __and__(self, other: "IntSet") -> "IntSet":
        return IntSet.from_bits(self._bits & other._bits)

    def __sub__(self, other: "IntSet") -> "IntSet":
        return IntSet.from_bits(self._bits & ~other._bits)

    def __xor__(self, other: "IntSet") -> "IntSet":
        return IntSet.from_bits(self._bits ^ other._bits)

    def isdisjoint(self, other: "IntSet") -> bool:
        return self._bits & other._bits == 0

    def __repr__(self) -> str:
        return f"IntSet({{{', '.join(map(str, self._elements))}}})"


# ---------------------------------------------------------------------------
# classification


class Kind(enum.Enum):
    SUM_DOMINANT = "sum-dominant"
    BALANCED = "balanced"
    DIFFERENCE_DOMINANT = "difference-dominant"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    sum_card: int
    diff_card: int

    @property
    def excess(self) -> int:
        return self.sum_card - self.diff_card


def sumset(a: IntSet) -> IntSet:
    """The sumset A+A."""
    if len(a) == 0:
        raise EmptySetError("sumset of the empty set")
    return IntSet.from_bits(sumset_bits(a.bits))


def diffset(a: IntSet) -> tuple[IntSet, int]:
    """Difference magnitudes and the signed cardinality |A-A|.

    Returns
    -------
    (IntSet, int)
        The set {|a - b| : a, b in A} of nonnegative magnitudes, and
        2*|magnitudes| - 1, the cardinality of the full signed set A-A.
    """
    if len(a) == 0:
        raise EmptySetError("difference set of the empty set")
    mags = diff_bits(a.bits)
    return IntSet.from_bits(mags), 2 * mags.bit_count() - 1


def classify(a: IntSet) -> Classification:
    """Classify A as sum-dominant, balanced, or difference-dominant."""
    if len(a) == 0:
        raise EmptySetError("cannot classify the empty set")
    sc, dc = sum_diff_cards(a.bits, a.elements)
    if sc > dc:
        kind = Kind.SUM_DOMINANT
    elif sc < dc:
        kind = Kind.DIFFERENCE_DOMINANT
    else:
        kind = Kind.BALANCED
    return Classification(kind, sc, dc)


def symmetry_center(a: IntSet) -> int | None:
    """Doubled center c with A = c - A, or None.

    A set symmetric about x (possibly half-integral) satisfies
    A = (2x) - A; the returned c is 2x = min(A) + max(A) when the
    reflection test passes. Symmetric sets are always balanced.
    """
    if len(a) == 0:
        raise EmptySetError("empty set has no symmetry center")
    c = a.min + a.max
    for e in a.elements:
        if (c - e) not in a:
            return None
    return c


def normalize_affine(a: IntSet) -> IntSet:
    """Affine-canonical form: translate min to 0, divide out the gap gcd.

    Classification is invariant under x -> (x - min)/g, so normalized
    sets are the right keys for dedup in exhaustive scans. Needs at
    least two elements (a singleton has no gaps to scale).
    """
    if len(a) == 0:
        raise EmptySetError("cannot normalize the empty set")
    if len(a) < 2:
        raise DegenerateSetError("normalization needs at least two elements")
    lo = a.min
    shifted = [e - lo for e in a.elements]
    g = 0
    for e in shifted:
        g = math.gcd(g, e)
    return IntSet(e // g for e in shifted)


# ---------------------------------------------------------------------------
# gap notation


@dataclass(frozen=True)
class GapNotation:
    """A set as first element plus consecutive gaps: "(2 | 1, 6, 1, 5)"."""

    origin: int
    gaps: tuple[int, ...]

    def __post_init__(self):
        for g in self.gaps:
            if g < 1:
                raise InvalidParameterError(f"gap {g} is not positive")

    def to_intset(self) -> IntSet:
        if self.origin < 0:
            raise InvalidParameterError(f"origin {self.origin} is negative")
        out = [self.origin]
        for g in self.gaps:
            out.append(out[-1] + g)
        return IntSet(out)


def gaps_of(a: IntSet) -> tuple[int, ...]:
    """Consecutive gaps of a sorted nonempty set (empty tuple for singletons)."""
    if len(a) == 0:
        raise EmptySetError("empty set has no gaps")
    es = a.elements
    return tuple(es[i + 1] - es[i] for i in range(len(es) - 1))


def format_gap_notation(a: IntSet) -> str:
    """Canonical gap-notation text for a nonempty set."""
    if len(a) == 0:
        raise EmptySetError("cannot format the empty set")
    gaps = gaps_of(a)
    if not gaps:
        return f"({a.min} |)"
    return f"({a.min} | {', '.join(map(str, gaps))})"


def format_set_literal(a: IntSet) -> str:
    """Canonical brace-literal text, e.g. "{0, 1, 3}"."""
    return f"{{{', '.join(map(str, a.elements))}}}"


_INT_RE = re.compile(r"-?\d+")


def _scan_int(text: str, pos: int) -> tuple[int, int]:
    # returns (value, end); pos must point at the token start
    m = _INT_RE.match(text, pos)
    if not m:
        raise ParseError(f"expected integer, found {text[pos:pos + 1]!r}", pos)
    return int(m.group()), m.end()


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def parse_set_literal(text: str) -> IntSet:
    """Parse "{1, 2, 3}", "1,2,3", or "1 2 3" into an IntSet.

    Elements must be nonnegative decimal integers; separators are commas
    and/or whitespace; braces are optional but must be balanced. "{}" is
    the empty set. Raises ParseError with the byte offset of the first
    offending token.
    """
    pos = _skip_ws(text, 0)
    closing = -1
    if pos < len(text) and text[pos] == "{":
        depth_open = pos
        pos += 1
        closing = text.rfind("}")
        if closing < depth_open:
            raise ParseError("unbalanced '{'", depth_open)
        tail = _skip_ws(text, closing + 1)
        if tail != len(text):
            raise ParseError("trailing input after '}'", tail)
        end = closing
    else:
        if "}" in text:
            raise ParseError("unbalanced '}'", text.index("}"))
        end = len(text)

    elems = []
    want_item = True
    while True:
        pos = _skip_ws(text, pos)
        if pos >= end:
            break
        ch = text[pos]
        if ch == ",":
            if want_item:
                raise ParseError("expected integer before ','", pos)
            want_item = True
            pos += 1
            continue
        if ch == "-":
            raise ParseError("negative elements are not allowed", pos)
        if not ch.isdigit():
            raise ParseError(f"unexpected token {ch!r}", pos)
        value, pos = _scan_int(text, pos)
        elems.append(value)
        want_item = False
    if want_item and elems:
        raise ParseError("dangling ','", end)
    if closing == -1 and not elems:
        raise ParseError("no elements found", 0)
    return IntSet(elems)


def parse_gap_notation(text: str) -> GapNotation:
    """Parse "(ORIGIN | GAP, GAP, ...)" or the singleton form "(ORIGIN |)".

    Gaps must be positive integers. Raises ParseError with the byte
    offset of the first offending token.
    """
    pos = _skip_ws(text, 0)
    if pos >= len(text) or text[pos] != "(":
        raise ParseError("expected '('", pos)
    pos = _skip_ws(text, pos + 1)
    if pos < len(text) and text[pos] == "-":
        raise ParseError("origin must be nonnegative", pos)
    origin, pos = _scan_int(text, pos)
    pos = _skip_ws(text, pos)
    if pos >= len(text) or text[pos] != "|":
        raise ParseError("expected '|'", pos)
    pos += 1

    gaps = []
    want_item = True
    first = True
    while True:
        pos = _skip_ws(text, pos)
        if pos >= len(text):
            raise ParseError("expected ')'", pos)
        ch = text[pos]
        if ch == ")":
            if want_item and not first:
                raise ParseError("dangling ','", pos)
            pos += 1
            break
        if ch == ",":
            if want_item:
                raise ParseError("expected gap before ','", pos)
            want_item = True
            pos += 1
            continue
        if not want_item:
            raise ParseError("expected ',' between gaps", pos)
        gap_at = pos
        value, pos = _scan_int(text, pos)
        if value < 1:
            raise ParseError(f"gap {value} is not positive", gap_at)
        gaps.append(value)
        want_item = False
        first = False
    tail = _skip_ws(text, pos)
    if tail != len(text):
        raise ParseError("trailing input after ')'", tail)
    return GapNotation(origin, tuple(gaps))
