"""
Classifying integer sets and reading gap notation
=================================================

A finite set of nonnegative integers is sum-dominant when its sumset
A+A outgrows its difference set A-A. Differences come in +/- pairs
while sums do not, so difference-dominant sets are the norm and
sum-dominant ones take engineering to find.
"""

from mstd import (
    IntSet,
    classify,
    diffset,
    format_gap_notation,
    normalize_affine,
    parse_gap_notation,
    sumset,
    symmetry_center,
)

# the smallest known sum-dominant set: 8 elements, diameter 14
a = IntSet([0, 2, 3, 4, 7, 11, 12, 14])
c = classify(a)
print(f"A = {a}")
print(f"|A+A| = {c.sum_card}, |A-A| = {c.diff_card} -> {c.kind.value}")

# the sumset misses 4 values of {0..28}; the differences miss 6 of -14..14
s = sumset(a)
missing = [v for v in range(29) if v not in s]
print(f"A+A misses {missing}")
mags, card = diffset(a)
print(f"difference magnitudes {mags} give |A-A| = {card}")

# a generic random-looking set is difference-dominant
b = IntSet([0, 1, 5, 9, 17, 22])
print(f"\nB = {b} -> {classify(b).kind.value} (excess {classify(b).excess})")

# symmetric sets are perfectly balanced: reflecting about the center
# sends sums to differences one for one
sym = IntSet([1, 4, 6, 8, 11])
print(f"\nC = {sym} has symmetry center {symmetry_center(sym)}")
print(f"C is {classify(sym).kind.value}")

# gap notation writes a set as its minimum plus the run of gaps;
# it round-trips exactly
text = format_gap_notation(a)
print(f"\nA in gap notation: {text}")
back = parse_gap_notation(text).to_intset()
print(f"parsed back: {back} (equal: {back == a})")

# affine normalization translates to min 0 and divides out the gap gcd;
# the classification never changes under either operation
scaled = IntSet([100 + 3 * x for x in a.elements])
norm = normalize_affine(scaled)
print(f"\n100 + 3*A = {scaled}")
print(f"normalized: {norm} (equal to A: {norm == a})")
print(f"both classify {classify(scaled).kind.value}")
