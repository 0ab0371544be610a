"""
Families of sum-dominant sets and a three-part interval split
=============================================================

Two parametric families produce a sum-dominant set for every admitted
parameter, and a block construction splits the whole interval
{1..124+m} into three disjoint sum-dominant parts.
"""

from mstd import (
    IntSet,
    Partition3Spec,
    classify,
    default_blocks,
    k_set,
    middle_window,
    nathanson_set,
    new_sums_on_extend,
    partition3,
    validate_partition_spec,
)

# K(m) keeps {0,1,2,4}, the run {7..m}, and the tail {m+4, m+6, m+7};
# the excess is exactly +1 no matter how long the middle run grows
for m in (9, 12, 40):
    ks = k_set(m)
    c = classify(ks)
    print(f"k_set({m}): {len(ks)} elements, "
          f"|A+A|-|A-A| = {c.sum_card}-{c.diff_card} = {c.excess}")
print(f"k_set(9) = {k_set(9)}")

# the three-progression family does the same with a sparser skeleton
print()
for k in (5, 9, 20):
    ns = nathanson_set(k)
    c = classify(ns)
    print(f"nathanson_set({k}): {len(ns)} elements, excess {c.excess}")
print(f"nathanson_set(5) = {nathanson_set(5)}")

# why long runs are cheap: growing the interval {0..n-1} by its next
# point always adds exactly two sums (2n-1 and 2n), and two differences
for n in (6, 12, 30):
    print(f"new sums when {n} joins {{0..{n - 1}}}: "
          f"{new_sums_on_extend(IntSet(range(n)), n)}")

# the three-part split: fixed anchor blocks at both ends, a free middle
# window {66..59+m} minus the fixed center part, divided by the caller
print()
m = 21
print(f"middle window at m={m}: {middle_window(m)}")
spec = Partition3Spec(m, IntSet([71, 72]), IntSet([67, 74, 75, 76, 79]))
print(f"spec valid: {validate_partition_spec(spec) == []}")

res = partition3(spec)
for name, part in (("A1", res.a1), ("A2", res.a2), ("S", res.s)):
    c = classify(part)
    print(f"{name}: {len(part)} elements, excess {c.excess:+d}")
print(f"union is {{1..{res.span}}}: "
      f"{(res.a1 | res.a2 | res.s) == IntSet(range(1, res.span + 1))}")

# a bad division is rejected with the violated constraints named
bad = Partition3Spec(m, IntSet([67, 71, 74, 79]), IntSet([72, 75, 76]))
print("\na division with no pair chain reports: "
      + ", ".join(v.constraint for v in validate_partition_spec(bad)))

# default_blocks picks a valid division for any m >= 21
for m in (21, 50, 100):
    spec = default_blocks(m)
    res = partition3(spec)
    kinds = {classify(p).kind.value for p in (res.a1, res.a2, res.s)}
    print(f"m={m}: span {res.span}, all parts {kinds.pop()}")
