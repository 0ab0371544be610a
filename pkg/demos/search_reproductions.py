"""
Small-scale reproductions of the exhaustive searches
====================================================

Each engine enumerates a counted candidate space completely, so the
examined totals below are exact and every run reproduces them. The
same scans scale up through the CLI (see `mstd search --help`).
"""

from mstd import (
    ap_pair_scan,
    format_set_literal,
    largest_subset_scan,
    min_size_scan,
    partition3_feasible,
    two_ap_general_scan,
)


def shown(witnesses):
    return ", ".join(format_set_literal(w) for w in witnesses)


# the largest sum-dominant subset of {0..14} through both endpoints:
# discard d = 0, 1, ... middle elements until a level produces one
result, report = largest_subset_scan(15)
print(f"n=15: N = {result.n_value} after examining {report.examined} "
      f"candidate subsets")
print(f"witness: {format_set_literal(result.witness)}")
print(f"all witnesses at that level: {shown(report.witnesses)}")

# one size smaller, nothing exists
result, report = largest_subset_scan(14)
print(f"n=14: N = {result.n_value} ({report.examined} candidates, "
      "absence certified)")

# minimum cardinality: scanning every normalized set of at most 8
# elements and diameter at most 14 finds exactly the two minimal
# sum-dominant sets, both with 8 elements
report = min_size_scan(14)
print(f"\nminsize(14): {report.examined} candidates, "
      f"witnesses {shown(report.witnesses)}")
report = min_size_scan(13)
print(f"minsize(13): {report.examined} candidates, "
      f"{len(report.witnesses)} witnesses (diameter 14 is necessary)")

# unions of two progressions sharing a common difference are never
# sum-dominant; the scan verifies the full candidate space is clean
report = ap_pair_scan(20, 3)
print(f"\nappairs(span 20, d <= 3): {report.examined} pairs, "
      f"{len(report.witnesses)} sum-dominant")

# letting the two differences vary independently is the open variant;
# still clean as far as the scan reaches
report = two_ap_general_scan(15, 3)
print(f"twoap(span 15, d <= 3): {report.examined} pairs, "
      f"{len(report.witnesses)} sum-dominant")

# three-part feasibility: counting kills r <= 23, the explicit
# construction settles r >= 145, and small r yields to brute force
for r in (23, 24, 100, 145):
    out = partition3_feasible(r, exhaustive_small=True)
    line = f"r={r}: {out.status}"
    if out.reason:
        line += f" ({out.reason})"
    print("\n" + line if r == 23 else line)
