"""Run the exhaustive verification harness at desk scale.

Run as ``python demos/verification_run.py``.  The same checks back the
``crankmex verify`` command; the full acceptance bounds (weights to 25,
j to 12) finish in a few seconds.
"""

from crankmex import (
    count_matching,
    crank_table,
    odd_mex_series,
    partition_series,
    run_theorem_suite,
)

# The counting series: coefficients of the inverse Euler product are the
# partition numbers, and convolving with the alternating staircase series
# counts the odd-mex class (equivalently the arm-free class) by weight.
print("p(0..10)          ", partition_series(10))
print("odd-mex at j=0    ", odd_mex_series(0, 10))
print("odd-mex at j=3    ", odd_mex_series(3, 10))

# Spot check against brute-force enumeration at weight 9: sixteen partitions
# have odd mex, and sixteen have non-negative crank.
print()
print("count odd-mex(9)      ", count_matching(9, lambda lam: lam.has_odd_mex(0)))
print("count crank >= 0 (9)  ", count_matching(9, lambda lam: lam.crank() >= 0))

# The crank table, including the deliberate weight-1 convention row
# (the single negative entry) that keeps row sums and symmetry intact.
table = crank_table(8)
print()
print("crank table row n=1:", {m: table.count(m, 1) for m in (-1, 0, 1)})
print("crank table row n=4:", table.row(4))
print("symmetry failures up to 8:", table.symmetry_failures())

# The theorem suite re-proves every counting identity with explicit
# element-by-element bijective witnesses: round-trips, codomain membership,
# weight preservation, and perfect matching of the image sets.
print()
report = run_theorem_suite(max_weight=14, max_j=6)
for line in report.summary_lines():
    print(line)
