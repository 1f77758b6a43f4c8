"""Walk one partition through every bijection, showing the full traces.

Run as ``python demos/bijection_walkthrough.py``.  The partition used here
exercises every branch: it has an odd mex offset at j = 0, 3, 5 (among
others) and carries the parts 3 and 5, so the composed crank map applies.
"""

from crankmex import (
    Partition,
    fold,
    fold_complement,
    mex_split,
    mex_to_crank,
    negate_crank,
    to_low_crank,
    unfold,
    unfold_complement,
)

lam = Partition.from_text("11,8,7,7,5,5,4,3,2,2")
print(f"start: {lam}  (weight {lam.weight}, crank {lam.crank()})")

# Step 1: the mex decomposition peels off the blocking run of consecutive
# parts above j, leaving a pair (staircase, rest).
for j in (0, 1, 3, 5):
    dec = mex_split(j, lam)
    print(f"j={j}: mex={lam.mex(j)}, run length {dec.run}, rest {dec.rest or '(empty)'}")

# Step 2: folding.  Iterated staircase moves shrink the staircase to nothing
# while reshaping the partition; the result avoids the arm value j.  The trace
# records every move (case 1 reshapes in place, case 2 shortens the staircase).
print()
for j in (0, 1, 3, 5):
    out, trace = fold(j, lam)
    print(f"fold at j={j}: {len(trace)} step(s) -> {out}")
    for i, step in enumerate(trace.steps, 1):
        print(
            f"   {i}. k={step.before.k} case ({step.case}) d={step.d}: "
            f"{step.before.lam} -> {step.after.lam}"
        )
    back, _ = unfold(j, out)
    assert back == lam  # unfold is the exact inverse

# The complementary classes (even mex offset <-> arm present) have their own
# odd-staircase variant.
print()
mu = Partition.from_text("5,3,2,2")
out, _ = fold_complement(2, mu)
print(f"fold_complement at j=2: {mu} -> {out} (arm 2 present: {out.has_arm(2)})")
assert unfold_complement(2, out)[0] == mu

# Step 3: the low-crank trade.  An arm-free partition with a part j swaps its
# guaranteed structure for a batch of 1s, forcing the crank to -j or below.
print()
nu, _ = fold(5, lam)
low = to_low_crank(5, nu)
print(f"to_low_crank at j=5: {nu} -> {low}  (crank {low.crank()})")

# Step 4: the crank-negating involution.
flipped = negate_crank(low)
print(f"negate_crank: {low} (crank {low.crank()}) -> {flipped} (crank {flipped.crank()})")

# The composition of the three maps carries the odd-mex class with a part j
# onto the partitions of crank at least j, weight by weight.
print()
for j in (0, 3, 5):
    image = mex_to_crank(j, lam)
    print(f"mex_to_crank at j={j}: {lam} -> {image}  (crank {image.crank()})")
