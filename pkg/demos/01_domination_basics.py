"""Validate domination variants by hand on a few small graphs."""

from domkit import (
    build_standard,
    efficient,
    in_sd_class,
    independent_one_k,
    one_k,
    satisfies,
    spanning_number,
    total_one_k,
)

# A path on four vertices: 0 - 1 - 2 - 3.  The middle pair {1, 2} touches
# every vertex exactly once, so it is a total [1,2]-set.
p4 = build_standard("path", 4)
middle = {1, 2}
print("P4, S = {1, 2}")
for v in range(4):
    print(f"  spanning number of {v}: {spanning_number(p4, middle, v)}")
print("  total [1,2]-set:", satisfies(p4, middle, total_one_k(2)))

# On the six-cycle, the antipodal pair {0, 3} is an efficient dominating set:
# every outside vertex sees exactly one member, members see none.
c6 = build_standard("cycle", 6)
print("\nC6, S = {0, 3}")
print("  efficient dominating:", satisfies(c6, {0, 3}, efficient()))
print("  independent [1,2]:", satisfies(c6, {0, 3}, independent_one_k(2)))

# On the five-cycle, {0, 2} is an independent [1,2]-set, but both members
# lack in-set neighbors while sitting at distance 2, so the pair is not
# "scattered" in the sense the product theorems need.
c5 = build_standard("cycle", 5)
print("\nC5, S = {0, 2}")
print("  independent [1,2]:", satisfies(c5, {0, 2}, independent_one_k(2)))
print("  scattered 1-dependent class:", in_sd_class(c5, {0, 2}, 1, 2))

# Every vertex set is a [1,k]-set of its own graph when nothing is outside.
print("\nwhole vertex set of C5 is a [1,1]-set:",
      satisfies(c5, set(range(5)), one_k(1)))
