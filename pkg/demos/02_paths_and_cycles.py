"""Exact solver versus the closed forms for paths and cycles."""

from domkit import (
    build_standard,
    closed_form,
    independent_one_k,
    min_set,
    one_k,
    total_one_k,
)

print("family  n   total[1,2]  [1,2]  indep[1,2]   (solver = closed form)")
for family in ("path", "cycle"):
    for n in range(3, 13):
        graph = build_standard(family, n)
        rows = []
        for kind_name, kind in (
            ("t1k", total_one_k(2)),
            ("one_k", one_k(2)),
            ("i1k", independent_one_k(2)),
        ):
            got = min_set(graph, kind).gamma
            want = closed_form(family, n, kind_name)
            rows.append(f"{got}={want}" if got == want else f"{got}!={want}")
        print(f"{family:6}  {n:2}   {rows[0]:>9}  {rows[1]:>5}  {rows[2]:>9}")

# The minimum witnesses themselves are deterministic: the lexicographically
# smallest set of minimum size, so reruns reproduce byte-identical reports.
r = min_set(build_standard("cycle", 9), total_one_k(2))
print("\nC9 minimum total [1,2]-set:", r.witness, "size", r.gamma)
print("JSON:", r.to_json())
