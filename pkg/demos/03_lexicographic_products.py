"""Lexicographic products, layer bookkeeping, and the layer-cardinality bound."""

import random

from domkit import Graph, build_standard, is_connected, lex_product, min_set, total_one_k

g = build_standard("path", 3)
h = build_standard("cycle", 4)
product, idx = lex_product(g, h)
print(f"P3 o C4: {product.n} vertices, {product.num_edges} edges")
print("  edge count formula:", g.num_edges * h.n**2 + g.n * h.num_edges)
print("  layer above g=1:", idx.h_layer(1))
print("  layer through h=2:", idx.g_layer(2))

# Minimum total [1,2]-sets of a product with a nontrivial connected first
# factor never put three vertices in one layer; watch the profile on a few
# random pairs.
rng = random.Random(7)
print("\nlayer profiles of minimum total [1,2]-sets:")
found = 0
while found < 5:
    n_g, n_h = rng.randint(2, 4), rng.randint(2, 4)
    g = Graph(n_g, [(u, v) for u in range(n_g) for v in range(u + 1, n_g)
                    if rng.random() < 0.7])
    if not is_connected(g):
        continue
    h = Graph(n_h, [(u, v) for u in range(n_h) for v in range(u + 1, n_h)
                    if rng.random() < 0.5])
    product, idx = lex_product(g, h)
    r = min_set(product, total_one_k(2))
    if not r.exists:
        continue
    profile = idx.layer_profile(r.witness)
    print(f"  |G|={n_g} |H|={n_h}  gamma={r.gamma}  profile={profile}")
    assert max(profile) <= 2
    found += 1
