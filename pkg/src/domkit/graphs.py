"""Immutable simple graphs, standard families, and the lexicographic product.

Vertices are always the integers ``0..n-1``.  Product vertices use the fixed
encoding ``id(g, h) = g * n_h + h`` so that witnesses and reports are
reproducible across runs.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

Edge = tuple[int, int]

STANDARD_FAMILIES = ("path", "cycle", "complete", "star", "empty")


class Graph:
    """Undirected simple graph with adjacency-set representation.

    Duplicate edges collapse, self-loops are rejected, adjacency is kept
    symmetric.  Instances are immutable after construction and safe to share
    between threads.
    """

    __slots__ = ("n", "_adj", "_masks", "_dist")

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._masks = tuple(sum(1 << w for w in s) for s in self._adj)
        self._dist: tuple[tuple[float, ...], ...] | None = None

    # -- basic accessors ---------------------------------------------------

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    @property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Per-vertex adjacency as bitmasks (bit ``w`` set iff ``w`` adjacent)."""
        return self._masks

    def edges(self) -> Iterator[Edge]:
        """Yield edges as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def max_degree(self) -> int:
        return max((len(s) for s in self._adj), default=0)

    def min_degree(self) -> int:
        return min((len(s) for s in self._adj), default=0)

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if not self._adj[v])

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    # -- equality / hashing (used by tests and round-trip checks) ----------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    # -- distances ----------------------------------------------------------

    def distance_matrix(self) -> tuple[tuple[float, ...], ...]:
        """All-pairs shortest-path lengths (``math.inf`` when disconnected)."""
        if self._dist is None:
            self._dist = tuple(self._bfs(v) for v in range(self.n))
        return self._dist

    def _bfs(self, source: int) -> tuple[float, ...]:
        dist: list[float] = [math.inf] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if dist[w] == math.inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return tuple(dist)


def build_standard(family: str, n: int) -> Graph:
    """Construct a named graph family with canonical vertex order.

    ``path``: 0-1-...-(n-1); ``cycle`` additionally closes {n-1, 0} and
    requires n >= 3; ``star`` has center 0.
    """
    if family not in STANDARD_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n < 1:
        raise ValueError("n must be positive")
    if family == "path":
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        if n < 3:
            raise ValueError("cycle requires n >= 3")
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if family == "star":
        return Graph(n, [(0, i) for i in range(1, n)])
    return Graph(n)  # empty


def complement(graph: Graph) -> Graph:
    """Graph with edge {u, v} present iff absent in the input (u != v)."""
    n = graph.n
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if v not in graph.neighbors(u)
    ]
    return Graph(n, edges)


def distance(graph: Graph, u: int, v: int) -> float:
    """Shortest-path length between u and v; ``math.inf`` when disconnected."""
    graph._check_vertex(u)
    graph._check_vertex(v)
    return graph.distance_matrix()[u][v]


def is_connected(graph: Graph) -> bool:
    """True iff a breadth-first search from vertex 0 reaches every vertex."""
    if graph.n < 1:
        raise ValueError("connectivity is defined for n >= 1")
    if graph.n == 1:
        return True
    return all(d < math.inf for d in graph.distance_matrix()[0])


@dataclass(frozen=True)
class ProductIndex:
    """Bijection between product vertex ids and factor pairs (g, h).

    The encoding ``id(g, h) = g * n_h + h`` is fixed; ``h_layer(g)`` is the
    copy of the second factor sitting above ``g``, ``g_layer(h)`` the copy of
    the first factor through ``h``.
    """

    n_g: int
    n_h: int

    def id_of(self, g: int, h: int) -> int:
        if not (0 <= g < self.n_g and 0 <= h < self.n_h):
            raise ValueError(f"pair ({g}, {h}) out of range")
        return g * self.n_h + h

    def pair_of(self, vid: int) -> tuple[int, int]:
        if not (0 <= vid < self.n_g * self.n_h):
            raise ValueError(f"product id {vid} out of range")
        return divmod(vid, self.n_h)

    def h_layer(self, g: int) -> tuple[int, ...]:
        return tuple(g * self.n_h + h for h in range(self.n_h))

    def g_layer(self, h: int) -> tuple[int, ...]:
        return tuple(g * self.n_h + h for g in range(self.n_g))

    def layer_profile(self, vertices: Iterable[int]) -> tuple[int, ...]:
        """Per-h_layer counts |D ∩ H^g| for a set D of product ids."""
        counts = [0] * self.n_g
        for vid in vertices:
            g, _ = self.pair_of(vid)
            counts[g] += 1
        return tuple(counts)


def lex_product(g: Graph, h: Graph) -> tuple[Graph, ProductIndex]:
    """Lexicographic product: (g1,h1) ~ (g2,h2) iff g1~g2, or g1=g2 and h1~h2."""
    idx = ProductIndex(g.n, h.n)
    edges: list[Edge] = []
    for u, v in g.edges():
        for hu in range(h.n):
            for hv in range(h.n):
                edges.append((idx.id_of(u, hu), idx.id_of(v, hv)))
    for gu in range(g.n):
        for hu, hv in h.edges():
            edges.append((idx.id_of(gu, hu), idx.id_of(gu, hv)))
    return Graph(g.n * h.n, edges), idx


# -- edge-list text format ---------------------------------------------------
#
# First line "n m"; then m lines "u v" with 0-based ids.  '#' starts a
# comment.  The writer emits edges with u < v in ascending order, which is
# the bit-exact canonical form.


def format_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    tokens: list[str] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            tokens.extend(line.split())
    if len(tokens) < 2:
        raise ValueError("edge list must start with 'n m'")
    try:
        numbers = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"malformed edge list: {exc}") from None
    n, m = numbers[0], numbers[1]
    if len(numbers) != 2 + 2 * m:
        raise ValueError(f"expected {m} edges, found {(len(numbers) - 2) / 2:g}")
    edges = [(numbers[i], numbers[i + 1]) for i in range(2, len(numbers), 2)]
    return Graph(n, edges)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def save_graph(graph: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(graph))
