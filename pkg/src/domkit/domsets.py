"""Predicates for the domination variants handled by the toolkit.

Every variant is expressed through four spanning-number bounds: closed
intervals for members of the candidate set and for vertices outside it.
``None`` means unbounded above.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph

VertexSet = frozenset[int]

BASES = (
    "dominating",
    "total_dominating",
    "one_k",
    "total_one_k",
    "independent_one_k",
    "j_dependent_one_k",
    "j_dependent_total_one_k",
    "efficient",
    "open_efficient",
)

_K_BASES = frozenset(
    {"one_k", "total_one_k", "independent_one_k", "j_dependent_one_k", "j_dependent_total_one_k"}
)
_J_BASES = frozenset({"j_dependent_one_k", "j_dependent_total_one_k"})


@dataclass(frozen=True)
class SetKind:
    """A domination variant, optionally parameterized by k and j.

    ``k`` is the upper spanning bound for off-set vertices (k >= 1); ``j``
    the dependency bound for set members (0 <= j <= k).
    """

    base: str
    k: int | None = None
    j: int | None = None

    def __post_init__(self) -> None:
        if self.base not in BASES:
            raise ValueError(f"unknown set kind {self.base!r}")
        if self.base in _K_BASES:
            if self.k is None or self.k < 1:
                raise ValueError(f"{self.base} requires k >= 1, got {self.k}")
        elif self.k is not None:
            raise ValueError(f"{self.base} takes no k parameter")
        if self.base in _J_BASES:
            if self.j is None or self.j < 0:
                raise ValueError(f"{self.base} requires j >= 0, got {self.j}")
            if self.j > self.k:  # type: ignore[operator]
                raise ValueError(f"j={self.j} must not exceed k={self.k}")
        elif self.j is not None:
            raise ValueError(f"{self.base} takes no j parameter")

    def bounds(self) -> tuple[int, int | None, int, int | None]:
        """(lo_in, hi_in, lo_out, hi_out) spanning-number bounds; None = unbounded."""
        base, k, j = self.base, self.k, self.j
        if base == "dominating":
            return (0, None, 1, None)
        if base == "total_dominating":
            return (1, None, 1, None)
        if base == "one_k":
            return (0, None, 1, k)
        if base == "total_one_k":
            return (1, k, 1, k)
        if base == "independent_one_k":
            return (0, 0, 1, k)
        if base == "j_dependent_one_k":
            return (0, j, 1, k)
        if base == "j_dependent_total_one_k":
            return (1, j, 1, k)
        if base == "efficient":
            return (0, 0, 1, 1)
        return (1, 1, 1, 1)  # open_efficient

    def label(self) -> str:
        parts = [self.base]
        if self.j is not None:
            parts.append(f"j={self.j}")
        if self.k is not None:
            parts.append(f"k={self.k}")
        return " ".join(parts)


def dominating() -> SetKind:
    return SetKind("dominating")


def total_dominating() -> SetKind:
    return SetKind("total_dominating")


def one_k(k: int) -> SetKind:
    return SetKind("one_k", k=k)


def total_one_k(k: int) -> SetKind:
    return SetKind("total_one_k", k=k)


def independent_one_k(k: int) -> SetKind:
    return SetKind("independent_one_k", k=k)


def j_dependent_one_k(j: int, k: int) -> SetKind:
    return SetKind("j_dependent_one_k", k=k, j=j)


def j_dependent_total_one_k(j: int, k: int) -> SetKind:
    return SetKind("j_dependent_total_one_k", k=k, j=j)


def efficient() -> SetKind:
    return SetKind("efficient")


def open_efficient() -> SetKind:
    return SetKind("open_efficient")


def _as_vertex_set(graph: Graph, members: Iterable[int]) -> VertexSet:
    s = frozenset(members)
    for v in s:
        if not (0 <= v < graph.n):
            raise ValueError(f"vertex {v} not in 0..{graph.n - 1}")
    return s


def spanning_number(graph: Graph, members: Iterable[int], v: int) -> int:
    """Number of neighbors of v inside the candidate set: |N(v) ∩ S|."""
    s = _as_vertex_set(graph, members)
    return len(graph.neighbors(v) & s)


def satisfies(graph: Graph, members: Iterable[int], kind: SetKind) -> bool:
    """Decide whether the vertex set meets every bound of the named variant."""
    s = _as_vertex_set(graph, members)
    lo_in, hi_in, lo_out, hi_out = kind.bounds()
    for v in range(graph.n):
        sn = len(graph.neighbors(v) & s)
        if v in s:
            if sn < lo_in or (hi_in is not None and sn > hi_in):
                return False
        else:
            if sn < lo_out or (hi_out is not None and sn > hi_out):
                return False
    return True


def in_sd_class(graph: Graph, members: Iterable[int], j: int, k: int) -> bool:
    """Scattered-dependence test: a j-dependent [1,k]-set whose members with
    no in-set neighbor sit at distance >= 3 from every other member."""
    s = _as_vertex_set(graph, members)
    if not satisfies(graph, s, j_dependent_one_k(j, k)):
        return False
    dist = graph.distance_matrix() if s else ()
    for v in s:
        if graph.neighbors(v) & s:
            continue
        for w in s:
            if w != v and dist[v][w] < 3:
                return False
    return True
