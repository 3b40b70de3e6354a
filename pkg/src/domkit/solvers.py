"""Exact minimum-cardinality search for every set kind, plus path/cycle closed forms.

The search enumerates candidate sets as bitmasks in ascending cardinality and,
within a cardinality, in ascending lexicographic order of the sorted vertex
ids, so the first satisfying set found is the canonical witness.  Pruning is
sound-only: a branch is cut when a spanning number already exceeds the
applicable upper bound with no way to recover, or when a vertex that still
needs a neighbor in the set has no remaining candidate neighbor.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from typing import Callable

from .domsets import SetKind
from .graphs import Graph

DEFAULT_MAX_N = 32


class GraphTooLargeError(ValueError):
    """Raised when a graph exceeds the solver cap and force is not set."""


def resolve_cap(max_n: int | None = None) -> int:
    """Solver vertex cap: explicit argument, else DOMKIT_MAX_N, else 32."""
    if max_n is not None:
        return max_n
    env = os.environ.get("DOMKIT_MAX_N")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"DOMKIT_MAX_N must be an integer, got {env!r}") from None
    return DEFAULT_MAX_N


def _check_cap(graph: Graph, max_n: int | None, force: bool) -> None:
    cap = resolve_cap(max_n)
    if graph.n > cap and not force:
        raise GraphTooLargeError(
            f"graph has {graph.n} vertices, cap is {cap} (pass force=True to override)"
        )


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact minimum search.

    ``exists`` iff ``gamma``/``witness`` are present; the witness is the
    lexicographically smallest minimum set; ``nodes_explored`` counts search
    tree nodes for reproducibility checks.
    """

    kind: SetKind
    exists: bool
    gamma: int | None
    witness: tuple[int, ...] | None
    nodes_explored: int

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.base,
            "j": self.kind.j,
            "k": self.kind.k,
            "exists": self.exists,
            "gamma": self.gamma,
            "witness": None if self.witness is None else list(self.witness),
            "nodes_explored": self.nodes_explored,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class _Search:
    """Bitmask DFS over candidate sets for one (graph, kind) pair."""

    __slots__ = (
        "n", "adj", "full", "reach", "levels_len",
        "lo_in", "hi_in", "lo_out", "hi_out", "member_needs_lo", "nodes",
    )

    def __init__(self, graph: Graph, kind: SetKind) -> None:
        self.n = graph.n
        self.adj = graph.neighbor_masks
        self.full = (1 << graph.n) - 1
        lo_in, hi_in, lo_out, hi_out = kind.bounds()
        self.lo_in = lo_in
        self.hi_in = hi_in
        self.lo_out = lo_out
        self.hi_out = hi_out
        self.member_needs_lo = lo_in >= 1
        finite = [b for b in (hi_in, hi_out) if b is not None]
        # levels[i] = mask of vertices with spanning number >= i + 1
        self.levels_len = (max(finite) + 1) if finite else 1
        # reach[i] = vertices dominable by some candidate with id >= i
        reach = [0] * (graph.n + 1)
        for v in range(graph.n - 1, -1, -1):
            reach[v] = reach[v + 1] | self.adj[v]
        self.reach = reach
        self.nodes = 0

    def _valid_now(self, mask: int, needlo: int, levels: list[int]) -> bool:
        if needlo & ~levels[0]:
            return False
        if self.hi_out is not None and (levels[self.hi_out] & ~mask):
            return False
        return True

    def run(self, min_size: int, max_size: int, on_solution: Callable[[int], bool],
            any_size: bool = False) -> bool:
        """Explore candidate sets; sizes ascending, lexicographic within a size.

        With ``any_size`` every valid subset of size <= max_size is a solution
        candidate; otherwise only subsets of the exact target size are.  The
        callback returns True to stop the whole search.
        """
        if any_size:
            empty = [0] * self.levels_len
            if self._valid_now(0, self.full, empty):
                # only possible on the empty vertex set of the empty graph
                if on_solution(0):
                    return True
            return self._rec_any(0, 0, 0, self.full, empty, max_size, on_solution)
        for size in range(min_size, max_size + 1):
            if size > self.n:
                break
            if size == 0:
                self.nodes += 1
                if self._valid_now(0, self.full, [0] * self.levels_len):
                    if on_solution(0):
                        return True
                continue
            if self._rec_size(0, 0, 0, self.full, [0] * self.levels_len, size, on_solution):
                return True
        return False

    def _candidate_bound(self, start: int, remaining: int, required: int,
                         mask: int, levels: list[int]) -> int:
        """Largest candidate id still usable, or -1 when the node is dead.

        ``remaining`` picks are still allowed, of which ``required`` are
        mandatory (the full count in exact-size search, just the candidate
        itself in the variable-size sweep).
        """
        cap = self.n - required
        hi_out = self.hi_out
        if hi_out is not None:
            must = levels[hi_out] & ~mask
            if must:
                # vertices over the off-set bound must join the set
                if must & ((1 << start) - 1):
                    return -1
                if self.hi_in is not None and self.hi_in <= hi_out:
                    return -1
                if self.hi_in is not None and (must & levels[self.hi_in]):
                    return -1
                if must.bit_count() > remaining:
                    return -1
                cap = min(cap, (must & -must).bit_length() - 1)
        return cap

    def _blocked(self, start: int, needlo: int, levels: list[int]) -> bool:
        """Some vertex still needs an in-set neighbor it can no longer get.

        Vertices with no remaining candidate neighbor are only dead when they
        cannot save themselves by joining the set: membership removes the
        requirement for non-total kinds, so there only ids below ``start``
        (whose membership is already fixed) count.
        """
        unreachable = (needlo & ~levels[0]) & ~self.reach[start]
        if not unreachable:
            return False
        if self.member_needs_lo:
            return True
        return bool(unreachable & ((1 << start) - 1))

    def _rec_size(self, start: int, picked: int, mask: int, needlo: int,
                  levels: list[int], size: int, on_solution: Callable[[int], bool]) -> bool:
        self.nodes += 1
        if self._blocked(start, needlo, levels):
            return False
        remaining = size - picked
        cap = self._candidate_bound(start, remaining, remaining, mask, levels)
        if cap < 0:
            return False
        hi_in = self.hi_in
        adj = self.adj
        levels_len = self.levels_len
        at_leaf = picked + 1 == size
        for v in range(start, cap + 1):
            if hi_in is not None and (levels[hi_in] >> v) & 1:
                continue  # joining would push v over its member bound
            new_levels = levels.copy()
            carry = adj[v]
            i = 0
            while carry and i < levels_len:
                prev = new_levels[i]
                new_levels[i] = prev | carry
                carry &= prev
                i += 1
            new_mask = mask | (1 << v)
            if hi_in is not None and (new_mask & new_levels[hi_in]):
                continue
            new_needlo = needlo if self.member_needs_lo else needlo & ~(1 << v)
            if at_leaf:
                self.nodes += 1
                if self._valid_now(new_mask, new_needlo, new_levels):
                    if on_solution(new_mask):
                        return True
            elif self._rec_size(v + 1, picked + 1, new_mask, new_needlo,
                                new_levels, size, on_solution):
                return True
        return False

    def _rec_any(self, start: int, picked: int, mask: int, needlo: int,
                 levels: list[int], max_size: int,
                 on_solution: Callable[[int], bool]) -> bool:
        self.nodes += 1
        if picked == max_size:
            return False
        if self._blocked(start, needlo, levels):
            return False
        cap = self._candidate_bound(start, max_size - picked, 1, mask, levels)
        if cap < 0:
            return False
        hi_in = self.hi_in
        adj = self.adj
        levels_len = self.levels_len
        for v in range(start, cap + 1):
            if hi_in is not None and (levels[hi_in] >> v) & 1:
                continue
            new_levels = levels.copy()
            carry = adj[v]
            i = 0
            while carry and i < levels_len:
                prev = new_levels[i]
                new_levels[i] = prev | carry
                carry &= prev
                i += 1
            new_mask = mask | (1 << v)
            if hi_in is not None and (new_mask & new_levels[hi_in]):
                continue
            new_needlo = needlo if self.member_needs_lo else needlo & ~(1 << v)
            if self._valid_now(new_mask, new_needlo, new_levels):
                if on_solution(new_mask):
                    return True
            if self._rec_any(v + 1, picked + 1, new_mask, new_needlo,
                             new_levels, max_size, on_solution):
                return True
        return False


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        bit = mask & -mask
        out.append(bit.bit_length() - 1)
        mask ^= bit
    return tuple(out)


def min_set(graph: Graph, kind: SetKind, limit: int | None = None, *,
            max_n: int | None = None, force: bool = False) -> SolveResult:
    """Exact minimum set of the given kind, or nonexistence.

    Iterates target sizes 0, 1, 2, ... and returns the lexicographically
    smallest witness at the first feasible size.  With ``limit`` the search
    stops after that cardinality and reports ``exists=False`` when nothing
    was found within it.
    """
    _check_cap(graph, max_n, force)
    search = _Search(graph, kind)
    top = graph.n if limit is None else min(limit, graph.n)
    found: list[int] = []

    def grab(mask: int) -> bool:
        found.append(mask)
        return True

    search.run(0, top, grab)
    if found:
        witness = _mask_to_tuple(found[0])
        return SolveResult(kind, True, len(witness), witness, search.nodes)
    return SolveResult(kind, False, None, None, search.nodes)


def exists_set(graph: Graph, kind: SetKind, limit: int | None = None, *,
               max_n: int | None = None, force: bool = False) -> bool:
    """True iff some vertex set of the kind exists (within ``limit`` if given).

    Uses a single variable-size sweep rather than cardinality-ordered search,
    so it is the cheaper query when only existence matters.
    """
    _check_cap(graph, max_n, force)
    search = _Search(graph, kind)
    top = graph.n if limit is None else min(limit, graph.n)
    return search.run(0, top, lambda mask: True, any_size=True)


def enumerate_sets(graph: Graph, kind: SetKind, size: int,
                   on_solution: Callable[[frozenset[int]], bool], *,
                   max_n: int | None = None, force: bool = False) -> None:
    """Invoke the callback on every satisfying set of the exact size, in
    lexicographic order; the callback returns True to stop early."""
    if size < 0:
        raise ValueError("size must be non-negative")
    _check_cap(graph, max_n, force)
    search = _Search(graph, kind)
    search.run(size, size, lambda mask: on_solution(frozenset(_mask_to_tuple(mask))))


def closed_form(family: str, n: int, kind: str, k: int = 2) -> int:
    """Known minimum sizes on paths and cycles; independent of k for k >= 2.

    ``t1k``: n/2, (n+1)/2, (n+2)/2, (n+1)/2 by n mod 4.
    ``one_k`` and ``i1k``: ceil(n/3).
    """
    if family not in ("path", "cycle"):
        raise ValueError(f"closed forms cover path and cycle, not {family!r}")
    if kind not in ("t1k", "one_k", "i1k"):
        raise ValueError(f"unknown closed-form kind {kind!r}")
    if k < 2:
        raise ValueError("closed forms require k >= 2")
    minimum = 2 if family == "path" else 3
    if n < minimum:
        raise ValueError(f"{family} closed form requires n >= {minimum}")
    if kind == "t1k":
        r = n % 4
        if r == 0:
            return n // 2
        if r == 2:
            return (n + 2) // 2
        return (n + 1) // 2
    return math.ceil(n / 3)
