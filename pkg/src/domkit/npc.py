"""Exact-3-Cover reduction to bounded total [1,2]-domination.

Each 3-set gets a 4-cycle with an anchor vertex and three connector vertices;
each universe element attaches to all three connectors of every set containing
it.  A cover of size q corresponds to a total [1,2]-set of size 2t + q, which
is also the budget of the decision question.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .domsets import satisfies, total_one_k
from .graphs import Graph
from .solvers import exists_set, min_set


class ReductionError(RuntimeError):
    """A witness inside budget failed to yield an exact cover."""


@dataclass(frozen=True)
class X3CInstance:
    """An Exact-3-Cover instance: universe 0..3q-1 and 3-element subsets."""

    universe_size: int
    sets: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.universe_size <= 0 or self.universe_size % 3 != 0:
            raise ValueError("universe size must be a positive multiple of 3")
        if not self.sets:
            raise ValueError("the collection must contain at least one set")
        for triple in self.sets:
            if len(triple) != 3 or len(set(triple)) != 3:
                raise ValueError(f"set {triple} must have exactly 3 distinct elements")
            for x in triple:
                if not (0 <= x < self.universe_size):
                    raise ValueError(f"element {x} outside universe 0..{self.universe_size - 1}")

    @property
    def num_sets(self) -> int:
        return len(self.sets)

    @property
    def q(self) -> int:
        return self.universe_size // 3


@dataclass(frozen=True)
class GadgetMeta:
    """Id bookkeeping for a built gadget.

    Layout: per set i a 4-cycle block (anchor, then three cycle fillers),
    then all connectors in set order, then the universe elements.
    """

    num_sets: int
    universe_size: int
    budget: int
    cycles: tuple[tuple[int, int, int, int], ...]
    connectors: tuple[tuple[int, int, int], ...]
    elements: tuple[int, ...]

    def anchor(self, i: int) -> int:
        return self.cycles[i][0]

    def role_of(self, vid: int) -> dict:
        for i, block in enumerate(self.cycles):
            if vid in block:
                return {"role": "cycle", "set": i, "pos": block.index(vid)}
        for i, slots in enumerate(self.connectors):
            if vid in slots:
                return {"role": "connector", "set": i, "slot": slots.index(vid)}
        if vid in self.elements:
            return {"role": "element", "element": self.elements.index(vid)}
        raise ValueError(f"vertex {vid} not in gadget")

    def to_sidecar_json(self) -> str:
        total = 7 * self.num_sets + 3 * self.universe_size // 3
        roles = {str(v): self.role_of(v) for v in range(total)}
        return json.dumps({"budget": self.budget, "roles": roles})


def build_gadget(inst: X3CInstance) -> tuple[Graph, GadgetMeta]:
    """Deterministic gadget graph on 7t + 3q vertices with budget 2t + q."""
    t = inst.num_sets
    q = inst.q
    cycles = tuple(tuple(range(4 * i, 4 * i + 4)) for i in range(t))
    connectors = tuple(tuple(range(4 * t + 3 * i, 4 * t + 3 * i + 3)) for i in range(t))
    elements = tuple(range(7 * t, 7 * t + 3 * q))
    edges: list[tuple[int, int]] = []
    for u, a, b, c in cycles:
        edges += [(u, a), (a, b), (b, c), (c, u)]
    for i in range(t):
        u = cycles[i][0]
        for v in connectors[i]:
            edges.append((u, v))
        for x in inst.sets[i]:
            for v in connectors[i]:
                edges.append((elements[x], v))
    graph = Graph(7 * t + 3 * q, edges)
    meta = GadgetMeta(t, inst.universe_size, 2 * t + q, cycles, connectors, elements)
    return graph, meta


def _check_exact_cover(inst: X3CInstance, cover: frozenset[int]) -> None:
    hits = [0] * inst.universe_size
    for i in cover:
        if not (0 <= i < inst.num_sets):
            raise ValueError(f"set index {i} out of range")
        for x in inst.sets[i]:
            hits[x] += 1
    if any(c != 1 for c in hits):
        raise ValueError("cover is not exact: some element is not hit exactly once")


def cover_to_witness(inst: X3CInstance, meta: GadgetMeta,
                     cover: frozenset[int] | set[int]) -> frozenset[int]:
    """Total [1,2]-set of size 2t + |cover| built from an exact cover.

    Every block contributes its anchor and the anchor's fixed cycle neighbor;
    chosen sets add their first connector.
    """
    cover = frozenset(cover)
    _check_exact_cover(inst, cover)
    picked: set[int] = set()
    for u, a, _b, _c in meta.cycles:
        picked.update((u, a))
    for i in cover:
        picked.add(meta.connectors[i][0])
    return frozenset(picked)


def witness_to_cover(inst: X3CInstance, meta: GadgetMeta,
                     witness: frozenset[int] | set[int]) -> frozenset[int]:
    """Extract the covering sets from a budget-respecting total [1,2]-set.

    Raises ``ValueError`` on an invalid or over-budget witness and
    ``ReductionError`` when the extraction is not an exact cover, which the
    equivalence theorem rules out.
    """
    witness = frozenset(witness)
    graph, _ = build_gadget(inst)
    if not satisfies(graph, witness, total_one_k(2)):
        raise ValueError("witness is not a total [1,2]-set of the gadget")
    if len(witness) > meta.budget:
        raise ValueError(f"witness has {len(witness)} vertices, budget is {meta.budget}")
    chosen = frozenset(
        i for i, slots in enumerate(meta.connectors) if witness & set(slots)
    )
    try:
        _check_exact_cover(inst, chosen)
    except ValueError as exc:
        raise ReductionError(f"extracted collection is not an exact cover: {exc}") from None
    return chosen


def decide_x3c(inst: X3CInstance, mode: str = "via_gadget", *,
               max_n: int | None = None, force: bool = False) -> bool:
    """Decide Exact-3-Cover either by direct enumeration or via the gadget."""
    if mode == "brute_force":
        t = inst.num_sets
        for bits in range(1 << t):
            hits = [0] * inst.universe_size
            for i in range(t):
                if bits >> i & 1:
                    for x in inst.sets[i]:
                        hits[x] += 1
            if all(c == 1 for c in hits):
                return True
        return False
    if mode != "via_gadget":
        raise ValueError(f"unknown mode {mode!r}")
    covered = {x for triple in inst.sets for x in triple}
    if len(covered) < inst.universe_size:
        # an uncovered element would be an isolated gadget vertex
        return False
    graph, meta = build_gadget(inst)
    return exists_set(graph, total_one_k(2), limit=meta.budget,
                      max_n=max_n, force=force)


def minimum_gadget_witness(inst: X3CInstance, *, max_n: int | None = None,
                           force: bool = False):
    """Exact minimum total [1,2]-set of the gadget (for budget-tightness checks)."""
    graph, _ = build_gadget(inst)
    return min_set(graph, total_one_k(2), max_n=max_n, force=force)


# -- instance JSON ------------------------------------------------------------


def x3c_from_json(text: str) -> X3CInstance:
    data = json.loads(text)
    try:
        universe = int(data["universe"])
        sets = tuple(tuple(int(x) for x in triple) for triple in data["sets"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed instance JSON: {exc}") from None
    return X3CInstance(universe, sets)  # type: ignore[arg-type]


def x3c_to_json(inst: X3CInstance) -> str:
    return json.dumps({"universe": inst.universe_size,
                       "sets": [list(t) for t in inst.sets]})
