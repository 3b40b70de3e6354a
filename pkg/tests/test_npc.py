import json
from itertools import combinations

import pytest

from domkit.domsets import satisfies, total_one_k
from domkit.npc import (
    X3CInstance,
    build_gadget,
    cover_to_witness,
    decide_x3c,
    minimum_gadget_witness,
    witness_to_cover,
    x3c_from_json,
    x3c_to_json,
)


def two_coloring_exists(graph) -> bool:
    color = [None] * graph.n
    for root in range(graph.n):
        if color[root] is not None:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in graph.neighbors(u):
                if color[w] is None:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


class TestInstanceValidation:
    def test_rejects_empty_collection(self):
        with pytest.raises(ValueError):
            X3CInstance(3, ())

    def test_rejects_bad_universe(self):
        with pytest.raises(ValueError):
            X3CInstance(4, ((0, 1, 2),))

    def test_rejects_duplicate_elements(self):
        with pytest.raises(ValueError):
            X3CInstance(3, ((0, 0, 1),))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            X3CInstance(3, ((0, 1, 5),))

    def test_json_round_trip(self):
        inst = X3CInstance(6, ((0, 1, 2), (3, 4, 5)))
        assert x3c_from_json(x3c_to_json(inst)) == inst
        with pytest.raises(ValueError):
            x3c_from_json(json.dumps({"universe": 3}))


class TestBuildGadget:
    def test_single_set_structure(self):
        inst = X3CInstance(3, ((0, 1, 2),))
        graph, meta = build_gadget(inst)
        assert graph.n == 10
        assert graph.num_edges == 16  # 4 cycle + 3 anchor spokes + 9 element links
        assert meta.budget == 3
        assert two_coloring_exists(graph)

    def test_two_set_structure(self):
        inst = X3CInstance(6, ((0, 1, 2), (3, 4, 5)))
        graph, meta = build_gadget(inst)
        assert graph.n == 7 * 2 + 3 * 2
        assert meta.budget == 6
        assert two_coloring_exists(graph)

    def test_degrees(self):
        inst = X3CInstance(6, ((0, 1, 2), (1, 2, 3)))
        graph, meta = build_gadget(inst)
        for i in range(inst.num_sets):
            assert graph.degree(meta.anchor(i)) == 5  # two cycle + three connectors
            for v in meta.connectors[i]:
                assert graph.degree(v) == 4  # anchor + its three elements
        appearances = [0] * inst.universe_size
        for triple in inst.sets:
            for x in triple:
                appearances[x] += 1
        for x, vid in enumerate(meta.elements):
            assert graph.degree(vid) == 3 * appearances[x]

    def test_deterministic_layout(self):
        inst = X3CInstance(3, ((0, 1, 2),))
        g1, m1 = build_gadget(inst)
        g2, m2 = build_gadget(inst)
        assert g1 == g2 and m1 == m2

    def test_role_map(self):
        inst = X3CInstance(3, ((0, 1, 2),))
        _, meta = build_gadget(inst)
        sidecar = json.loads(meta.to_sidecar_json())
        assert sidecar["budget"] == 3
        assert sidecar["roles"]["0"] == {"role": "cycle", "set": 0, "pos": 0}
        assert sidecar["roles"]["4"] == {"role": "connector", "set": 0, "slot": 0}
        assert sidecar["roles"]["7"] == {"role": "element", "element": 0}


class TestCoverToWitness:
    def test_single_set(self):
        inst = X3CInstance(3, ((0, 1, 2),))
        graph, meta = build_gadget(inst)
        witness = cover_to_witness(inst, meta, {0})
        assert len(witness) == 3
        assert satisfies(graph, witness, total_one_k(2))

    def test_three_sets_cover_of_two(self):
        inst = X3CInstance(6, ((0, 1, 2), (3, 4, 5), (1, 2, 3)))
        graph, meta = build_gadget(inst)
        assert graph.n == 27
        witness = cover_to_witness(inst, meta, {0, 1})
        assert len(witness) == 2 * 3 + 2
        assert satisfies(graph, witness, total_one_k(2))

    def test_rejects_non_exact_cover(self):
        inst = X3CInstance(6, ((0, 1, 2), (1, 2, 3)))
        _, meta = build_gadget(inst)
        with pytest.raises(ValueError):
            cover_to_witness(inst, meta, {0, 1})  # overlaps on 1 and 2


class TestWitnessToCover:
    def test_round_trip(self):
        inst = X3CInstance(6, ((0, 1, 2), (3, 4, 5), (1, 2, 3)))
        _, meta = build_gadget(inst)
        witness = cover_to_witness(inst, meta, {0, 1})
        assert witness_to_cover(inst, meta, witness) == {0, 1}

    def test_oracle_minimum_extracts(self):
        inst = X3CInstance(3, ((0, 1, 2),))
        _, meta = build_gadget(inst)
        r = minimum_gadget_witness(inst)
        assert r.gamma == meta.budget
        assert witness_to_cover(inst, meta, frozenset(r.witness)) == {0}

    def test_rejects_invalid_witness(self):
        inst = X3CInstance(3, ((0, 1, 2),))
        _, meta = build_gadget(inst)
        with pytest.raises(ValueError):
            witness_to_cover(inst, meta, frozenset({0}))

    def test_rejects_over_budget(self):
        inst = X3CInstance(3, ((0, 1, 2),))
        graph, meta = build_gadget(inst)
        big = cover_to_witness(inst, meta, {0}) | {meta.cycles[0][2]}
        if satisfies(graph, big, total_one_k(2)) and len(big) > meta.budget:
            with pytest.raises(ValueError):
                witness_to_cover(inst, meta, big)


class TestDecide:
    def test_single_covering_set(self):
        inst = X3CInstance(3, ((0, 1, 2),))
        assert decide_x3c(inst, "brute_force")
        assert decide_x3c(inst, "via_gadget")

    def test_uncovered_element_fast_path(self):
        inst = X3CInstance(6, ((0, 1, 2), (2, 3, 4)))
        assert not decide_x3c(inst, "brute_force")
        assert not decide_x3c(inst, "via_gadget")

    def test_cover_among_three(self):
        inst = X3CInstance(6, ((0, 1, 2), (3, 4, 5), (1, 2, 3)))
        assert decide_x3c(inst, "brute_force")
        assert decide_x3c(inst, "via_gadget")

    def test_covering_union_without_exact_cover(self):
        # pairwise overlapping sets whose union is the whole universe
        inst = X3CInstance(6, ((0, 1, 2), (2, 3, 4), (1, 4, 5)))
        assert not decide_x3c(inst, "brute_force")
        assert not decide_x3c(inst, "via_gadget")

    def test_rejects_unknown_mode(self):
        with pytest.raises(ValueError):
            decide_x3c(X3CInstance(3, ((0, 1, 2),)), "guess")

    def test_budget_tightness_on_coverable_instances(self):
        for sets in [((0, 1, 2), (3, 4, 5)), ((0, 1, 2), (3, 4, 5), (1, 2, 3))]:
            inst = X3CInstance(6, sets)
            r = minimum_gadget_witness(inst)
            assert r.gamma == 2 * inst.num_sets + inst.q

    def test_equivalence_sample(self):
        triples = list(combinations(range(6), 3))
        sample = [triples[i] for i in (0, 3, 7, 11, 19)]
        for a, b, c in combinations(range(len(sample)), 3):
            inst = X3CInstance(6, (sample[a], sample[b], sample[c]))
            assert decide_x3c(inst, "via_gadget") == decide_x3c(inst, "brute_force")
