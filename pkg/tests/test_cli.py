import json

import pytest

from domkit.cli import main
from domkit.graphs import build_standard, format_edge_list, load_graph, parse_edge_list


@pytest.fixture
def c5_file(tmp_path):
    path = tmp_path / "c5.el"
    path.write_text(format_edge_list(build_standard("cycle", 5)))
    return str(path)


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.el"
    path.write_text(format_edge_list(build_standard("cycle", 4)))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_stdout_header(self, capsys):
        code, out, _ = run(capsys, "gen", "cycle", "6")
        assert code == 0
        assert out.splitlines()[0] == "6 6"

    def test_file_round_trip(self, tmp_path, capsys):
        target = tmp_path / "g.el"
        code, _, _ = run(capsys, "gen", "star", "5", "-o", str(target))
        assert code == 0
        g = load_graph(str(target))
        assert g == build_standard("star", 5)
        assert format_edge_list(g) == target.read_text()

    def test_bad_family_exits_64(self, capsys):
        code, _, err = run(capsys, "gen", "hypercube", "4")
        assert code == 64 and "error" in err


class TestProduct:
    def test_product_and_layer_map(self, tmp_path, capsys, c5_file, c4_file):
        out_file = tmp_path / "p.el"
        map_file = tmp_path / "layers.json"
        code, _, _ = run(capsys, "product", c5_file, c4_file,
                         "-o", str(out_file), "--layer-map", str(map_file))
        assert code == 0
        product = load_graph(str(out_file))
        assert product.n == 20
        layers = json.loads(map_file.read_text())
        assert layers["h_layers"]["0"] == [0, 1, 2, 3]
        assert layers["g_layers"]["0"] == [0, 4, 8, 12, 16]

    def test_missing_file_exits_1(self, capsys, c5_file):
        code, _, err = run(capsys, "product", c5_file, "/nonexistent.el")
        assert code == 1 and "error" in err


class TestSolve:
    def test_c5_total_one_2(self, capsys, c5_file):
        code, out, _ = run(capsys, "solve", c5_file, "--kind", "t1k", "--k", "2")
        assert code == 0
        payload = json.loads(out)
        assert payload["gamma"] == 3 and payload["exists"] is True

    def test_missing_k_exits_64(self, capsys, c5_file):
        code, _, _ = run(capsys, "solve", c5_file, "--kind", "t1k")
        assert code == 64

    def test_invalid_parameters_exit_64(self, capsys, c5_file):
        code, _, _ = run(capsys, "solve", c5_file, "--kind", "jd1k", "--j", "3", "--k", "2")
        assert code == 64

    def test_cap_violation_exits_3(self, tmp_path, capsys):
        big = tmp_path / "big.el"
        big.write_text(format_edge_list(build_standard("path", 40)))
        code, _, err = run(capsys, "solve", str(big), "--kind", "dom")
        assert code == 3 and "cap" in err

    def test_force_overrides_cap(self, tmp_path, capsys):
        big = tmp_path / "big.el"
        big.write_text(format_edge_list(build_standard("star", 33)))
        code, out, _ = run(capsys, "solve", str(big), "--kind", "dom", "--force")
        assert code == 0 and json.loads(out)["gamma"] == 1

    def test_pretty_output(self, capsys, c5_file):
        code, out, _ = run(capsys, "solve", c5_file, "--kind", "dom", "--pretty")
        assert code == 0 and "gamma" in out and "{" not in out

    def test_deterministic_bytes(self, capsys, c5_file):
        _, out1, _ = run(capsys, "solve", c5_file, "--kind", "t1k", "--k", "2")
        _, out2, _ = run(capsys, "solve", c5_file, "--kind", "t1k", "--k", "2")
        assert out1 == out2


class TestClosedForm:
    def test_value(self, capsys):
        code, out, _ = run(capsys, "closed-form", "cycle", "7", "--kind", "t1k", "--k", "3")
        assert code == 0 and json.loads(out)["value"] == 4

    def test_below_minimum_exits_1(self, capsys):
        code, _, _ = run(capsys, "closed-form", "cycle", "2", "--kind", "1k")
        assert code == 1


class TestTheorem:
    def test_product_gamma_compare_agrees(self, capsys, c5_file, c4_file):
        code, out, _ = run(capsys, "theorem", "product-gamma", c5_file, c4_file,
                           "--kind", "one2", "--compare-oracle")
        assert code == 0
        payload = json.loads(out)
        assert payload["prediction"] == 20 and payload["agree"] is True

    def test_membership_compare(self, tmp_path, capsys, c5_file):
        c3 = tmp_path / "c3.el"
        c3.write_text(format_edge_list(build_standard("cycle", 3)))
        code, out, _ = run(capsys, "theorem", "total", c5_file, str(c3),
                           "--compare-oracle", "--strict")
        assert code == 0
        assert json.loads(out)["prediction"] is False

    def test_plain_prediction_without_oracle(self, capsys, c5_file, c4_file):
        code, out, _ = run(capsys, "theorem", "product-gamma", c5_file, c4_file,
                           "--kind", "plain")
        assert code == 0
        assert json.loads(out)["predicted_gamma"] == 3

    def test_disconnected_factor_exits_1(self, tmp_path, capsys, c4_file):
        bad = tmp_path / "disc.el"
        bad.write_text(format_edge_list(build_standard("empty", 2)))
        code, _, err = run(capsys, "theorem", "total", str(bad), c4_file)
        assert code == 1 and "connected" in err


class TestReduceAndDecide:
    def test_reduce_writes_gadget_and_meta(self, tmp_path, capsys):
        inst = tmp_path / "inst.json"
        inst.write_text(json.dumps({"universe": 3, "sets": [[0, 1, 2]]}))
        gadget = tmp_path / "gadget.el"
        meta = tmp_path / "meta.json"
        code, _, _ = run(capsys, "reduce", str(inst), "-o", str(gadget),
                         "--meta", str(meta))
        assert code == 0
        g = load_graph(str(gadget))
        assert g.n == 10 and g.num_edges == 16
        sidecar = json.loads(meta.read_text())
        assert sidecar["budget"] == 3

    def test_decide_both_modes(self, tmp_path, capsys):
        inst = tmp_path / "inst.json"
        inst.write_text(json.dumps({"universe": 6, "sets": [[0, 1, 2], [3, 4, 5]]}))
        code, out, _ = run(capsys, "decide-x3c", str(inst))
        assert code == 0
        payload = json.loads(out)
        assert payload == {"universe": 6, "num_sets": 2, "brute_force": True,
                           "via_gadget": True, "agree": True}

    def test_malformed_instance_exits_1(self, tmp_path, capsys):
        inst = tmp_path / "bad.json"
        inst.write_text("{not json")
        code, _, _ = run(capsys, "decide-x3c", str(inst))
        assert code == 1

    def test_gadget_stdout_parses(self, tmp_path, capsys):
        inst = tmp_path / "inst.json"
        inst.write_text(json.dumps({"universe": 3, "sets": [[0, 1, 2]]}))
        code, out, _ = run(capsys, "reduce", str(inst))
        assert code == 0
        assert parse_edge_list(out).n == 10
