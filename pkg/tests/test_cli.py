import json
from fractions import Fraction

import pytest

from balmat import jsonio
from balmat.cakecheck import Partition
from balmat.cli import main
from balmat.dinterval import DInterval, DIntervalFamilies
from balmat.hypergraph import Multigraph, PartiteHypergraph, WeightFunction
from balmat.topology import Graph, SimplicialComplex

PASCH = {"sides": [2, 2, 2],
         "edges": [[1, 1, 1], [1, 2, 2], [2, 1, 2], [2, 2, 1]]}


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


# --- JSON round trips -------------------------------------------------------


def test_hypergraph_roundtrip():
    h = PartiteHypergraph((2, 3), [(1, 2), (2, 3)])
    assert jsonio.hypergraph_from_json(jsonio.hypergraph_to_json(h)) == h


def test_weights_roundtrip():
    f = WeightFunction({(1, 1): Fraction(1, 3), (2, 2): 2})
    assert jsonio.weights_from_json(jsonio.weights_to_json(f)) == f


def test_complex_and_graph_roundtrip():
    c = SimplicialComplex(3, [{1, 2}, {3}])
    assert jsonio.complex_from_json(jsonio.complex_to_json(c)) == c
    g = Graph(3, [(1, 2)])
    assert jsonio.graph_from_json(jsonio.graph_to_json(g)) == g


def test_multigraph_roundtrip():
    mg = Multigraph(2, 2, [(1, 1, 0), (1, 1, 1)])
    assert jsonio.multigraph_from_json(jsonio.multigraph_to_json(mg)) == mg


def test_families_roundtrip():
    fams = DIntervalFamilies(2, [[DInterval([("1/4", "1/2"), ("0", "1/8")])]])
    assert jsonio.families_from_json(jsonio.families_to_json(fams)) == fams


def test_partition_roundtrip():
    p = Partition([[Fraction(1, 2), Fraction(1, 2)], [1, 0]])
    assert jsonio.partition_from_json(jsonio.partition_to_json(p)) == p


# --- subcommands ------------------------------------------------------------


def test_nu_nustar_balance(tmp_path, capsys):
    path = write(tmp_path, "h.json", PASCH)
    code, out = run(capsys, "nu", path)
    assert code == 0 and json.loads(out) == {"nu": 1}
    code, out = run(capsys, "nustar", path)
    assert code == 0 and json.loads(out) == {"nustar": "2"}
    code, out = run(capsys, "balance", path)
    assert code == 0 and json.loads(out)["balanced"] is True


def test_balance_failure_exit_code(tmp_path, capsys):
    unbal = {"sides": [2, 2], "edges": [[1, 1]]}
    code, out = run(capsys, "balance", write(tmp_path, "u.json", unbal))
    assert code == 1 and json.loads(out) == {"balanced": False}


def test_eta_and_psi(tmp_path, capsys):
    cpath = write(tmp_path, "c.json",
                  {"vertices": 3, "facets": [[1, 2], [2, 3], [1, 3]]})
    code, out = run(capsys, "eta", cpath)
    assert code == 0 and json.loads(out) == {"eta": 2, "exact": True}
    gpath = write(tmp_path, "g.json",
                  {"vertices": 4, "edges": [[1, 2], [3, 4]]})
    code, out = run(capsys, "psi", gpath)
    assert code == 0 and json.loads(out) == {"psi": 2}
    gpath2 = write(tmp_path, "g2.json", {"vertices": 2, "edges": []})
    code, out = run(capsys, "psi", gpath2)
    assert json.loads(out) == {"psi": "infinite"}


def test_hall_check_command(tmp_path, capsys):
    path = write(tmp_path, "h.json", PASCH)
    code, out = run(capsys, "hall-check", path, "--deficiency", "1")
    assert code == 0 and json.loads(out)["pass"] is True
    code, out = run(capsys, "hall-check", path, "--deficiency", "0")
    assert code == 1 and json.loads(out)["failing_K"] == [1, 2]


def test_construct_and_pipe(tmp_path, capsys):
    code, out = run(capsys, "construct", "nnn_tight", "--n", "3")
    assert code == 0
    data = json.loads(out)
    assert data["sides"] == [3, 3, 3]
    path = write(tmp_path, "t.json", data)
    code, out = run(capsys, "nu", path)
    assert json.loads(out) == {"nu": 2}


def test_construct_requires_params(capsys):
    code, _ = run(capsys, "construct", "drisko")
    assert code == 2


def test_hilbert_command(capsys):
    code, out = run(capsys, "hilbert", "--sides", "2,2", "--cap", "4")
    assert code == 0 and len(json.loads(out)["generators"]) == 2
    code, out = run(capsys, "hilbert", "--sides", "2,2", "--cap", "2")
    assert code == 1 and json.loads(out)["cap_exceeded"] is True


def test_dinterval_commands(tmp_path, capsys):
    fams = {"d": 2, "families": [
        [{"parts": [["0", "1/2"], ["0", "1/2"]]}],
        [{"parts": [["1/2", "1"], ["1/2", "1"]]}]]}
    path = write(tmp_path, "f.json", fams)
    code, out = run(capsys, "dinterval", "cover", path, "--budgets", "1,1")
    assert code == 0 and json.loads(out)["coverable"] is True
    code, out = run(capsys, "dinterval", "rainbow", path, "--target", "2")
    assert code == 0 and len(json.loads(out)["matching"]) == 2
    code, out = run(capsys, "dinterval", "rainbow", path, "--target", "3")
    assert code == 1


def test_cake_commands(tmp_path, capsys):
    ppath = write(tmp_path, "p.json", [["1/2", "1/2"], ["1/2", "1/2"]])
    code, out = run(capsys, "cake", "check", "--instance", "2n2nn", "--n", "2",
                    "--partition", ppath)
    assert code == 0 and json.loads(out) == {"nu_D": 1}
    code, out = run(capsys, "cake", "search", "--instance", "nn2n2", "--n", "2",
                    "--q", "3")
    assert code == 0  # max < n corroborates the counterexample at this grid
    assert json.loads(out)["max_nu_D"] <= 1


def test_bm_search_command_deterministic(capsys):
    argv = ["bm-search", "--sides", "2,2,2", "--mode", "sampled",
            "--trials", "50", "--seed", "9"]
    _, out1 = run(capsys, *argv)
    _, out2 = run(capsys, *argv)
    assert out1 == out2
    code, out = run(capsys, "bm-search", "--sides", "2,2,2")
    assert code == 0 and json.loads(out)["min_nu"] == 1


def test_verify_all_subset(tmp_path, capsys):
    report = str(tmp_path / "report.json")
    code, out = run(capsys, "--out", report, "verify-all", "--only", "pasch")
    assert code == 0
    saved = json.loads(open(report).read())
    assert saved == json.loads(out)
    assert saved["pass"] is True


def test_usage_errors(tmp_path, capsys):
    assert main(["nu", str(tmp_path / "missing.json")]) == 2
    assert main(["bogus-command"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["nu", str(bad)]) == 2
