import argparse
import copy
import json

import pytest

from extalg.cli import (SCHEMA_VERSION, Workspace, WorkspaceError,
                        emit_builtin_examples, load, main, run)


@pytest.fixture(scope="module")
def corpus():
    return emit_builtin_examples()


@pytest.fixture(scope="module")
def ws(corpus):
    return Workspace(copy.deepcopy(corpus))


def default_args(**over):
    base = dict(target=None, bound=None, seed=0, window=2, out=None)
    base.update(over)
    return argparse.Namespace(**base)


def test_corpus_counts(ws):
    counts = ws.counts()
    assert counts["algebras"] == 3
    assert counts["extensions"] == 2
    assert counts["morita_contexts"] == 3
    assert counts["pairs"] == 3
    assert counts["copairs"] == 2
    assert counts["right_pairs"] == 1
    assert sum(counts.values()) >= 5


def test_corpus_content(ws):
    assert ws.extensions["triangular"].total.dim == 3
    assert ws.extensions["d"].total.dim == 2
    assert ws.contexts["nakayama4"].total.dim == 4
    assert ws.contexts["hereditary3"].total.dim == 3
    assert ws.contexts["product2"].total.dim == 2
    assert ws.algebras["k3"].field.p == 3


def test_emit_load_round_trip(tmp_path, corpus):
    path = tmp_path / "ws.json"
    path.write_text(json.dumps(corpus))
    loaded = load(str(path))
    assert loaded.counts() == Workspace(copy.deepcopy(corpus)).counts()


def test_schema_version_required(corpus):
    bad = copy.deepcopy(corpus)
    bad["schema_version"] = 99
    with pytest.raises(WorkspaceError):
        Workspace(bad)


def test_error_names_entity(corpus):
    bad = copy.deepcopy(corpus)
    bad["pairs"]["broken"] = {"extension": "d", "x": "missing",
                              "alpha": [[0]]}
    with pytest.raises(WorkspaceError, match="pair"):
        Workspace(bad)
    bad2 = copy.deepcopy(corpus)
    bad2["algebras"]["oops"] = {"structure_constants": [[[1], [1]]],
                                "unit": [1]}
    with pytest.raises(WorkspaceError, match="oops"):
        Workspace(bad2)


def test_run_validate(ws):
    report = run("validate", ws, default_args())
    assert report["schema_version"] == SCHEMA_VERSION
    assert report["entities"]["pairs"] == 3


def test_run_check_and_verify(ws):
    gp = run("check gp", ws, default_args())
    assert gp["results"]["d_regular_pair"]["answer"] == "certified_yes"
    assert gp["results"]["zk_over_d"]["answer"] == "certified_yes"
    gi = run("check gi", ws, default_args())
    assert gi["results"]["d_regular_copair"]["answer"] == "certified_yes"
    gf = run("check gf", ws, default_args())
    assert gf["results"]["d_regular_right_pair"]["answer"] == "certified_yes"
    v35 = run("verify cor35", ws, default_args())
    assert v35["results"]["tri_regular_pair"]["classification"] == "agree"
    assert v35["results"]["zk_over_d"]["classification"] == "consistent"
    v52 = run("verify thm52", ws, default_args())
    for rep in v52["results"].values():
        assert rep["classification"] != "violation"


def test_run_resolve(ws):
    rep = run("resolve pair", ws, default_args(target="d_regular_pair"))
    result = rep["results"]["d_regular_pair"]
    assert result["validation"]["window_exact"]
    assert result["validation"]["terms_projective"]
    rep2 = run("resolve copair", ws, default_args(target="d_regular_copair"))
    assert rep2["results"]["d_regular_copair"]["validation"]["window_exact"]


def test_run_unknown_target(ws):
    with pytest.raises(WorkspaceError, match="nope"):
        run("check gp", ws, default_args(target="nope"))


def test_run_deterministic(corpus):
    payloads = []
    for _ in range(2):
        fresh = Workspace(copy.deepcopy(corpus))
        report = run("verify cor35", fresh, default_args())
        payloads.append(json.dumps(report, sort_keys=True))
    assert payloads[0] == payloads[1]


def test_main_end_to_end(tmp_path, capsys):
    ws_path = tmp_path / "ws.json"
    out_path = tmp_path / "report.json"
    assert main(["examples", "emit", "--out", str(ws_path)]) == 0
    assert main(["validate", str(ws_path), "--out", str(out_path)]) == 0
    report = json.loads(out_path.read_text())
    assert "timing_ms" in report and report["command"] == "validate"
    assert main(["check", "gp", str(ws_path), "--target", "zk_over_d",
                 "--out", str(out_path)]) == 0
    report = json.loads(out_path.read_text())
    assert report["results"]["zk_over_d"]["regime"] == "self_injective"


def test_main_reports_errors(tmp_path, capsys):
    ws_path = tmp_path / "ws.json"
    assert main(["examples", "emit", "--out", str(ws_path)]) == 0
    code = main(["check", "gp", str(ws_path), "--target", "missing"])
    assert code == 2
    err = capsys.readouterr().err
    assert "missing" in err
    bad_path = tmp_path / "bad.json"
    bad_path.write_text("{not json")
    assert main(["validate", str(bad_path)]) == 2
