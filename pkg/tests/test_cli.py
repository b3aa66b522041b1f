import json

import pytest

from gklab.cli import main

SPEC = {
    "groups": {
        "s3": {"type": "perm", "degree": 3, "gens": [[[1, 2]], [[1, 2, 3]]]},
        "q8": {"type": "matgrp", "p": 3,
               "gens": [[[0, 2], [1, 0]], [[1, 1], [1, 2]]]},
        "c2": {"type": "builtin", "name": "cyclic", "args": [2]},
        "d": {"type": "direct", "factors": ["s3", "c2"]},
        "e": {"type": "catalog", "name": "fig3.e"},
        "sd": {"type": "semidirect", "kernel": "k", "acting": "c2",
               "action_images": [[[0, 0]]]},
        "k": {"type": "builtin", "name": "cyclic", "args": [3]},
    }
}


@pytest.fixture
def spec_path(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(SPEC))
    return str(path)


class TestAnalyze:
    def test_report_contents(self, spec_path, tmp_path, capsys):
        out = tmp_path / "report.json"
        assert main(["analyze", spec_path, "-o", str(out)]) == 0
        report = json.loads(out.read_text())
        s3 = report["groups"]["s3"]
        assert s3["order"] == 6
        assert s3["gk_graph"]["vertices"] == [2, 3]
        assert s3["rationality"]["is_rational"] is True
        assert s3["frobenius_kind"] == "frobenius"
        assert report["groups"]["d"]["order"] == 12
        assert report["groups"]["e"]["order"] == 200
        assert report["groups"]["sd"]["order"] == 6
        assert report["groups"]["sd"]["structure"]["predicates"]["abelian"] is False

    def test_byte_stable(self, spec_path, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        main(["analyze", spec_path, "-o", str(a)])
        main(["analyze", spec_path, "-o", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_empty_groups_map(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{"groups": {}}')
        assert main(["analyze", str(path)]) == 2

    def test_missing_file(self):
        assert main(["analyze", "/nonexistent/spec.json"]) == 2

    def test_cap_exceeded(self, tmp_path, monkeypatch):
        monkeypatch.setenv("GKLAB_MAX_ORDER", "10")
        path = tmp_path / "big.json"
        path.write_text(json.dumps({"groups": {
            "s4": {"type": "perm", "degree": 4,
                   "gens": [[[1, 2]], [[1, 2, 3, 4]]]}}}))
        assert main(["analyze", str(path)]) == 3

    def test_cyclic_reference(self, tmp_path):
        path = tmp_path / "cyc.json"
        path.write_text(json.dumps({"groups": {
            "a": {"type": "direct", "factors": ["b", "b"]},
            "b": {"type": "direct", "factors": ["a", "a"]}}}))
        assert main(["analyze", str(path)]) == 2


class TestGraph:
    def test_catalog_name(self, capsys):
        assert main(["graph", "fig3.l"]) == 0
        out = capsys.readouterr().out
        assert '"2" -- "3"' in out and '"7"' in out

    def test_figure_p_edges(self, capsys):
        assert main(["graph", "fig3.p"]) == 0
        out = capsys.readouterr().out
        assert out.count("--") == 4

    def test_spec_member(self, spec_path, capsys):
        assert main(["graph", spec_path, "--name", "s3"]) == 0
        assert "graph" in capsys.readouterr().out

    def test_unknown(self, capsys):
        assert main(["graph", "fig3.zz"]) == 2


class TestVerifyAndClassify:
    def test_verify_classifier(self, capsys):
        assert main(["verify", "classifier"]) == 0
        assert "39/39 pass" in capsys.readouterr().out

    def test_classify_realized(self, capsys):
        assert main(["classify", "2-3", "--class", "cut"]) == 0
        assert "realized" in capsys.readouterr().out

    def test_classify_forbidden(self, capsys):
        assert main(["classify", "2,3,5", "--class", "cut"]) == 0
        assert "forbidden" in capsys.readouterr().out

    def test_classify_parse_error(self):
        assert main(["classify", "4-6", "--class", "cut"]) == 2
