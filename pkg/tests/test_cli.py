import io
import json

import pytest

from cayrs.cli import build_parser, parse_realization_literal, run

FOUR_BAR = {
    "vertices": ["a", "b", "c", "d"],
    "bars": [
        {"u": "a", "v": "b", "length": 2},
        {"u": "b", "v": "c", "length": 6},
        {"u": "a", "v": "d", "length": 3},
        {"u": "d", "v": "c", "length": 4.5},
    ],
    "baseNonedge": ["a", "c"],
}

FAN3 = {
    "vertices": ["a", "b", "u", "v", "w"],
    "bars": [
        {"u": "a", "v": "u", "length": 5},
        {"u": "b", "v": "u", "length": 3},
        {"u": "a", "v": "v", "length": 10},
        {"u": "b", "v": "v", "length": 9.5},
        {"u": "a", "v": "w", "length": 6},
        {"u": "b", "v": "w", "length": 5.51},
    ],
    "baseNonedge": ["a", "b"],
}

DEPENDENT3 = {
    "vertices": ["a", "b", "c", "d", "e"],
    "bars": [
        {"u": "a", "v": "c", "length": 1.783},
        {"u": "b", "v": "c", "length": 3.167},
        {"u": "a", "v": "d", "length": 3.74},
        {"u": "b", "v": "d", "length": 1.945},
        {"u": "c", "v": "e", "length": 0.523},
        {"u": "d", "v": "e", "length": 2.804},
    ],
    "baseNonedge": ["a", "b"],
}


@pytest.fixture
def four_bar_file(tmp_path):
    path = tmp_path / "fourbar.json"
    path.write_text(json.dumps(FOUR_BAR))
    return str(path)


@pytest.fixture
def fan3_file(tmp_path):
    path = tmp_path / "fan3.json"
    path.write_text(json.dumps(FAN3))
    return str(path)


@pytest.fixture
def dependent3_file(tmp_path):
    path = tmp_path / "dep3.json"
    path.write_text(json.dumps(DEPENDENT3))
    return str(path)


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(argv, stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


class TestParsing:
    def test_realization_literal(self):
        length, rtype = parse_realization_literal("5:++")
        assert length == 5.0 and str(rtype) == "++"
        length, rtype = parse_realization_literal("4.25:+-0")
        assert length == 4.25 and str(rtype) == "+-0"

    def test_unknown_verb_exits_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            build_parser().parse_args(["frobnicate"])
        assert err.value.code == 2

    def test_unknown_option_exits_2(self, four_bar_file):
        with pytest.raises(SystemExit) as err:
            build_parser().parse_args(["check", four_bar_file, "--bogus"])
        assert err.value.code == 2


class TestCheck:
    def test_four_bar(self, four_bar_file):
        status, out, _ = invoke(["check", four_bar_file])
        assert status == 0
        body = json.loads(out)
        assert body["tdLow"] is True
        assert body["steps"] == 2
        assert body["completeCayleyVector"] == [["a", "c"], ["b", "d"]]
        assert body["warnings"] == []
        assert body["baseNonedges"] == [["a", "c"], ["b", "d"]]

    def test_deterministic_output(self, four_bar_file):
        first = invoke(["check", four_bar_file])
        second = invoke(["check", four_bar_file])
        assert first == second

    def test_missing_file(self):
        status, out, _ = invoke(["check", "/nonexistent.json"])
        assert status == 2
        assert json.loads(out)["error"] == "InvalidLinkage"

    def test_base_override(self, four_bar_file):
        status, out, _ = invoke(["check", four_bar_file, "--base", "b,d"])
        assert status == 0
        assert json.loads(out)["baseNonedge"] == ["b", "d"]


class TestCcs:
    def test_four_bar(self, four_bar_file):
        status, out, _ = invoke(["ccs", four_bar_file])
        assert status == 0
        body = json.loads(out)
        (lo, hi), = body["nonOriented"]
        assert (lo, hi) == pytest.approx((4.0, 7.5), abs=1e-6)
        assert {o["type"] for o in body["oriented"]} == {"++", "+-"}

    def test_not_low_is_domain_error(self, tmp_path):
        doc = {
            "vertices": ["a", "b", "v1", "v2", "v3"],
            "bars": [
                {"u": "a", "v": "v1", "length": 2},
                {"u": "b", "v": "v1", "length": 2.5},
                {"u": "a", "v": "v2", "length": 3},
                {"u": "b", "v": "v2", "length": 3.5},
                {"u": "a", "v": "v3", "length": 1.2},
                {"u": "v2", "v": "v3", "length": 2.2},
            ],
            "baseNonedge": ["a", "b"],
        }
        path = tmp_path / "notlow.json"
        path.write_text(json.dumps(doc))
        status, out, _ = invoke(["ccs", str(path)])
        assert status == 1
        assert json.loads(out)["error"] == "NotLowComplexity"


class TestComponents:
    def test_four_bar(self, four_bar_file):
        status, out, _ = invoke(["components", four_bar_file])
        body = json.loads(out)
        assert status == 0
        assert len(body["components"]) == 1
        assert body["components"][0]["legCount"] == 2

    def test_fan3(self, fan3_file):
        status, out, _ = invoke(["components", fan3_file])
        assert len(json.loads(out)["components"]) == 2


class TestRealize:
    def test_four_bar_realization(self, four_bar_file):
        status, out, _ = invoke(["realize", four_bar_file, "--length", "5", "--type", "++"])
        assert status == 0
        body = json.loads(out)
        assert body["baseLength"] == 5.0
        assert body["type"] == "++"
        assert body["points"]["b"] == pytest.approx([-0.7, 1.8734993995195195])
        assert body["points"]["d"] == pytest.approx([1.375, 2.666341125962693])

    def test_unrealizable_exit_1(self, four_bar_file):
        status, out, _ = invoke(["realize", four_bar_file, "--length", "9", "--type", "++"])
        assert status == 1
        assert json.loads(out)["error"] == "Unrealizable"


class TestPath:
    def test_two_paths_shortest_first(self, four_bar_file):
        status, out, _ = invoke(
            ["path", four_bar_file, "--from", "5:++", "--to", "5:+-"]
        )
        assert status == 0
        body = json.loads(out)
        assert len(body["paths"]) == 2
        first, second = body["paths"]
        assert first["kind"] == "path" and len(first["legs"]) == 2

        def arc(path):
            total = 0.0
            for leg in path["legs"]:
                start = leg.get("clipStart", leg["lower" if leg["enterAt"] == "lower" else "upper"])
                end = leg.get("clipEnd", leg["lower" if leg["exitAt"] == "lower" else "upper"])
                total += abs(end - start)
            return total

        assert arc(first) <= arc(second)

    def test_not_connected_payload(self, fan3_file):
        status, out, _ = invoke(
            ["path", fan3_file, "--from", "5:+++", "--to", "5:++-"]
        )
        assert status == 1
        body = json.loads(out)
        assert body["error"] == "NotConnected"
        assert "nearest" in body and "distance" in body["nearest"]


class TestClosest:
    def test_dependent3(self, dependent3_file):
        status, out, _ = invoke(
            ["closest", dependent3_file, "--component", "0", "--component", "1", "--samples", "16"]
        )
        assert status == 0
        body = json.loads(out)
        assert body["distance"] > 0.1
        assert "points" in body["r1"] and "points" in body["r2"]


class TestCurve3D:
    def test_json(self, fan3_file):
        status, out, _ = invoke(
            ["curve3d", fan3_file, "--component", "0", "--nonedges", "a,b", "u,v", "u,w", "--samples", "8"]
        )
        assert status == 0
        body = json.loads(out)
        assert len(body["points"]) == len(body["typeLabels"]) == len(body["sampleParams"])

    def test_csv(self, fan3_file):
        status, out, _ = invoke(
            ["curve3d", fan3_file, "--component", "0", "--nonedges", "a,b", "u,v", "u,w",
             "--samples", "4", "--format", "csv"]
        )
        assert status == 0
        lines = out.strip().splitlines()
        assert lines[0] == "param,leg,type,x,y,z"
        assert len(lines) > 4

    def test_nonedge_not_in_vector(self, four_bar_file):
        status, out, _ = invoke(
            ["curve3d", four_bar_file, "--nonedges", "a,c", "b,d", "a,b"]
        )
        assert status == 1
        assert json.loads(out)["error"] == "NonedgeNotInVector"


class TestTrace:
    def test_json(self, four_bar_file):
        status, out, _ = invoke(
            ["trace", four_bar_file, "--vertex", "d", "--vertex", "b", "--samples", "8"]
        )
        assert status == 0
        body = json.loads(out)
        assert set(body) == {"d", "b"}

    def test_csv_single_vertex(self, four_bar_file):
        status, out, _ = invoke(
            ["trace", four_bar_file, "--vertex", "d", "--samples", "4", "--format", "csv"]
        )
        assert status == 0
        assert out.splitlines()[0] == "param,leg,type,x,y"

    def test_csv_two_vertices_rejected(self, four_bar_file):
        status, out, _ = invoke(
            ["trace", four_bar_file, "--vertex", "d", "--vertex", "b", "--format", "csv"]
        )
        assert status == 2

    def test_unknown_vertex(self, four_bar_file):
        status, out, _ = invoke(["trace", four_bar_file, "--vertex", "zz"])
        assert status == 1
        assert json.loads(out)["error"] == "UnknownVertex"
