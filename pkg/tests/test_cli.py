import json
import xml.etree.ElementTree as ET

import pytest

from ordered_theta.builder import build
from ordered_theta.cli import main
from ordered_theta.formats import (
    FormatError,
    graph_to_json,
    parse_points,
    read_graph,
    read_points,
    write_points,
)
from ordered_theta.instances import make_backtrack_demo

SVG = "{http://www.w3.org/2000/svg}"


@pytest.fixture
def graph_file(tmp_path):
    pts = tmp_path / "pts.txt"
    out = tmp_path / "graph.json"
    assert main(["gen", "--n", "25", "--seed", "3", "--k", "5", "--out", str(pts)]) == 0
    assert main(["build", "--points", str(pts), "--out", str(out)]) == 0
    return out


def test_points_roundtrip(tmp_path):
    pts = make_backtrack_demo()
    path = tmp_path / "p.txt"
    write_points(path, pts, 4)
    assert path.read_text().splitlines()[0] == "4 4"
    assert read_points(path) == (4, pts)


@pytest.mark.parametrize("text", ["", "4 2\n0 0\n", "4 1\n0\n", "x y\n", "4 1\n1 2 3\n"])
def test_bad_points(text):
    with pytest.raises(FormatError):
        parse_points(text)


def test_graph_json_roundtrip(graph_file):
    text = graph_file.read_text()
    g = read_graph(graph_file)
    assert graph_to_json(g) == text
    data = json.loads(text)
    assert set(data) == {"k", "vertices", "edges"}
    assert data["edges"] == sorted(data["edges"]) and all(a < b for a, b in data["edges"])
    assert [v["id"] for v in data["vertices"]] == list(range(1, 26))
    assert g.k == 5 and g.n == 25


def test_build_k_override(tmp_path):
    pts = tmp_path / "p.txt"
    write_points(pts, make_backtrack_demo(), 4)
    out = tmp_path / "g.json"
    assert main(["build", "--points", str(pts), "--k", "8", "--out", str(out)]) == 0
    assert read_graph(out).k == 8


def test_route_same_vertex(graph_file, tmp_path):
    trace = tmp_path / "t.json"
    code = main(["route", "--graph", str(graph_file), "--s", "4", "--t", "4", "--trace", str(trace)])
    assert code == 0
    data = json.loads(trace.read_text())
    assert data["hops"] == [] and data["result"] == "arrived"


def test_route_failure_exit_code(tmp_path, capsys):
    out = tmp_path / "g.json"
    out.write_text(graph_to_json(build([(0, 0), (2, 1), (1, 3)], 4)))
    assert main(["route", "--graph", str(out), "--algo", "theta", "--s", "1", "--t", "3"]) == 2
    assert main(["route", "--graph", str(out), "--s", "1", "--t", "3", "--budget", "1"]) == 2
    assert main(["route", "--graph", str(out), "--s", "1", "--t", "3"]) == 0


def test_input_errors(tmp_path, capsys):
    assert main(["route", "--graph", str(tmp_path / "missing.json"), "--s", "1", "--t", "2"]) == 1
    with pytest.raises(SystemExit) as info:
        main(["route", "--s", "1"])
    assert info.value.code == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("4 2\n0 0\n1 1\n")
    assert main(["build", "--points", str(bad), "--out", str(tmp_path / "g.json")]) == 1
    assert "general position" in capsys.readouterr().err


def test_demo_stuck(capsys):
    assert main(["demo-stuck"]) == 0
    out = capsys.readouterr().out
    assert "theta: stuck at vertex 1" in out
    assert "a: arrived in 2 hops" in out


def test_demo_impossibility_greedy(capsys):
    assert main(["demo-impossibility", "--h", "1", "--k", "4", "--algo", "greedy"]) == 0
    out = capsys.readouterr().out
    assert "L: greedy budget_exhausted after 50 hops" in out
    assert "fails on L" in out
    assert "identical: True" in out


def test_lr_command(tmp_path):
    left, right = tmp_path / "l.txt", tmp_path / "r.txt"
    assert main(["lr", "--h", "2", "--k", "5", "--out-l", str(left), "--out-r", str(right)]) == 0
    kl, pl = read_points(left)
    kr, pr = read_points(right)
    assert kl == kr == 5 and len(pl) == len(pr) == 7
    assert pl[5][0] == -2.0 and pr[5][0] == 2.0


def test_stats(graph_file, capsys):
    assert main(["stats", "--graph", str(graph_file), "--pairs", "15"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["n"] == 25 and report["m"] <= 5 * 24
    assert report["max_stretch"] >= 1.0
    assert report["router_success"]["a"] == report["pairs"] == 15


def test_render(graph_file, tmp_path):
    g = read_graph(graph_file)
    trace = tmp_path / "t.json"
    assert main(["route", "--graph", str(graph_file), "--s", "25", "--t", "9", "--trace", str(trace)]) == 0
    svg = tmp_path / "out.svg"
    assert main(["render", "--graph", str(graph_file), "--trace", str(trace), "--out", str(svg)]) == 0
    root = ET.parse(svg).getroot()
    assert root.get("viewBox") == "0 0 1000 1000"
    assert len(root.findall(f".//{SVG}circle")) == g.n
    assert len(root.findall(f".//{SVG}line")) == g.m
    assert len(root.findall(f".//{SVG}polyline")) == 1
    for c in root.findall(f".//{SVG}circle"):
        assert 49.9 <= float(c.get("cx")) <= 950.1 and 49.9 <= float(c.get("cy")) <= 950.1

    plain = tmp_path / "plain.svg"
    assert main(["render", "--graph", str(graph_file), "--out", str(plain)]) == 0
    assert ET.parse(plain).getroot().findall(f".//{SVG}polyline") == []


def test_render_flips_y(tmp_path):
    out = tmp_path / "g.json"
    out.write_text(graph_to_json(build([(0, 0), (0.3, 1)], 4)))
    svg = tmp_path / "o.svg"
    assert main(["render", "--graph", str(out), "--out", str(svg)]) == 0
    cys = [float(c.get("cy")) for c in ET.parse(svg).getroot().findall(f".//{SVG}circle")]
    assert cys[0] > cys[1]
