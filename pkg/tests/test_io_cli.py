import csv
import json

import pytest

from oorep.cli import main
from oorep.generators import fan, octahedron
from oorep.io import InputError, graph_from_json, graph_to_json
from oorep.recognize import recognize
from oorep.render import render_svg

from conftest import k3_drawing


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr()


def test_check_f6(tmp_path, capsys):
    f = write(tmp_path, "f6.json", graph_to_json(fan(6)))
    code, out = run(["check", "-i", f], capsys)
    assert code == 0 and json.loads(out.out)["representable"] is True


def test_check_octahedron(tmp_path, capsys):
    f = write(tmp_path, "oct.json", graph_to_json(octahedron()))
    code, out = run(["check", "-i", f], capsys)
    assert code == 1
    assert json.loads(out.out)["reason"]["kind"] == "inner_degree_violation"


def test_check_gadget_with_oracle(capsys, tmp_path):
    code, out = run(["gen", "--family", "triple_k4_gadget"], capsys)
    f = write(tmp_path, "g.json", json.loads(out.out))
    assert run(["check", "-i", f], capsys)[0] == 1
    assert run(["check", "-i", f, "--oracle"], capsys)[0] == 1


def test_oracle_bound(tmp_path, capsys):
    f = write(tmp_path, "fan.json", graph_to_json(fan(30)))
    code, out = run(["check", "-i", f, "--oracle"], capsys)
    assert code == 2 and "exceed" in out.err


@pytest.mark.parametrize("text", ["{", '{"n": 3}', '{"n": 3, "edges": [[0, 0]]}', '{"n": 2, "edges": [[0, 5]]}'])
def test_malformed_input(tmp_path, capsys, text):
    p = tmp_path / "bad.json"
    p.write_text(text)
    code, out = run(["check", "-i", str(p)], capsys)
    assert code == 2 and out.err.startswith("error:")


def test_missing_file(capsys):
    assert run(["check", "-i", "/nonexistent/x.json"], capsys)[0] == 2


def test_draw_then_verify(tmp_path, capsys):
    f = write(tmp_path, "f6.json", graph_to_json(fan(6)))
    out_path = tmp_path / "d.json"
    assert run(["draw", "-i", f, "-o", str(out_path)], capsys)[0] == 0
    code, out = run(["verify", "-i", str(out_path)], capsys)
    rep = json.loads(out.out)
    assert code == 0 and rep["verdict"] is True and len(rep["orientation"]["chords"]) == 3


def test_orient(tmp_path, capsys):
    f = write(tmp_path, "f6.json", graph_to_json(fan(6)))
    code, out = run(["orient", "-i", f], capsys)
    chords = json.loads(out.out)["chords"]
    assert code == 0 and all(arrow == "->" for _, arrow, _ in chords)


def test_verify_square(tmp_path, capsys, square):
    f = write(tmp_path, "sq.json", square.to_json())
    code, out = run(["verify", "-i", f], capsys)
    assert code == 1 and json.loads(out.out)["verdict"] is False


def test_obstacle_cli(tmp_path, capsys, quad):
    f = write(tmp_path, "q.json", quad.to_json())
    code, out = run(["obstacle", "-i", f], capsys)
    assert code == 0 and len(json.loads(out.out)["vertices"]) >= 3
    code, out = run(["obstacle", "-i", f, "--format", "svg"], capsys)
    assert code == 0 and out.out.count('class="obstacle"') == 1


def test_obstacle_cli_refuses_bad(tmp_path, capsys, square):
    f = write(tmp_path, "sq.json", square.to_json())
    assert run(["obstacle", "-i", f], capsys)[0] == 1


def test_gen_deterministic(capsys):
    a = run(["gen", "--family", "random_construction_tree", "--size", "9", "--seed", "4"], capsys)[1].out
    b = run(["gen", "--family", "random_construction_tree", "--size", "9", "--seed", "4"], capsys)[1].out
    c = run(["gen", "--family", "random_construction_tree", "--size", "9", "--seed", "5"], capsys)[1].out
    assert a == b and a != c
    inst = json.loads(a)
    assert "tree" in inst and inst["n"] == len({v for e in inst["edges"] for v in e})


def test_gen_f6_counts(capsys):
    inst = json.loads(run(["gen", "--family", "fan", "--size", "6"], capsys)[1].out)
    assert inst["n"] == 6 and len(inst["edges"]) == 9


def test_gen_bad_size(capsys):
    assert run(["gen", "--family", "fan", "--size", "1"], capsys)[0] == 2


def test_bench_csv_and_plot(tmp_path, capsys):
    png = tmp_path / "b.png"
    code, out = run(["bench", "--sizes", "50", "100", "--format", "csv", "--max-draw-n", "100",
                     "--plot", str(png)], capsys)
    rows = list(csv.DictReader(out.out.splitlines()))
    assert code == 0 and [r["n"] for r in rows] == ["50", "100"]
    assert all(r["verdict"] == "1" and r["embed"] for r in rows)
    assert png.read_bytes()[:4] == b"\x89PNG"


def test_bench_jsonl(capsys):
    code, out = run(["bench", "--size", "40", "--repeat", "2"], capsys)
    recs = [json.loads(x) for x in out.out.splitlines()]
    assert code == 0 and recs[0]["verdict"] and recs[0]["decision_time"] >= 0


def test_svg_counts(quad):
    svg = render_svg(k3_drawing())
    assert svg.count("<line") == 3 and svg.count("<circle") == 3 and "obstacle" not in svg
    svg = render_svg(quad)
    assert svg.count("<line") == 5 and svg.startswith("<svg")


def test_draw_svg(tmp_path, capsys):
    f = write(tmp_path, "f6.json", graph_to_json(fan(6)))
    code, out = run(["draw", "-i", f, "--format", "svg"], capsys)
    assert code == 0 and out.out.count("<line") == 9


def test_rotation_input(tmp_path, capsys):
    ic = recognize(fan(6))
    data = graph_to_json(ic.graph, ic.embedded)
    g, emb = graph_from_json(data)
    assert emb is not None and emb.outer_dart == ic.embedded.outer_dart
    f = write(tmp_path, "e.json", data)
    assert run(["check", "-i", f], capsys)[0] == 0


def test_bad_outer_face_edge():
    data = graph_to_json(fan(4))
    data["rotation"] = [[1, 2, 3], [2, 0], [3, 0, 1], [0, 2]]
    with pytest.raises(InputError):
        graph_from_json(data)


def test_non_biconnected_outerplanar(tmp_path, capsys):
    bowtie = {"n": 5, "edges": [[0, 1], [1, 2], [0, 2], [2, 3], [3, 4], [2, 4]]}
    f = write(tmp_path, "b.json", bowtie)
    assert run(["check", "-i", f], capsys)[0] == 0
    out_path = tmp_path / "d.json"
    assert run(["draw", "-i", f, "-o", str(out_path)], capsys)[0] == 0
    assert run(["verify", "-i", str(out_path)], capsys)[0] == 0
