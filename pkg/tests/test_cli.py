import json
import subprocess
import sys

import pytest

from casedraw.cli import main
from casedraw.documents import serialize_drawing
from casedraw.fixtures import grid, parallel_triangles, triangle


@pytest.fixture
def files(tmp_path):
    def write(name, d):
        p = tmp_path / name
        p.write_text(serialize_drawing(d))
        return str(p)

    return tmp_path, write


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_triangle_total_switches(files, capsys):
    tmp, write = files
    src = write("tri.json", triangle())
    out = tmp / "c.json"
    code, _, _ = run(["solve", src, "--model", "weaving", "--objective", "min-total-switches", "-o", str(out)], capsys)
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["value"] == 1
    assert doc["solver"]["method"] == "exact"
    assert len(doc["casing"]) == 3


@pytest.mark.parametrize("objective", ["min-total-switches", "min-max-switches"])
def test_stacking_switch_objectives_are_open(files, capsys, objective):
    _, write = files
    code, _, err = run(["solve", write("g.json", grid()), "--model", "stacking", "--objective", objective], capsys)
    assert code == 1
    assert "open problem (Table 1)" in err


def test_weaving_min_max_switches_is_open(files, capsys):
    _, write = files
    code, _, err = run(["solve", write("g.json", grid()), "--model", "weaving", "--objective", "min-max-switches"], capsys)
    assert code == 1 and "open problem (Table 1)" in err


def test_oracle_grid_distance(files, capsys):
    _, write = files
    code, out, _ = run(["oracle", write("g.json", grid()), "--model", "weaving", "--objective", "max-min-tunnel-distance"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["value"]["squared"] == "4"
    assert doc["solver"]["method"] == "oracle"
    assert len(doc["fingerprint"]) == 64


def test_oracle_cap_exit_code(files, capsys):
    _, write = files
    code, _, err = run(["oracle", write("g.json", grid()), "--model", "weaving", "--objective", "min-max-tunnels", "--cap", "3"], capsys)
    assert code == 3 and "cap" in err


def test_budget_exit_code_and_fallback(files, capsys):
    _, write = files
    src = write("p.json", parallel_triangles(2))
    args = ["solve", src, "--model", "weaving", "--objective", "min-max-tunnel-length", "--exact-budget", "1"]
    assert run(args, capsys)[0] == 3
    code, out, err = run(args + ["--heuristic-fallback"], capsys)
    assert code == 0 and "heuristic" in err
    assert json.loads(out)["solver"]["method"] == "heuristic"


def test_invalid_drawing_exit_code(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"casing_width": "0.1", "vertices": [{"id": 0, "x": 0, "y": 0}], "edges": [{"id": 0, "u": 0, "v": 4}]}))
    code, _, err = run(["solve", str(p), "--model", "weaving", "--objective", "min-max-tunnels"], capsys)
    assert code == 2 and "edges[0].v" in err


def test_missing_file_exit_code(capsys):
    assert run(["validate", "/nonexistent/drawing.json"], capsys)[0] == 2


def test_usage_errors(capsys):
    assert run([], capsys)[0] == 1
    assert run(["solve"], capsys)[0] == 1
    assert run(["gen", "grid", "nonsense"], capsys)[0] == 1
    assert run(["gen", "no-such-fixture"], capsys)[0] == 1


def test_validate_reports_errors(tmp_path, capsys):
    from casedraw.fixtures import from_segments

    p = tmp_path / "t.json"
    p.write_text(serialize_drawing(from_segments([((0, 0), (4, 0)), ((2, 0), (2, 3))])))
    code, out, _ = run(["validate", str(p)], capsys)
    assert code == 2
    assert json.loads(out)["errors"][0]["kind"] == "vertex-near-edge"


def test_gen_then_solve_then_render(tmp_path, capsys):
    d, c, svg, svg2 = (tmp_path / n for n in ("d.json", "c.json", "a.svg", "b.svg"))
    assert run(["gen", "grid", "h=2", "v=3", "-o", str(d)], capsys)[0] == 0
    assert run(["solve", str(d), "--model", "stacking", "--objective", "min-max-tunnels", "-o", str(c)], capsys)[0] == 0
    assert "stacking_order" in json.loads(c.read_text())
    assert run(["render", str(d), str(c), "-o", str(svg), "--margin", "0.05"], capsys)[0] == 0
    assert svg.read_text().count('class="crossing"') == 6
    assert run(["render", str(d), str(c), "-o", str(svg2), "--global-order"], capsys)[0] == 0
    assert 'id="stack"' in svg2.read_text()


def test_outputs_are_byte_identical(tmp_path, capsys):
    outs = []
    for i in range(2):
        d, c = tmp_path / f"d{i}.json", tmp_path / f"c{i}.json"
        run(["gen", "random-segments", "count=9", "--seed", "4", "-o", str(d)], capsys)
        run(["solve", str(d), "--model", "weaving", "--objective", "min-max-tunnel-length", "-o", str(c)], capsys)
        outs.append((d.read_bytes(), c.read_bytes()))
    assert outs[0] == outs[1]


def test_module_entry_point(tmp_path):
    d = tmp_path / "d.json"
    d.write_text(serialize_drawing(triangle()))
    proc = subprocess.run(
        [sys.executable, "-m", "casedraw", "solve", str(d), "--model", "weaving", "--objective", "min-max-tunnels"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == 1
