"""Command line behaviour: catalogue, exit codes, determinism."""

import io
import json
import subprocess
import sys
from contextlib import redirect_stderr, redirect_stdout

import pytest

from gridforge.cli import main
from gridforge.constructors import spiral_tree


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def build(tmp_path, name, *extra):
    path = tmp_path / (name + ".json")
    code, _, err = run(["build", name, *extra, "-o", str(path)])
    assert code == 0, err
    return path


@pytest.mark.parametrize("cmd,expected", [
    (("sphere",), "orientable genus 0"),
    (("torus-paper",), "orientable genus 1"),
    (("torus-32",), "orientable genus 1"),
    (("crosscap-r4",), "nonorientable, 1 crosscap"),
    (("crosscap-30",), "nonorientable, 1 crosscap"),
    (("klein-bottle",), "nonorientable, 2 crosscaps"),
    (("closed-surface", "--genus", "2"), "orientable genus 2"),
    (("closed-surface", "--crosscaps", "3"), "nonorientable, 3 crosscaps"),
    (("tree-of-life", "--depth", "2"), "orientable genus 0"),
    (("pruned-tree", "--depth", "1", "--handles", "1"), "orientable genus 1"),
    (("hyp-torus",), "orientable genus 1"),
    (("hyp-pants",), "orientable genus 0, 3 boundary circles"),
    (("hyp-tree", "--depth", "2"), "orientable genus 0"),
    (("hyp-closed", "--genus", "2"), "orientable genus 2"),
    (("h4-torus",), "orientable genus 1"),
    (("h4-pants",), "orientable genus 0, 3 boundary circles"),
    (("h4-crosscap",), "nonorientable, 1 crosscap"),
    (("h4-surface", "--genus", "1", "--boundary-circles", "1"),
     "orientable genus 1, 1 boundary circle"),
    (("h4-surface", "--crosscaps", "2"), "nonorientable, 2 crosscaps"),
])
def test_catalogue_builds_and_classifies(tmp_path, cmd, expected):
    path = tmp_path / "out.json"
    code, _, err = run(["build", *cmd, "-o", str(path)])
    assert code == 0, err
    code, out, _ = run(["classify", str(path)])
    assert code == 0
    assert out.splitlines()[0] == expected


def test_build_writes_to_stdout_by_default():
    code, out, _ = run(["build", "sphere"])
    assert code == 0
    data = json.loads(out)
    assert data["format"] == "gridded" and len(data["squares"]) == 6


def test_build_is_byte_deterministic():
    for cmd in (["build", "hyp-torus"],
                ["build", "h4-surface", "--crosscaps", "1"],
                ["build", "pruned-tree", "--depth", "1", "--end",
                 "cylinder:2"]):
        outputs = {run(cmd)[1] for _ in range(3)}
        assert len(outputs) == 1


def test_tree_spiral_document():
    code, out, _ = run(["build", "tree-spiral", "--depth", "2"])
    assert code == 0
    data = json.loads(out)
    tree = spiral_tree(2)
    assert data["format"] == "plane_tree"
    assert data["depth"] == 2
    assert len(data["segments"]) == len(tree.segments)
    assert all(len(s) == 4 and all(isinstance(x, int) for x in s)
               for s in data["segments"])
    assert data["leaves"] == sorted([x, y] for x, y in tree.leaves)


def test_validate_reports_and_exit_codes(tmp_path):
    good = build(tmp_path, "torus-paper")
    code, out, _ = run(["validate", str(good)])
    assert code == 0
    assert "surface: yes" in out and "closed: yes" in out
    assert "euler characteristic: 0" in out

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"format": "gridded", "ambient": "Z3",
                               "squares": [[1, 1, 0], [1, 0, 1], [1, 0, -1]]}))
    code, out, _ = run(["validate", str(bad)])
    assert code == 1
    assert "surface: no" in out and "failure:" in out
    code, out, _ = run(["classify", str(bad)])
    assert code == 1
    assert out.splitlines()[0] == "not a surface"


def test_sum_stacks_spheres(tmp_path):
    a = build(tmp_path, "sphere")
    out_path = tmp_path / "sum.json"
    code, _, err = run(["sum", str(a), str(a), "--face-a", "1,1,2",
                        "--face-b", "1,1,0", "-o", str(out_path)])
    assert code == 0, err
    assert len(json.loads(out_path.read_text())["squares"]) == 14
    code, out, _ = run(["classify", str(out_path)])
    assert code == 0
    assert out.splitlines()[0] == "orientable genus 0"


def test_sum_collision_exits_1(tmp_path):
    a = build(tmp_path, "sphere")
    code, _, err = run(["sum", str(a), str(a), "--face-a", "1,1,2",
                        "--face-b", "1,1,2"])
    assert code == 1
    assert "collision at" in err


def test_sum_bad_face_exits_2(tmp_path):
    a = build(tmp_path, "sphere")
    code, _, err = run(["sum", str(a), str(a), "--face-a", "9,9,8",
                        "--face-b", "1,1,0"])
    assert code == 2
    assert "not a square of the first complex" in err


def test_malformed_json_exits_2(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"format": "gridded", "squares": [[1,')
    code, _, err = run(["validate", str(path)])
    assert code == 2
    assert "line 1" in err and "column" in err


def test_schema_error_exits_2(tmp_path):
    path = tmp_path / "odd.json"
    path.write_text('{"format": "dodecahedron"}')
    code, _, err = run(["classify", str(path)])
    assert code == 2
    assert "unknown format" in err


def test_usage_errors_exit_2(tmp_path):
    with pytest.raises(SystemExit) as exc:
        run(["build", "not-a-thing"])
    assert exc.value.code == 2
    code, _, err = run(["build", "closed-surface"])
    assert code == 2 and "--genus/--crosscaps" in err
    code, _, err = run(["build", "h4-surface", "--genus", "1",
                        "--crosscaps", "1"])
    assert code == 2
    code, _, err = run(["stats", "{9,9}"])
    assert code == 2 and "unknown honeycomb" in err


def test_stats_marks_catalogue_differences():
    code, out, _ = run(["stats", "{4,3,4}", "{4,3,3,4}", "{4,3,5}"])
    assert code == 0
    lines = out.splitlines()
    diffs = [ln for ln in lines if ln.endswith("DIFF")]
    assert len(diffs) == 1
    assert diffs[0].startswith("{4,3,3,4} edge:")
    assert "computed 6 12 8" in diffs[0]
    assert "catalogued 6 32 16" in diffs[0]
    vertex_row = [ln for ln in lines if ln.startswith("{4,3,5} vertex")][0]
    assert "computed 12 30 20" in vertex_row
    assert not vertex_row.endswith("DIFF")


def test_stats_default_covers_all_systems():
    code, out, _ = run(["stats"])
    assert code == 0
    lines = out.splitlines()
    assert sum(1 for ln in lines if ln.endswith("DIFF")) == 2
    for name in ("{4,4}", "{4,3,4}", "{4,3,3,4}", "{4,3,5}", "{4,3,3,5}"):
        assert any(ln.startswith(name + " ") for ln in lines)


def test_export_formats(tmp_path):
    path = build(tmp_path, "hyp-pants")
    code, out, _ = run(["export", str(path), "--format", "off"])
    assert code == 0 and out.startswith("OFF\n")
    code, out, _ = run(["export", str(path), "--format", "obj"])
    assert code == 0 and "\nf " in out
    code, out, _ = run(["export", str(path), "--format", "json"])
    assert code == 0 and out == path.read_text()
    abstract = build(tmp_path, "h4-crosscap")
    code, _, err = run(["export", str(abstract), "--format", "off"])
    assert code == 2


def test_missing_file_exits_2(tmp_path):
    code, _, err = run(["validate", str(tmp_path / "nope.json")])
    assert code == 2
    assert "error:" in err


def test_module_invocation_subprocess(tmp_path):
    path = tmp_path / "sphere.json"
    proc = subprocess.run(
        [sys.executable, "-m", "gridforge.cli", "build", "sphere",
         "-o", str(path)], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    proc = subprocess.run(
        [sys.executable, "-m", "gridforge.cli", "classify", str(path)],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "orientable genus 0"
