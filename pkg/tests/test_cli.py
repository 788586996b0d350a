import io
import json
import subprocess
import sys

import pytest

from steinerkit import scene as scenes
from steinerkit.cli import CSV_COLUMNS, run
from steinerkit.gallery import gallery


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = run(argv, out, err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def fields(text):
    return dict(line.split(": ", 1) for line in text.splitlines()[1:] if ": " in line)


@pytest.fixture
def fig1a(tmp_path):
    p = tmp_path / "fig1a.json"
    assert call(["gallery", "fig1a", "-o", str(p)])[0] == 0
    return p


@pytest.fixture
def square(tmp_path):
    p = tmp_path / "square.json"
    p.write_text(json.dumps({"dim": 1, "cells": [{"id": "I", "interval": [0, 1]}],
                             "fields": {"v": {"I": {"grad": [0], "off": 1}}}}))
    return p


def test_perimeter_square(square):
    code, out, _ = call(["perimeter", str(square), "--mode", "F"])
    assert code == 0 and fields(out)["total"] == "4" and fields(out)["agree"] == "true"


def test_rigidity_fig1a(fig1a):
    code, out, _ = call(["rigidity", str(fig1a)])
    f = fields(out)
    assert code == 0 and f["status"] == "non_rigid" and f["epsilon"] == "1" and f["t"] == "1/2"
    assert call(["rigidity", str(fig1a), "--expect", "rigid"])[0] == 2
    assert call(["rigidity", str(fig1a), "--expect", "non_rigid"])[0] == 0


def test_gallery_pipe_verify():
    _, text, _ = call(["gallery", "cantor", "--depth", "3"])
    code, out, _ = call(["verify-equality"], stdin=text)
    assert code == 0 and fields(out)["result"] == "pass"


def test_verify_fails_on_lifted_step():
    _, text, _ = call(["gallery", "lifted_step"])
    code, out, _ = call(["verify-equality", "-"], stdin=text)
    assert code == 2 and fields(out)["result"] == "fail" and fields(out)["jump_violations"] == "1"


def test_reports_are_deterministic(fig1a):
    a = call(["rigidity", str(fig1a)])[1]
    b = call(["rigidity", str(fig1a)])[1]
    assert a == b and "seconds" not in a
    assert "seconds" in call(["rigidity", str(fig1a), "--timing"])[1]


def test_witness_roundtrip(fig1a, tmp_path):
    out_path = tmp_path / "w.json"
    code, out, _ = call(["witness", str(fig1a), "--cut", "R", "--t", "1/4", "--emit-witness", str(out_path)])
    assert code == 0 and fields(out)["equality_case"] == "true"
    assert call(["verify-equality", str(out_path)])[0] == 0
    code, _, err = call(["witness", str(fig1a), "--cut", "R", "--t", "1"])
    assert code == 1 and "exceeds" in err


def test_check_connect():
    _, text, _ = call(["gallery", "fig1b"])
    code, out, _ = call(["check-connect"], stdin=text)
    assert code == 0 and fields(out)["disconnects"] == "true" and fields(out)["indecomposable"] == "false"


def test_symmetrize_and_csv_svg(fig1a, tmp_path):
    csv_path, svg_path, emit = tmp_path / "l.csv", tmp_path / "f.svg", tmp_path / "s.json"
    code, out, _ = call(["symmetrize", str(fig1a), "--csv", str(csv_path), "--svg", str(svg_path),
                         "--emit", str(emit)])
    assert code == 0 and fields(out)["volume"] == "3/2"
    rows = csv_path.read_text().splitlines()
    assert rows[0].split(",") == CSV_COLUMNS and len(rows) == 1 + 2 + 3
    assert svg_path.read_text().startswith("<svg")
    assert scenes.load(str(emit)).has("v")


def test_dim2_svg(tmp_path):
    _, text, _ = call(["gallery", "casetta"])
    svg = tmp_path / "c.svg"
    assert call(["rigidity", "--svg", str(svg)], stdin=text)[0] == 0
    assert "#d62728" in svg.read_text()


def test_double_override(fig1a):
    code, out, _ = call(["perimeter", str(fig1a), "--arithmetic", "double"])
    assert code == 0 and fields(out)["arithmetic"] == "double" and fields(out)["total"] == "6"


@pytest.mark.parametrize("text,line", [
    ('{"dim": 1,\n "cells": [{"id": "a", "interval": [0, 1], "extra": 2}],\n "fields": {}}', 2),
    ('{"dim": 1,\n "cells": [\n', 3),
    ('{"dim": 1,\n "cells": [{"id": "a", "interval": [0, 1]}],\n "fields": {"v": {"zz": 1}}}', 3),
    ('{"dim": 1, "cells": [], "fields": {}, "colour": 1}', 1),
])
def test_parse_errors_are_line_anchored(text, line):
    code, _, err = call(["perimeter"], stdin=text)
    assert code == 1 and err.startswith(f"<stdin>:{line}:")


def test_usage_errors_exit_1():
    assert call(["perimeter", "--mode", "Q"])[0] == 1
    assert call([])[0] == 1
    assert call(["gallery", "nope"])[0] == 1


def test_scene_roundtrip():
    e = gallery("example11", 1)
    again = scenes.loads(scenes.dumps(e.scene))
    assert again.field("v").same_as(e.v) and again.field("b").same_as(e.b)


def test_module_entry_point(square):
    res = subprocess.run([sys.executable, "-m", "steinerkit", "perimeter", str(square)],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "total: 4" in res.stdout
