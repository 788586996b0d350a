"""Command-line front end.

Every subcommand reads a scene file (``-`` or no argument means standard
input) and prints a plain-text report.  Reports are byte-identical across
runs; wall-clock timing is appended only with ``--timing``.

Exit codes: 0 success, 1 invalid input or arguments, 2 a check did not
come out as requested (``rigidity --expect``, ``verify-equality``),
1 from ``selftest`` when a criterion fails.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time

from . import scene as scenes
from .arith import fmt
from .connectivity import (ConnectivityError, essentially_disconnects, is_covered, is_indecomposable_F,
                           jump_set_portions, union_portions, zero_set_portions)
from .field import FieldError, PwAffineField, classify_facets, facet_traces, positive_support
from .gallery import ENTRIES, GalleryError, gallery
from .oracle import oracle_perimeter
from .perimeter import perimeter_formula
from .polyset import PolysetError, PolyVerticalSet, build_W, min_translate_symdiff, steiner_symmetral, volume
from .rigidity import RigidityError, check_equality_case, construct_witness, crossable_facets, decide_rigidity
from .svg import scene_svg

CLASS_HINTS = {"auto": "auto", "planar": "planar", "no-vertical": "no_vertical",
               "polyhedral": "polyhedral", "stairway": "stairway"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# --- input ------------------------------------------------------------------

class Input:
    def __init__(self, path: str, arithmetic: str | None):
        self.path = path
        self.source = "<stdin>" if path == "-" else path
        if path == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(path, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise scenes.SceneError(f"cannot read: {exc.strerror}") from None
        self.digest = hashlib.sha256(text.encode()).hexdigest()[:16]
        if arithmetic:
            try:
                doc = json.loads(text)
            except json.JSONDecodeError as exc:
                raise scenes.SceneError(f"malformed JSON: {exc.msg} (column {exc.colno})", exc.lineno) from None
            if isinstance(doc, dict):
                doc["arithmetic"] = arithmetic
            self.scene = scenes.scene_from_mapping(doc, text)
        else:
            self.scene = scenes.loads(text)

    @property
    def v(self) -> PwAffineField:
        if self.scene.has("v"):
            return self.scene.field("v")
        if self.scene.has("u1") and self.scene.has("u2"):
            return self.the_set().slice_length
        raise scenes.SceneError("scene needs a field 'v' (or 'u1' and 'u2')")

    def the_set(self) -> PolyVerticalSet:
        """The set described by (u1, u2), or (v, b), or the symmetral of v."""
        s = self.scene
        if s.has("u1") and s.has("u2"):
            return PolyVerticalSet(s.field("u1"), s.field("u2"))
        v = self.v
        b = s.field("b") if s.has("b") else PwAffineField.zero(v.complex, "b")
        return build_W(v, b)


class Report:
    def __init__(self, command: str, inp: Input | None):
        self.lines = [f"steinerkit {command}"]
        if inp is not None:
            name = inp.scene.name or inp.source
            self.lines.append(f"input: {name} (sha256 {inp.digest})")
            self.lines.append(f"arithmetic: {inp.scene.complex.mode}")

    def add(self, key: str, value) -> None:
        if isinstance(value, (list, tuple, set, frozenset)):
            value = " ".join(str(x) for x in value) if value else "-"
        elif not isinstance(value, str):
            value = fmt(value)
        self.lines.append(f"{key}: {value}")

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _labels(cx, cells) -> list:
    return sorted(cx.cells[c].label for c in cells)


# --- csv / svg ----------------------------------------------------------------

CSV_COLUMNS = ["kind", "id", "measure", "ac_term", "jump_term", "boundary_term",
               "v_inf", "v_sup", "jump_essinf", "crossable"]


def ledger_rows(v: PwAffineField, breakdown=None) -> list:
    cx = v.complex
    classes = classify_facets(v)
    cross = crossable_facets(v)
    rows = []
    for cell in cx.cells:
        vals = v.vertex_values(cell.index) if cell.index in v.support else [0]
        ac = breakdown.cell_terms.get(cell.index, 0) if breakdown else ""
        rows.append(["cell", cell.label, fmt(cell.measure), fmt(ac) if ac != "" else "", "", "",
                     fmt(min(vals)), fmt(max(vals)), "", ""])
    for f in cx.facets:
        tr = facet_traces(v, f)
        jt, bt = breakdown.facet_terms.get(f.index, (0, 0)) if breakdown else ("", "")
        cr = cross.get(f.index)
        rows.append(["facet", str(f.index), fmt(f.measure), "", fmt(jt) if jt != "" else "",
                     fmt(bt) if bt != "" else "", fmt(min(tr.lower)), fmt(max(tr.upper)),
                     fmt(classes[f.index].jump_essinf), "" if cr is None else str(cr).lower()])
    return rows


def write_csv(path: str, v: PwAffineField, breakdown=None) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        w.writerows(ledger_rows(v, breakdown))


def write_svg(path: str, v: PwAffineField, b=None, title="scene") -> None:
    cross = crossable_facets(v) if v.complex.dim == 2 else None
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(scene_svg(v, b, cross, title))


def _write_scene(path: str, scene) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(scenes.dumps(scene))


# --- subcommands ------------------------------------------------------------------

def cmd_symmetrize(args, inp: Input, rep: Report) -> int:
    E = inp.the_set()
    v, b = E.slice_length, E.barycenter
    F = steiner_symmetral(v)
    rep.add("support", _labels(v.complex, E.support))
    rep.add("volume", volume(E))
    rep.add("perimeter_set", oracle_perimeter(E))
    rep.add("perimeter_symmetral", oracle_perimeter(F))
    if args.emit:
        _write_scene(args.emit, scenes.make_scene({"v": v}, f"{inp.scene.name or 'scene'}-symmetral"))
        rep.add("wrote", args.emit)
    if args.svg:
        write_svg(args.svg, v, None, "symmetral")
    if args.csv:
        write_csv(args.csv, v, perimeter_formula("F", v))
    return 0


def cmd_perimeter(args, inp: Input, rep: Report) -> int:
    mode = args.mode
    s = inp.scene
    if mode == "F":
        fields = (inp.v,)
        E = steiner_symmetral(inp.v)
    elif mode == "W":
        E = inp.the_set()
        fields = (E.slice_length, E.barycenter)
    else:
        E = inp.the_set()
        fields = (E.lower, E.upper)
    br = perimeter_formula(mode, *fields)
    po = oracle_perimeter(E)
    rep.add("mode", mode)
    rep.add("ac_part", br.ac_part)
    rep.add("jump_part", br.jump_part)
    rep.add("boundary_zero_part", br.boundary_zero_part)
    rep.add("total", br.total)
    rep.add("oracle", po)
    rep.add("agree", abs(br.total - po) <= 1e-9 * max(1, abs(po)))
    v = E.slice_length
    if args.csv:
        write_csv(args.csv, v, br)
    if args.svg:
        write_svg(args.svg, v, E.barycenter, f"perimeter {mode}")
    return 0


def _report_witness(rep: Report, w, cx) -> None:
    rep.add("epsilon", w.epsilon)
    rep.add("t", w.t)
    rep.add("lifted_cells", _labels(cx, w.plus))
    rep.add("fixed_cells", _labels(cx, w.minus))


def cmd_rigidity(args, inp: Input, rep: Report) -> int:
    v = inp.v
    verdict = decide_rigidity(v, CLASS_HINTS[args.klass])
    rep.add("status", verdict.status)
    rep.add("theorem_path", verdict.theorem_path)
    for note in verdict.notes:
        rep.add("note", note)
    w = verdict.witness
    if w is not None:
        _report_witness(rep, w, v.complex)
        rep.add("witness_perimeter", oracle_perimeter(w.set))
        rep.add("symmetral_perimeter", oracle_perimeter(steiner_symmetral(v)))
        rep.add("distance_to_translates", min_translate_symdiff(w.set, v)[1])
        if args.emit_witness:
            _write_scene(args.emit_witness, _witness_scene(w, inp))
            rep.add("wrote", args.emit_witness)
    if args.svg:
        write_svg(args.svg, v, w.set.barycenter if w else None, f"rigidity: {verdict.status}")
    if args.csv:
        write_csv(args.csv, v, perimeter_formula("F", v))
    if args.expect and verdict.status != args.expect:
        rep.add("expected", args.expect)
        return 2
    return 0


def _witness_scene(w, inp: Input):
    return scenes.make_scene({"v": w.set.slice_length, "b": w.set.barycenter},
                             f"{inp.scene.name or 'scene'}-witness")


def cmd_verify(args, inp: Input, rep: Report) -> int:
    E = inp.the_set()
    v = E.slice_length
    ok, report = check_equality_case(E, v)
    pe, pf = oracle_perimeter(E), oracle_perimeter(steiner_symmetral(v))
    fw = perimeter_formula("W", v, E.barycenter).total
    ff = perimeter_formula("F", v).total
    t, gap = min_translate_symdiff(E, v)
    same = abs(pe - pf) <= 1e-9 * max(1, abs(pf))
    rep.add("gradient_violations", _labels(v.complex, report.gradient_violations))
    rep.add("jump_violations", [str(f) for f in report.jump_violations])
    rep.add("perimeter_set", pe)
    rep.add("perimeter_symmetral", pf)
    rep.add("formula_set", fw)
    rep.add("formula_symmetral", ff)
    rep.add("nearest_translate", t)
    rep.add("distance_to_translates", gap)
    rep.add("translate", gap == 0)
    passed = ok and same
    if ok != same:
        rep.add("warning", "equality conditions and perimeters disagree")
    rep.add("result", "pass" if passed else "fail")
    return 0 if passed else 2


def cmd_witness(args, inp: Input, rep: Report) -> int:
    v = inp.v
    cx = v.complex
    if args.cut:
        cut = [c.strip() for c in args.cut.split(",") if c.strip()]
    else:
        verdict = decide_rigidity(v, "polyhedral")
        if verdict.witness is None:
            raise RigidityError("v is rigid: no crossable cut exists")
        cut = sorted(verdict.witness.plus)
    w = construct_witness(v, cut, args.t)
    _report_witness(rep, w, cx)
    ok, _ = check_equality_case(w.set, v)
    rep.add("equality_case", ok)
    rep.add("witness_perimeter", oracle_perimeter(w.set))
    rep.add("symmetral_perimeter", oracle_perimeter(steiner_symmetral(v)))
    rep.add("distance_to_translates", min_translate_symdiff(w.set, v)[1])
    if args.emit_witness:
        _write_scene(args.emit_witness, _witness_scene(w, inp))
        rep.add("wrote", args.emit_witness)
    if args.svg:
        write_svg(args.svg, v, w.set.barycenter, "witness")
    return 0


def cmd_connect(args, inp: Input, rep: Report) -> int:
    v = inp.v
    cx = v.complex
    supp = positive_support(v)
    parts = []
    if "zero" in args.K:
        parts.append(zero_set_portions(v))
    if "jump" in args.K:
        parts.append(jump_set_portions(v, cx.arith.num(args.eps)))
    K = union_portions(*parts)
    cut, split = essentially_disconnects(cx, K, supp)
    rep.add("K", args.K)
    if "jump" in args.K:
        rep.add("eps", cx.arith.num(args.eps))
    rep.add("covered_interior_facets",
            [str(f) for f in sorted(K) if cx.facets[f].interior and is_covered(cx, f, K[f])])
    rep.add("disconnects", cut)
    if split:
        rep.add("G_plus", _labels(cx, split[0]))
        rep.add("G_minus", _labels(cx, split[1]))
    rep.add("indecomposable", is_indecomposable_F(v))
    if args.svg:
        write_svg(args.svg, v, None, "connectivity")
    return 0


def cmd_gallery(args, out) -> int:
    if args.list or not args.name:
        for name in ENTRIES:
            out.write(f"{name}\n")
        return 0
    e = gallery(args.name, args.depth)
    text = scenes.dumps(e.scene)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    if args.svg:
        write_svg(args.svg, e.v, e.b, e.scene.name or e.name)
    return 0


def cmd_selftest(args, out) -> int:
    from .acceptance import run_all

    results = run_all(out)
    failed = [r for r in results if not r.passed]
    out.write(f"{len(results) - len(failed)}/{len(results)} criteria passed\n")
    return 1 if failed else 0


# --- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="steinerkit", description="Perimeter formulas and rigidity of Steiner symmetrals.")
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)

    def scene_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("scene", nargs="?", default="-", help="scene JSON file ('-' for stdin, the default)")
        sp.add_argument("--arithmetic", choices=("rational", "double"), help="override the scene's arithmetic")
        sp.add_argument("--svg", metavar="FILE", help="write a figure")
        sp.add_argument("--timing", action="store_true", help="append the wall-clock time to the report")
        return sp

    sp = scene_cmd("symmetrize", "slice length, volume and perimeters of a set and its symmetral")
    sp.add_argument("--emit", metavar="FILE", help="write the symmetral as a scene")
    sp.add_argument("--csv", metavar="FILE", help="write the per-cell/per-facet ledger")

    sp = scene_cmd("perimeter", "formula perimeter breakdown checked against the oracle")
    sp.add_argument("--mode", choices=("F", "W", "U"), default="F")
    sp.add_argument("--csv", metavar="FILE", help="write the per-cell/per-facet ledger")

    sp = scene_cmd("rigidity", "decide whether equality cases are translates of the symmetral")
    sp.add_argument("--class", dest="klass", choices=tuple(CLASS_HINTS), default="auto")
    sp.add_argument("--expect", choices=("rigid", "non_rigid"), help="exit 2 when the verdict differs")
    sp.add_argument("--emit-witness", metavar="FILE", help="write the witness set as a scene")
    sp.add_argument("--csv", metavar="FILE", help="write the per-cell/per-facet ledger")

    scene_cmd("verify-equality", "check that the scene's (v, b) set is an equality case")

    sp = scene_cmd("witness", "lift the symmetral over a cut and verify the result")
    sp.add_argument("--cut", help="comma-separated cell ids to lift (default: the decider's cut)")
    sp.add_argument("--t", help="offset, e.g. 1/4 (default: half the jump bound)")
    sp.add_argument("--emit-witness", metavar="FILE", help="write the witness set as a scene")

    sp = scene_cmd("check-connect", "does the zero set (and/or jump set) of v disconnect its support?")
    sp.add_argument("--K", choices=("zero", "jump", "zero+jump"), default="zero")
    sp.add_argument("--eps", default="0", help="jump threshold for --K jump (default 0)")

    sp = sub.add_parser("gallery", help="print a named scene")
    sp.add_argument("name", nargs="?", help="entry name")
    sp.add_argument("--depth", type=int, help="truncation depth")
    sp.add_argument("--list", action="store_true", help="list the entries")
    sp.add_argument("-o", "--output", metavar="FILE", help="write the scene here instead of stdout")
    sp.add_argument("--svg", metavar="FILE", help="write a figure")

    sub.add_parser("selftest", help="run the acceptance suite")
    return p


COMMANDS = {
    "symmetrize": cmd_symmetrize,
    "perimeter": cmd_perimeter,
    "rigidity": cmd_rigidity,
    "verify-equality": cmd_verify,
    "witness": cmd_witness,
    "check-connect": cmd_connect,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return 1
    if not args.command:
        parser.print_help(err)
        return 1
    t0 = time.perf_counter()
    source = getattr(args, "scene", None)
    try:
        if args.command == "gallery":
            return cmd_gallery(args, out)
        if args.command == "selftest":
            return cmd_selftest(args, out)
        inp = Input(args.scene, args.arithmetic)
        rep = Report(args.command, inp)
        code = COMMANDS[args.command](args, inp, rep)
    except scenes.SceneError as exc:
        err.write(exc.anchored("<stdin>" if source in (None, "-") else source) + "\n")
        return 1
    except (GalleryError, RigidityError, PolysetError, FieldError, ConnectivityError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"{'<stdin>' if source in (None, '-') else source or 'steinerkit'}: error: {msg}\n")
        return 1
    if args.timing:
        rep.add("seconds", f"{time.perf_counter() - t0:.3f}")
    out.write(rep.text())
    return code


def main() -> None:
    sys.exit(run())
