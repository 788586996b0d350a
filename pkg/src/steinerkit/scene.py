"""Scene files: a JSON document holding a cell complex and named fields.

Layout::

    {
      "name": "step",                      (optional)
      "dim": 1,
      "arithmetic": "rational",            (or "double")
      "cells": [{"id": "L", "interval": ["0", "1/2"]}, ...],
      "fields": {"v": {"L": {"grad": [0], "off": 1}, ...}, "b": {...}}
    }

Numbers may be JSON numbers or ``"p/q"`` strings.  A field entry may also be
a bare number (a constant piece).  Unknown keys are errors.  Cells missing
from a field are outside its support.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .arith import MODES, fmt
from .complex import BaseCellComplex, ComplexError, build_complex
from .field import FieldError, PwAffineField

TOP_KEYS = {"name", "dim", "arithmetic", "cells", "fields"}
CELL_KEYS = {"id", "interval", "vertices"}
PIECE_KEYS = {"grad", "off"}


class SceneError(ValueError):
    """Invalid scene; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line

    def anchored(self, source: str = "<scene>") -> str:
        where = f"{source}:{self.line}" if self.line else source
        return f"{where}: {self}"


@dataclass
class Scene:
    complex: BaseCellComplex
    fields: dict = field(default_factory=dict)   # name -> PwAffineField
    name: str | None = None

    def field(self, name: str) -> PwAffineField:
        try:
            return self.fields[name]
        except KeyError:
            raise SceneError(f"scene has no field {name!r}") from None

    def has(self, name: str) -> bool:
        return name in self.fields


def _line_of(text: str | None, *needles: str) -> int | None:
    """Line of the quoted ``needles``, each searched after the previous one."""
    if not text:
        return None
    pos = 0
    for n in needles:
        i = text.find(json.dumps(n), pos)
        if i < 0:
            break
        pos = i
    return text.count("\n", 0, pos) + 1


def _check_keys(obj, allowed, what, text, *path):
    if not isinstance(obj, Mapping):
        raise SceneError(f"{what} must be an object", _line_of(text, *path))
    extra = sorted(set(obj) - allowed)
    if extra:
        raise SceneError(f"unknown key {extra[0]!r} in {what}", _line_of(text, *path, extra[0]))


def scene_from_mapping(doc: Mapping, text: str | None = None) -> Scene:
    _check_keys(doc, TOP_KEYS, "scene", text)
    for k in ("cells", "fields"):
        if k not in doc:
            raise SceneError(f"scene is missing {k!r}", 1 if text else None)
    mode = doc.get("arithmetic", "rational")
    if mode not in MODES:
        raise SceneError(f"unknown arithmetic {mode!r}", _line_of(text, "arithmetic"))
    cells = doc["cells"]
    if not isinstance(cells, list):
        raise SceneError("'cells' must be a list", _line_of(text, "cells"))
    for k, c in enumerate(cells):
        _check_keys(c, CELL_KEYS, f"cell #{k}", text, "cells")
    try:
        cx = build_complex({"dim": doc.get("dim"), "arithmetic": mode, "cells": cells})
    except (ComplexError, ValueError, TypeError, ZeroDivisionError) as exc:
        m = re.search(r"'([^']+)'", str(exc))
        raise SceneError(f"invalid complex: {exc}", _line_of(text, "cells", *( [m.group(1)] if m else []))) from None
    fields = {}
    if not isinstance(doc["fields"], Mapping):
        raise SceneError("'fields' must be an object", _line_of(text, "fields"))
    for name, pieces in doc["fields"].items():
        if not isinstance(pieces, Mapping):
            raise SceneError(f"field {name!r} must map cell ids to pieces", _line_of(text, "fields", name))
        for cid, piece in pieces.items():
            if isinstance(piece, Mapping):
                _check_keys(piece, PIECE_KEYS, f"field {name!r}, cell {cid!r}", text, "fields", name, cid)
            try:
                cx.cell_index(cid)
            except (KeyError, IndexError):
                raise SceneError(f"field {name!r} refers to unknown cell {cid!r}",
                                 _line_of(text, "fields", name, cid)) from None
        try:
            fields[name] = PwAffineField.build(cx, pieces, name)
        except (FieldError, ValueError, TypeError, ZeroDivisionError) as exc:
            raise SceneError(f"invalid field {name!r}: {exc}", _line_of(text, "fields", name)) from None
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise SceneError("'name' must be a string", _line_of(text, "name"))
    return Scene(cx, fields, name)


def loads(text: str) -> Scene:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneError(f"malformed JSON: {exc.msg} (column {exc.colno})", exc.lineno) from None
    return scene_from_mapping(doc, text)


def load(path: str) -> Scene:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


# --- writing ---------------------------------------------------------------

def _num(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else fmt(x)
    if isinstance(x, float):
        return x
    return int(x) if isinstance(x, int) else fmt(x)


def field_to_mapping(f: PwAffineField) -> dict:
    cx = f.complex
    out = {}
    for c in sorted(f.pieces):
        p = f.pieces[c]
        out[cx.cells[c].label] = {"grad": [_num(g) for g in p.grad], "off": _num(p.offset)}
    return out


def scene_to_mapping(scene: Scene) -> dict:
    cx = scene.complex
    doc: dict = {}
    if scene.name:
        doc["name"] = scene.name
    doc["dim"] = cx.dim
    doc["arithmetic"] = cx.mode
    cells = []
    for c in cx.cells:
        if cx.dim == 1:
            cells.append({"id": c.label, "interval": [_num(c.vertices[0][0]), _num(c.vertices[1][0])]})
        else:
            cells.append({"id": c.label, "vertices": [[_num(x) for x in p] for p in c.vertices]})
    doc["cells"] = cells
    doc["fields"] = {name: field_to_mapping(f) for name, f in scene.fields.items()}
    return doc


def dumps(scene: Scene) -> str:
    return json.dumps(scene_to_mapping(scene), indent=1) + "\n"


def make_scene(fields: Mapping, name: str | None = None) -> Scene:
    """Scene from already-built fields sharing one complex."""
    fs = dict(fields)
    cxs = {id(f.complex) for f in fs.values()}
    if len(cxs) != 1:
        raise SceneError("fields must share one complex")
    return Scene(next(iter(fs.values())).complex, {k: f.renamed(k) for k, f in fs.items()}, name)
