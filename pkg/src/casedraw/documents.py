"""JSON documents for drawings and casings.

Numbers are written as strings: terminating decimals as ``"0.125"``, other
rationals as ``"1/3"``.  Parsing accepts those strings and JSON numbers; JSON
numbers are read through :class:`decimal.Decimal`, so ``0.1`` stays exactly
one tenth.
"""
from __future__ import annotations

import json
from decimal import Decimal
from fractions import Fraction
from pathlib import Path

from ._exact import as_fraction
from .arrangement import Arrangement
from .crossing_graph import Casing, ObjectiveReport
from .exceptions import DocumentError, InvalidDrawingError
from .geometry import Drawing, validate_drawing

FORMAT_VERSION = 1


def format_number(q) -> str:
    """Exact text of a rational: decimal when it terminates, else ``p/q``."""
    q = Fraction(q)
    den = q.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{q.numerator}/{q.denominator}"
    digits = max(twos, fives)
    if digits == 0:
        return str(q.numerator)
    scaled = q * 10**digits
    text = str(abs(scaled.numerator)).rjust(digits + 1, "0")
    sign = "-" if q < 0 else ""
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def _load(source):
    if isinstance(source, dict):
        return source
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        source = Path(source).read_text(encoding="utf-8")
    try:
        return json.loads(source, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _field(obj, key, path):
    if not isinstance(obj, dict):
        raise DocumentError("expected an object", path)
    if key not in obj:
        raise DocumentError(f"missing field {key!r}", path)
    return obj[key]


def _number(value, path) -> Fraction:
    try:
        return as_fraction(value)
    except (TypeError, ValueError, ArithmeticError, ZeroDivisionError):
        raise DocumentError(f"not an exact number: {value!r}", path) from None


def _int(value, path) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"expected an integer id, got {value!r}", path)
    return value


def _list(obj, key, path):
    value = _field(obj, key, path)
    if not isinstance(value, list):
        raise DocumentError("expected a list", f"{path}.{key}" if path else key)
    return value


def parse_drawing(source, validate: bool = True) -> Drawing:
    """Drawing from a JSON text, a file path, or an already loaded dict.

    With ``validate`` the drawing must pass :func:`validate_drawing` without
    errors (warnings are allowed).
    """
    doc = _load(source)
    w = _number(_field(doc, "casing_width", ""), "casing_width")
    vertices, edges = [], []
    vseen, eseen = {}, {}
    for i, v in enumerate(_list(doc, "vertices", "")):
        path = f"vertices[{i}]"
        vid = _int(_field(v, "id", path), f"{path}.id")
        if vid in vseen:
            raise DocumentError(f"duplicate vertex id {vid} (also vertices[{vseen[vid]}])", f"{path}.id")
        vseen[vid] = i
        vertices.append((vid, _number(_field(v, "x", path), f"{path}.x"), _number(_field(v, "y", path), f"{path}.y")))
    for i, e in enumerate(_list(doc, "edges", "")):
        path = f"edges[{i}]"
        eid = _int(_field(e, "id", path), f"{path}.id")
        if eid in eseen:
            raise DocumentError(f"duplicate edge id {eid} (also edges[{eseen[eid]}])", f"{path}.id")
        eseen[eid] = i
        ends = []
        for key in ("u", "v"):
            vid = _int(_field(e, key, path), f"{path}.{key}")
            if vid not in vseen:
                raise DocumentError(f"references missing vertex {vid}", f"{path}.{key}")
            ends.append(vid)
        edges.append((eid, *ends))
    if w <= 0:
        raise DocumentError("must be positive", "casing_width")
    try:
        d = Drawing(vertices, edges, w)
    except InvalidDrawingError as exc:
        raise DocumentError(str(exc)) from None
    if validate:
        validate_drawing(d).raise_for_errors()
    return d


def drawing_to_dict(d: Drawing) -> dict:
    return {
        "casing_width": format_number(d.casing_width),
        "vertices": [{"id": v.id, "x": format_number(v.x), "y": format_number(v.y)} for v in d.vertices],
        "edges": [{"id": e.id, "u": e.u, "v": e.v} for e in d.edges],
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def serialize_drawing(d: Drawing) -> str:
    return dumps(drawing_to_dict(d))


def casing_to_dict(casing: Casing, model=None, objective=None, report: ObjectiveReport = None, value=None) -> dict:
    from . import __version__

    doc = {
        "version": FORMAT_VERSION,
        "solver": {"package": "casedraw", "version": __version__, "model": model, "objective": objective},
        "casing": [{"crossing": {"edge_a": a, "edge_b": b}, "top": t} for (a, b), t in sorted(casing.items())],
    }
    if value is not None:
        doc["value"] = value
    if report is not None:
        doc["metrics"] = report.as_dict()
    return doc


def serialize_casing(casing: Casing, **provenance) -> str:
    return dumps(casing_to_dict(casing, **provenance))


def parse_casing(source, arrangement: Arrangement = None) -> Casing:
    """Casing from a document; checked against ``arrangement`` when given."""
    doc = _load(source)
    out = {}
    for i, rec in enumerate(_list(doc, "casing", "")):
        path = f"casing[{i}]"
        cr = _field(rec, "crossing", path)
        a = _int(_field(cr, "edge_a", f"{path}.crossing"), f"{path}.crossing.edge_a")
        b = _int(_field(cr, "edge_b", f"{path}.crossing"), f"{path}.crossing.edge_b")
        if a >= b:
            raise DocumentError("edge_a must be smaller than edge_b", f"{path}.crossing")
        top = _int(_field(rec, "top", path), f"{path}.top")
        if top not in (a, b):
            raise DocumentError(f"top edge {top} is not part of the crossing", f"{path}.top")
        if (a, b) in out:
            raise DocumentError(f"duplicate record for crossing {(a, b)}", path)
        out[(a, b)] = top
    casing = Casing(out)
    if arrangement is not None:
        casing.check_covers(arrangement)
    return casing
