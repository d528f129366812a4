"""Reading and writing arrangement documents.

A document is JSON::

    {"dimension": 2,
     "boxes": [{"id": "A", "intervals": [["0", "3/2"], [1, 4]]}, ...]}

Coordinates are written as ``"p/q"`` strings (or integers) so that values
survive a round trip exactly.  :func:`serialize` always produces the
canonical form: boxes in index order, every rational as a lowest-terms
string, fixed key order and indentation.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import BadRational, DegenerateInterval, DuplicateId, ParseError
from .geometry import Arrangement, Box, Interval

_RATIONAL = re.compile(r"\s*[+-]?\d+(/\d+)?\s*")


def _rational(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise BadRational(f"expected a rational, got {json.dumps(value)}", where)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.fullmatch(value):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise BadRational(f"zero denominator in {value!r}", where) from None
    raise BadRational(f"expected an integer or a 'p/q' string, got {json.dumps(value)}", where)


def _field(obj: dict, key: str, kind: type, where: str):
    if key not in obj:
        raise ParseError(f"missing field {key!r}", where)
    value = obj[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ParseError(f"field {key!r} must be {kind.__name__}", f"{where}.{key}")
    return value


def parse(text: str) -> Arrangement:
    """Arrangement described by ``text``; box indices follow document order."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object", "$")
    dimension = _field(doc, "dimension", int, "$")
    if dimension < 1:
        raise ParseError("dimension must be positive", "$.dimension")
    entries = _field(doc, "boxes", list, "$")

    boxes, labels, seen = [], [], {}
    for n, entry in enumerate(entries):
        where = f"$.boxes[{n}]"
        if not isinstance(entry, dict):
            raise ParseError("box must be an object", where)
        ident = _field(entry, "id", str, where)
        if ident in seen:
            raise DuplicateId(f"id {ident!r} already used by boxes[{seen[ident]}]", f"{where}.id")
        seen[ident] = n
        intervals = _field(entry, "intervals", list, where)
        if len(intervals) != dimension:
            raise ParseError(f"{len(intervals)} intervals for dimension {dimension}", f"{where}.intervals")
        axes = []
        for c, pair in enumerate(intervals):
            at = f"{where}.intervals[{c}]"
            if not isinstance(pair, list) or len(pair) != 2:
                raise ParseError("interval must be a [lo, hi] pair", at)
            lo, hi = _rational(pair[0], f"{at}[0]"), _rational(pair[1], f"{at}[1]")
            try:
                axes.append(Interval(lo, hi))
            except DegenerateInterval as exc:
                raise ParseError(str(exc), at) from None
        boxes.append(Box(tuple(axes)))
        labels.append(ident)
    return Arrangement(tuple(boxes), tuple(labels), dimension)


def _text(q: Fraction) -> str:
    return str(q)  # Fraction prints lowest terms, "7/3" or "5"


def to_document(arr: Arrangement) -> dict:
    return {
        "dimension": arr.dimension,
        "boxes": [
            {"id": label, "intervals": [[_text(iv.lo), _text(iv.hi)] for iv in bx.axes]}
            for label, bx in zip(arr.labels, arr.boxes)
        ],
    }


def serialize(arr: Arrangement) -> str:
    """Canonical document text: one box per line, trailing newline."""
    doc = to_document(arr)
    lines = [json.dumps({"id": b["id"], "intervals": b["intervals"]}) for b in doc["boxes"]]
    body = ",\n    ".join(lines)
    boxes = f"[\n    {body}\n  ]" if lines else "[]"
    return f'{{\n  "dimension": {doc["dimension"]},\n  "boxes": {boxes}\n}}\n'


def load(path) -> Arrangement:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(arr: Arrangement, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(arr))
