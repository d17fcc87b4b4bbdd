"""Algebra files and report serialization.

An algebra file is JSON::

    {"dim": 2, "basis": ["a1", "a2"], "field": "Q",
     "brackets": [{"i": 2, "j": 2, "k": 1, "c": "1"}]}

Indices are 1-based, coefficients are exact rational literals (``"p/q"``) and
``field`` is ``"Q"`` or ``{"Fp": p}`` for an odd prime ``p``.
"""

from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction

from .algebra import LeibnizAlgebra
from .linalg import GF, QQ, CharacteristicTwoError, LinalgError, PrimeField, SparseVec, Subspace, parse_rational

__all__ = [
    "ParseError",
    "parse_algebra",
    "load_algebra",
    "serialize_algebra",
    "parse_vector",
    "subspace_report",
    "vector_text",
    "scalar_text",
    "digest",
    "dumps_report",
]


class ParseError(ValueError):
    """Malformed input; carries a line/column for syntax errors or a JSON path otherwise."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None, path: str | None = None):
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        elif path is not None:
            where = f" at {path}"
        super().__init__(message + where)
        self.line, self.column, self.path = line, column, path


def _field(spec, path: str):
    if spec in (None, "Q", "QQ"):
        return QQ
    if isinstance(spec, dict) and set(spec) == {"Fp"}:
        p = spec["Fp"]
        if not isinstance(p, int) or isinstance(p, bool):
            raise ParseError("prime must be an integer", path=path + ".Fp")
        try:
            return GF(p)
        except CharacteristicTwoError as e:
            raise ParseError(str(e), path=path) from e
        except LinalgError as e:
            raise ParseError(str(e), path=path) from e
    raise ParseError('field must be "Q" or {"Fp": p}', path=path)


def _coef(value, path: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError("coefficients must be exact (integer or \"p/q\" text)", path=path)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_rational(value)
        except ValueError as e:
            raise ParseError(str(e), path=path) from e
    raise ParseError("coefficient has the wrong type", path=path)


def _index(value, dim: int, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError("index must be an integer", path=path)
    if not 1 <= value <= dim:
        raise ParseError(f"index {value} out of range 1..{dim}", path=path)
    return value


def parse_algebra(text: str) -> LeibnizAlgebra:
    """Parse an algebra file.  The Leibniz identity is not checked here."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno, column=e.colno) from e
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", path="$")
    dim = data.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise ParseError("dim must be a non-negative integer", path="$.dim")
    fld = _field(data.get("field"), "$.field")
    labels = data.get("basis")
    if labels is None:
        labels = [f"a{i + 1}" for i in range(dim)]
    if not isinstance(labels, list) or len(labels) != dim or not all(isinstance(x, str) and x for x in labels):
        raise ParseError(f"basis must list {dim} non-empty labels", path="$.basis")
    if len(set(labels)) != dim:
        raise ParseError("basis labels must be distinct", path="$.basis")
    brackets = data.get("brackets", [])
    if not isinstance(brackets, list):
        raise ParseError("brackets must be a list", path="$.brackets")
    seen = set()
    entries = []
    for n, b in enumerate(brackets):
        path = f"$.brackets[{n}]"
        if isinstance(b, list):
            if len(b) != 4:
                raise ParseError("bracket entries need four fields [i, j, k, c]", path=path)
            i, j, k, c = b
        elif isinstance(b, dict):
            missing = {"i", "j", "k", "c"} - set(b)
            if missing:
                raise ParseError(f"missing keys {sorted(missing)}", path=path)
            i, j, k, c = b["i"], b["j"], b["k"], b["c"]
        else:
            raise ParseError("bracket entry must be an object or a list", path=path)
        i = _index(i, dim, path + ".i")
        j = _index(j, dim, path + ".j")
        k = _index(k, dim, path + ".k")
        if (i, j, k) in seen:
            raise ParseError(f"duplicate entry for [{i},{j}] -> {k}", path=path)
        seen.add((i, j, k))
        coef = _coef(c, path + ".c")
        if isinstance(fld, PrimeField):
            try:
                fld(coef)
            except ZeroDivisionError as e:
                raise ParseError(str(e), path=path + ".c") from e
        entries.append((i, j, k, coef))
    return LeibnizAlgebra.from_table(dim, entries, labels=labels, field=fld)


def load_algebra(path) -> tuple[LeibnizAlgebra, bytes]:
    with open(path, "rb") as fh:
        raw = fh.read()
    return parse_algebra(raw.decode("utf-8")), raw


def scalar_text(field, x) -> str:
    return field.to_text(x)


def _field_spec(field):
    return "Q" if field == QQ else {"Fp": field.p}


def serialize_algebra(g: LeibnizAlgebra) -> str:
    data = {
        "dim": g.dim,
        "basis": list(g.labels),
        "field": _field_spec(g.field),
        "brackets": [{"i": i, "j": j, "k": k, "c": g.field.to_text(c)} for i, j, k, c in g.table()],
    }
    return json.dumps(data, indent=2) + "\n"


_TERM = re.compile(r"\s*([+-]?)\s*(?:([0-9]+(?:/[0-9]+)?)\s*\*?\s*)?([A-Za-z_][A-Za-z0-9_^]*)\s*")


def parse_vector(g: LeibnizAlgebra, text: str) -> SparseVec:
    """Parse a combination of basis labels such as ``"a1 - 1/2*a3"``."""
    index = {lab: i for i, lab in enumerate(g.labels)}
    out: dict[int, Fraction] = {}
    pos = 0
    text = text.strip()
    if not text:
        raise ParseError("empty vector")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse vector {text!r} near position {pos + 1}")
        if pos and not m.group(1):
            raise ParseError(f"missing sign between terms in {text!r}")
        sign, num, label = m.groups()
        if label not in index:
            raise ParseError(f"unknown basis label {label!r}")
        c = parse_rational(num) if num else Fraction(1)
        if sign == "-":
            c = -c
        out[index[label]] = out.get(index[label], Fraction(0)) + c
        pos = m.end()
    return {k: g.field(v) for k, v in out.items() if v}


def vector_text(labels, field, row: SparseVec) -> str:
    if not row:
        return "0"
    parts = []
    for k in sorted(row):
        c = row[k]
        if c == 1:
            parts.append(f"+ {labels[k]}")
        elif c == -1:
            parts.append(f"- {labels[k]}")
        else:
            t = field.to_text(c)
            parts.append(f"- {t[1:]}*{labels[k]}" if t.startswith("-") else f"+ {t}*{labels[k]}")
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def subspace_report(labels, space: Subspace) -> dict:
    """Echelon rows of ``space`` both as coordinates and over the labeled basis."""
    f = space.field
    return {
        "dim": space.dim,
        "basis": [vector_text(labels, f, r) for r in space.rows],
        "rows": [[f.to_text(c) for c in row] for row in space.basis],
    }


def digest(raw: bytes) -> str:
    return "sha256:" + hashlib.sha256(raw).hexdigest()


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
