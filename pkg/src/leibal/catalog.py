"""Low-dimensional Lie-nilpotent non-Lie Leibniz algebras as checkable data.

Rows are stored as printed, with coefficients that may name a parameter
(``"c"``, ``"-mu2"``).  Some printed rows satisfy the left-handed identity
``[x,[y,z]] = [[x,y],z] + [y,[x,z]]`` rather than the right-handed one used
throughout this package; those carry ``convention = "left"`` and are
transposed on instantiation.  Transposing leaves every symmetrized bracket
unchanged, so Lie-central data are unaffected.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .algebra import LeibnizAlgebra, ann_ideal, check_leibniz, is_subalgebra, ordinary_nilpotency_class
from .lie import lie_central_series, lie_normalizer
from .linalg import QQ, Subspace, parse_rational

__all__ = [
    "AdmissibilityError",
    "Parameter",
    "CatalogEntry",
    "EntryReport",
    "entries",
    "get_entry",
    "instantiate",
    "verify_entry",
    "remark_algebra",
    "remark_normalizer",
]


class AdmissibilityError(ValueError):
    pass


@dataclass(frozen=True)
class Parameter:
    name: str
    exclude: tuple
    default: Fraction
    admissible: str


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    dim: int
    labels: tuple
    brackets: tuple  # (i, j, k, coefficient text), 1-based
    parameters: tuple
    expected_class: int | None
    source_row: int | None
    convention: str
    multiplier_unsupported: bool

    def defaults(self) -> dict[str, Fraction]:
        return {p.name: p.default for p in self.parameters}


_COEF = re.compile(r"^(-?)([A-Za-z][A-Za-z0-9_]*)$")


def _coefficient(text: str, values: dict[str, Fraction]) -> Fraction:
    m = _COEF.match(text)
    if m:
        sign, name = m.groups()
        if name not in values:
            raise KeyError(f"unknown parameter {name!r}")
        return -values[name] if sign else values[name]
    return parse_rational(text)


def _entry(raw: dict) -> CatalogEntry:
    params = tuple(
        Parameter(p["name"], tuple(parse_rational(x) for x in p["exclude"]), parse_rational(p["default"]), p["admissible"])
        for p in raw["parameters"]
    )
    return CatalogEntry(
        id=raw["id"],
        dim=raw["dim"],
        labels=tuple(raw["basis"]),
        brackets=tuple((b["i"], b["j"], b["k"], b["c"]) for b in raw["brackets"]),
        parameters=params,
        expected_class=raw["expected_class"],
        source_row=raw["source_row"],
        convention=raw["convention"],
        multiplier_unsupported=raw["multiplier_unsupported"],
    )


@lru_cache(maxsize=1)
def _load() -> tuple[tuple[CatalogEntry, ...], CatalogEntry]:
    text = resources.files("leibal").joinpath("data/catalog.json").read_text()
    raw = json.loads(text)
    return tuple(_entry(r) for r in raw["table"]), _entry(raw["remark"])


def entries(dim: int | None = None) -> list[CatalogEntry]:
    table, _ = _load()
    return [e for e in table if dim is None or e.dim == dim]


def get_entry(entry_id: str) -> CatalogEntry:
    table, remark = _load()
    for e in table + (remark,):
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)


def _resolve(entry: CatalogEntry, values) -> dict[str, Fraction]:
    vals = entry.defaults()
    for k, v in (values or {}).items():
        if k not in vals:
            raise AdmissibilityError(f"entry {entry.id} has no parameter {k!r}")
        vals[k] = v if isinstance(v, Fraction) else parse_rational(str(v))
    for p in entry.parameters:
        if vals[p.name] in p.exclude:
            raise AdmissibilityError(f"{p.name} = {vals[p.name]} is excluded ({p.admissible})")
    return vals


def _printed(entry: CatalogEntry, values=None) -> LeibnizAlgebra:
    vals = _resolve(entry, values)
    table = [(i, j, k, _coefficient(c, vals)) for i, j, k, c in entry.brackets]
    return LeibnizAlgebra.from_table(entry.dim, table, labels=list(entry.labels), field=QQ)


def instantiate(entry: CatalogEntry, values=None) -> LeibnizAlgebra:
    """The entry over ``Q`` at the given parameter values, in the right-handed convention."""
    g = _printed(entry, values)
    return g.opposite() if entry.convention == "left" else g


@dataclass(frozen=True)
class EntryReport:
    id: str
    leibniz_ok: bool
    printed_convention_ok: bool
    non_lie_ok: bool
    class_ok: bool
    computed_class: int | None
    upper_class: int | None
    ordinary_class: int | None

    @property
    def ok(self) -> bool:
        return self.leibniz_ok and self.printed_convention_ok and self.non_lie_ok and self.class_ok


def verify_entry(entry: CatalogEntry, values=None) -> EntryReport:
    """Leibniz identity, ``g^ann ≠ 0`` and the Lie-nilpotency class against the printed one."""
    g = instantiate(entry, values)
    printed = _printed(entry, values)
    as_printed = printed if entry.convention == "right" else printed.opposite()
    lower, upper = lie_central_series(g)
    return EntryReport(
        id=entry.id,
        leibniz_ok=check_leibniz(g).ok,
        printed_convention_ok=check_leibniz(as_printed).ok,
        non_lie_ok=not ann_ideal(g).space.is_zero(),
        class_ok=lower.class_value == entry.expected_class == upper.class_value,
        computed_class=lower.class_value,
        upper_class=upper.class_value,
        ordinary_class=ordinary_nilpotency_class(g),
    )


def remark_algebra() -> LeibnizAlgebra:
    """The 5-dimensional algebra whose Lie-normalizer of ``⟨e1⟩`` is not a subalgebra."""
    return instantiate(_load()[1])


def remark_normalizer() -> tuple[Subspace, tuple[int, int, list]]:
    """``N^Lie(⟨e1⟩)`` and a witness ``(i, j, [e_i, e_j])`` that it is not a subalgebra."""
    g = remark_algebra()
    N = lie_normalizer(g, [g.basis_vector(0)])
    ok, pair = is_subalgebra(g, N)
    assert not ok
    rows = N.rows
    a, b = pair
    i, j = min(rows[a]), min(rows[b])
    return N, (i, j, list(g.bracket(g.basis_vector(i), g.basis_vector(j))))
