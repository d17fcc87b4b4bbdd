"""Exact scalar fields and the subspace lattice.

Everything above this module stores vectors either as dense tuples of field
elements (small algebras) or as sparse ``{column: value}`` dicts (truncated
free algebras).  Subspaces are always kept in reduced row-echelon form, so two
subspaces of the same ambient space are equal exactly when their stored rows
are equal.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

__all__ = [
    "QQ",
    "GF",
    "RationalField",
    "PrimeField",
    "FpElement",
    "LinalgError",
    "DimensionMismatchError",
    "ContainmentError",
    "CharacteristicTwoError",
    "Subspace",
    "LinearMap",
    "QuotientSpace",
    "span",
    "meet_join",
    "quotient_basis",
    "solve_membership_conditions",
    "preimage_within",
    "solve_combination",
]


class LinalgError(ValueError):
    pass


class DimensionMismatchError(LinalgError):
    pass


class ContainmentError(LinalgError):
    pass


class CharacteristicTwoError(LinalgError):
    pass


_RATIONAL_LITERAL = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; decimals and floats are rejected."""
    m = _RATIONAL_LITERAL.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


class RationalField:
    name = "Q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a field element")
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return parse_rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into Q exactly")

    def to_text(self, x) -> str:
        x = self(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeField:
    """The field F_p for an odd prime p."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise LinalgError(f"{p!r} is not a prime")
        if p == 2:
            raise CharacteristicTwoError("characteristic 2 is not supported (1/2 must exist)")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"
        self.zero = FpElement(0, self)
        self.one = FpElement(1, self)

    def __call__(self, x) -> "FpElement":
        if isinstance(x, FpElement):
            if x.field.p != self.p:
                raise TypeError("elements of different prime fields")
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a field element")
        if isinstance(x, int):
            return FpElement(x % self.p, self)
        if isinstance(x, str):
            x = parse_rational(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has denominator divisible by {self.p}")
            return FpElement(x.numerator * pow(x.denominator, -1, self.p) % self.p, self)
        raise TypeError(f"cannot coerce {type(x).__name__} into F{self.p}")

    def to_text(self, x) -> str:
        return str(self(x).value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"GF({self.p})"


_prime_fields: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


class FpElement:
    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.value = value
        self.field = field

    def _coerce(self, other) -> int | None:
        if isinstance(other, FpElement):
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        if isinstance(other, Fraction):
            return self.field(other).value
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement((self.value + o) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement((self.value - o) % self.field.p, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement((o - self.value) % self.field.p, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value * o % self.field.p, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return FpElement(self.value * pow(o, -1, self.field.p) % self.field.p, self.field)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o, self.field) / self

    def __neg__(self):
        return FpElement(-self.value % self.field.p, self.field)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        o = self._coerce(other)
        return o is not None and o == self.value

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __repr__(self):
        return f"{self.value} (mod {self.field.p})"


# -- sparse vector helpers ---------------------------------------------------

SparseVec = dict  # {column: nonzero field element}


def to_sparse(v, field) -> SparseVec:
    if isinstance(v, dict):
        return {k: field(c) for k, c in v.items() if c}
    return {i: field(c) for i, c in enumerate(v) if c}


def to_dense(v: SparseVec, n: int, field) -> tuple:
    zero = field.zero
    return tuple(v.get(i, zero) for i in range(n))


def add_scaled(target: SparseVec, vec: SparseVec, a) -> None:
    """target += a * vec, in place, dropping zeros."""
    for k, b in vec.items():
        nv = target.get(k)
        nv = a * b if nv is None else nv + a * b
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class _Echelon:
    """Incremental semi-echelon basis.

    Every stored row has its pivot entry equal to one and no entries left of
    its pivot, which is all that ordered reduction needs.  ``tags`` optionally
    track each row as a combination of the inserted vectors.
    """

    def __init__(self, field, track=False):
        self.field = field
        self.rows: dict[int, SparseVec] = {}
        self.tags: dict[int, SparseVec] | None = {} if track else None

    def reduce(self, v: SparseVec, tag: SparseVec | None = None) -> SparseVec:
        rows = self.rows
        heap = [c for c in v if c in rows]
        if not heap:
            return v
        heapq.heapify(heap)
        queued = set(heap)
        while heap:
            c = heapq.heappop(heap)
            a = v.get(c)
            if a is None:
                continue
            row = rows[c]
            for k, b in row.items():
                nv = v.get(k)
                nv = -a * b if nv is None else nv - a * b
                if nv:
                    v[k] = nv
                    if k not in queued and k in rows:
                        queued.add(k)
                        heapq.heappush(heap, k)
                else:
                    v.pop(k, None)
            if tag is not None:
                add_scaled(tag, self.tags[c], -a)
        return v

    def insert(self, v: SparseVec, tag: SparseVec | None = None) -> SparseVec:
        """Insert a copy of ``v``; returns the (possibly empty) residual."""
        v = self.reduce(dict(v), tag)
        if v:
            p = min(v)
            inv = self.field.one / v[p]
            if inv != 1:
                v = {k: c * inv for k, c in v.items()}
                if tag is not None:
                    for k in tag:
                        tag[k] = tag[k] * inv
            self.rows[p] = v
            if tag is not None:
                self.tags[p] = tag
        return v

    def __len__(self):
        return len(self.rows)

    def reduced_rows(self) -> list[tuple[int, SparseVec]]:
        """Back-substitute into reduced row-echelon form (does not mutate)."""
        final: dict[int, SparseVec] = {}
        for p in sorted(self.rows, reverse=True):
            row = dict(self.rows[p])
            for k in [k for k in row if k != p and k in final]:
                a = row.get(k)
                if a:
                    add_scaled(row, final[k], -a)
            final[p] = row
        return sorted(final.items())


class Subspace:
    """A subspace of ``field^ambient_dim`` in canonical reduced row-echelon form."""

    __slots__ = ("ambient_dim", "field", "_rows", "_pivot_index", "_echelon")

    def __init__(self, ambient_dim: int, field, rows: Sequence[tuple[int, SparseVec]]):
        self.ambient_dim = ambient_dim
        self.field = field
        self._rows = tuple(rows)
        self._pivot_index = {p: i for i, (p, _) in enumerate(self._rows)}
        self._echelon = None

    @classmethod
    def zero(cls, ambient_dim: int, field=QQ) -> "Subspace":
        return cls(ambient_dim, field, ())

    @classmethod
    def full(cls, ambient_dim: int, field=QQ) -> "Subspace":
        one = field.one
        return cls(ambient_dim, field, [(i, {i: one}) for i in range(ambient_dim)])

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def pivot_cols(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self._rows)

    @property
    def rows(self) -> tuple[SparseVec, ...]:
        return tuple(r for _, r in self._rows)

    @property
    def basis(self) -> list[tuple]:
        return [to_dense(r, self.ambient_dim, self.field) for _, r in self._rows]

    def is_zero(self) -> bool:
        return not self._rows

    def is_full(self) -> bool:
        return len(self._rows) == self.ambient_dim

    def _ech(self) -> _Echelon:
        if self._echelon is None:
            e = _Echelon(self.field)
            e.rows = {p: r for p, r in self._rows}
            self._echelon = e
        return self._echelon

    def reduce(self, v) -> SparseVec:
        """Residual of ``v`` after removing its component along this subspace's pivots."""
        return self._ech().reduce(to_sparse(v, self.field))

    def contains(self, v) -> bool:
        if not isinstance(v, dict) and len(v) != self.ambient_dim:
            raise DimensionMismatchError(f"vector of length {len(v)} in ambient {self.ambient_dim}")
        return not self.reduce(v)

    __contains__ = contains

    def coordinates(self, v) -> tuple:
        """Coefficients of ``v`` in the echelon basis; raises if ``v`` is outside."""
        v = to_sparse(v, self.field)
        if self.reduce(dict(v)):
            raise ContainmentError("vector is not in the subspace")
        zero = self.field.zero
        return tuple(v.get(p, zero) for p, _ in self._rows)

    def _check(self, other: "Subspace"):
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatchError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )
        if other.field != self.field:
            raise DimensionMismatchError("subspaces over different fields")

    def issubspace(self, other: "Subspace") -> bool:
        self._check(other)
        if self.dim > other.dim:
            return False
        ech = other._ech()
        return all(not ech.reduce(dict(r)) for _, r in self._rows)

    __le__ = issubspace

    def __lt__(self, other):
        return self.dim < other.dim and self <= other

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.field == other.field
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.ambient_dim, tuple((p, tuple(sorted(r.items()))) for p, r in self._rows)))

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if other.dim == 0:
            return self
        if self.dim == 0:
            return other
        return span(list(self.rows) + list(other.rows), self.ambient_dim, self.field)

    def __and__(self, other: "Subspace") -> "Subspace":
        return meet_join(self, other)[1]

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, pivots={list(self.pivot_cols)})"


def _ambient_of(vectors, ambient_dim):
    if ambient_dim is not None:
        return ambient_dim
    for v in vectors:
        if isinstance(v, dict):
            raise DimensionMismatchError("sparse vectors need an explicit ambient_dim")
        return len(v)
    raise DimensionMismatchError("cannot infer the ambient dimension of an empty span")


def span(vectors: Iterable, ambient_dim: int | None = None, field=QQ) -> Subspace:
    """Canonical echelon form of the span of ``vectors``.

    Vectors may be dense sequences or sparse ``{column: value}`` dicts; the
    latter require ``ambient_dim``.
    """
    vectors = list(vectors)
    n = _ambient_of(vectors, ambient_dim)
    ech = _Echelon(field)
    for v in vectors:
        if not isinstance(v, dict):
            if len(v) != n:
                raise DimensionMismatchError(f"vector of length {len(v)} in ambient {n}")
        elif v and (min(v) < 0 or max(v) >= n):
            raise DimensionMismatchError("sparse vector index out of range")
        ech.insert(to_sparse(v, field))
        if len(ech) == n:
            break
    return Subspace(n, field, ech.reduced_rows())


def meet_join(a: Subspace, b: Subspace) -> tuple[Subspace, Subspace]:
    """Return ``(a + b, a ∩ b)`` using the Zassenhaus doubling trick."""
    a._check(b)
    n, field = a.ambient_dim, a.field
    if a.dim == 0 or b.dim == 0:
        return (a + b, Subspace.zero(n, field))
    ech = _Echelon(field)
    for r in a.rows:
        v = dict(r)
        v.update({k + n: c for k, c in r.items()})
        ech.insert(v)
    for r in b.rows:
        ech.insert(dict(r))
    left, right = [], []
    for p, row in ech.rows.items():
        if p < n:
            left.append({k: c for k, c in row.items() if k < n})
        else:
            right.append({k - n: c for k, c in row.items()})
    total = span(left, n, field)
    meet = span(right, n, field)
    if total.dim + meet.dim != a.dim + b.dim:
        raise AssertionError("modular law violated")
    return total, meet


class QuotientSpace:
    """Coordinates on ``whole / sub``.

    Representatives are the reduced echelon rows of ``whole`` taken modulo
    ``sub``; their pivots avoid the pivots of ``sub`` and ascend.
    """

    def __init__(self, whole: Subspace, sub: Subspace):
        whole._check(sub)
        if not sub <= whole:
            raise ContainmentError("sub is not contained in whole")
        self.whole, self.sub = whole, sub
        self.field = whole.field
        sub_ech = sub._ech()
        ech = _Echelon(self.field)
        for r in whole.rows:
            res = sub_ech.reduce(dict(r))
            if res:
                ech.insert(res)
        self._reps = ech.reduced_rows()
        self.pivots = tuple(p for p, _ in self._reps)

    @property
    def dim(self) -> int:
        return len(self._reps)

    @property
    def representatives(self) -> list[SparseVec]:
        return [r for _, r in self._reps]

    def coords(self, v) -> tuple:
        """Coordinates of the coset ``v + sub``; ``v`` must lie in ``whole``."""
        field = self.field
        res = self.sub.reduce(to_sparse(v, field))
        zero = field.zero
        c = tuple(res.get(p, zero) for p in self.pivots)
        for a, rep in zip(c, self.representatives):
            if a:
                add_scaled(res, rep, -a)
        if res:
            raise ContainmentError("vector is not in the ambient of the quotient")
        return c

    def lift(self, coords: Sequence) -> SparseVec:
        out: SparseVec = {}
        for a, rep in zip(coords, self.representatives):
            if a:
                add_scaled(out, rep, a)
        return out


def quotient_basis(whole: Subspace, sub: Subspace) -> list[tuple]:
    """Deterministic coset representatives of ``whole / sub`` as dense vectors."""
    q = QuotientSpace(whole, sub)
    return [to_dense(r, whole.ambient_dim, whole.field) for r in q.representatives]


def _nullspace(images: Sequence[SparseVec], n: int, field) -> list[SparseVec]:
    """Basis of ``{c : sum_j c_j images[j] = 0}`` as sparse vectors in ``field^n``."""
    ech = _Echelon(field, track=True)
    kernel = []
    one = field.one
    for j in range(n):
        tag = {j: one}
        if not ech.insert(images[j], tag):
            kernel.append(tag)
    return kernel


@dataclass(frozen=True, eq=False)
class LinearMap:
    """Matrix of a linear map, stored column by column as sparse images."""

    domain_dim: int
    codomain_dim: int
    columns: tuple
    field: object = QQ

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence], field=QQ, domain_dim: int | None = None) -> "LinearMap":
        m = len(rows)
        n = len(rows[0]) if m else (domain_dim or 0)
        cols = []
        for j in range(n):
            cols.append({i: field(rows[i][j]) for i in range(m) if rows[i][j]})
        return cls(n, m, tuple(cols), field)

    @classmethod
    def from_columns(cls, columns: Sequence, codomain_dim: int, field=QQ) -> "LinearMap":
        return cls(len(columns), codomain_dim, tuple(to_sparse(c, field) for c in columns), field)

    @classmethod
    def from_function(cls, f: Callable[[int], object], domain_dim: int, codomain_dim: int, field=QQ):
        """Build from ``f(j)`` = image of the j-th basis vector (dense or sparse)."""
        return cls(domain_dim, codomain_dim, tuple(to_sparse(f(j), field) for j in range(domain_dim)), field)

    @classmethod
    def identity(cls, n: int, field=QQ) -> "LinearMap":
        return cls(n, n, tuple({j: field.one} for j in range(n)), field)

    def apply(self, v: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for j, a in v.items():
            if a:
                add_scaled(out, self.columns[j], a)
        return out

    def __call__(self, v):
        if isinstance(v, dict):
            return self.apply(v)
        if len(v) != self.domain_dim:
            raise DimensionMismatchError(f"vector of length {len(v)} for domain {self.domain_dim}")
        return to_dense(self.apply(to_sparse(v, self.field)), self.codomain_dim, self.field)

    def matrix(self) -> list[list]:
        zero = self.field.zero
        return [[self.columns[j].get(i, zero) for j in range(self.domain_dim)] for i in range(self.codomain_dim)]

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """``self ∘ inner``."""
        if inner.codomain_dim != self.domain_dim:
            raise DimensionMismatchError("cannot compose: shapes do not match")
        return LinearMap(inner.domain_dim, self.codomain_dim, tuple(self.apply(c) for c in inner.columns), self.field)

    def image(self) -> Subspace:
        return span(self.columns, self.codomain_dim, self.field)

    def kernel(self) -> Subspace:
        return span(_nullspace(self.columns, self.domain_dim, self.field), self.domain_dim, self.field)

    @property
    def rank(self) -> int:
        return self.image().dim

    def is_zero(self) -> bool:
        return not any(self.columns)


def solve_membership_conditions(condition_maps: Sequence[LinearMap], target: Subspace) -> Subspace:
    """``{v : M(v) ∈ target for every M in condition_maps}``."""
    if not condition_maps:
        raise LinalgError("at least one condition map is required")
    n = condition_maps[0].domain_dim
    m = target.ambient_dim
    field = target.field
    for lm in condition_maps:
        if lm.domain_dim != n or lm.codomain_dim != m:
            raise DimensionMismatchError("condition maps must share domain and target ambient")
    stacked: list[SparseVec] = []
    for j in range(n):
        col: SparseVec = {}
        for i, lm in enumerate(condition_maps):
            res = target.reduce(dict(lm.columns[j]))
            off = i * m
            col.update({k + off: c for k, c in res.items()})
        stacked.append(col)
    return span(_nullspace(stacked, n, field), n, field)


def preimage_within(space: Subspace, lm: LinearMap, target: Subspace | None = None) -> Subspace:
    """``{x ∈ space : lm(x) ∈ target}`` (target defaults to zero).

    Works in the coordinates of ``space``, which is much cheaper than a
    Zassenhaus intersection when ``lm`` has a small codomain.
    """
    field = space.field
    if lm.domain_dim != space.ambient_dim:
        raise DimensionMismatchError("map domain differs from the ambient of the subspace")
    images = []
    for r in space.rows:
        img = lm.apply(r)
        if target is not None:
            img = target.reduce(img)
        images.append(img)
    combos = _nullspace(images, space.dim, field)
    rows = space.rows
    vecs = []
    for c in combos:
        v: SparseVec = {}
        for i, a in c.items():
            add_scaled(v, rows[i], a)
        vecs.append(v)
    return span(vecs, space.ambient_dim, field)


def solve_combination(columns: Sequence[SparseVec], target: SparseVec, field=QQ) -> SparseVec | None:
    """Some ``x`` with ``sum_j x_j columns[j] = target``, or ``None``.

    Free variables are set to zero, so the answer is deterministic.
    """
    ech = _Echelon(field, track=True)
    one = field.one
    for j, col in enumerate(columns):
        if col:
            ech.insert(col, {j: one})
    tag: SparseVec = {}
    if ech.reduce(dict(target), tag):
        return None
    return {k: -c for k, c in tag.items()}
