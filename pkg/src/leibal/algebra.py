"""Finite-dimensional Leibniz algebras given by structure constants.

Convention: the bracket satisfies the (right) Leibniz identity

    [x, [y, z]] = [[x, y], z] - [[x, z], y],

i.e. every right multiplication ``a -> [a, z]`` is a derivation.  Indices are
0-based internally; labels default to ``a1, a2, ...``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .linalg import (
    QQ,
    DimensionMismatchError,
    LinearMap,
    QuotientSpace,
    SparseVec,
    Subspace,
    add_scaled,
    solve_membership_conditions,
    span,
    to_dense,
    to_sparse,
)

__all__ = [
    "LeibnizAlgebra",
    "IdealWitness",
    "LeibnizCheck",
    "Centers",
    "NotAnIdealError",
    "NotAHomomorphismError",
    "bracket",
    "check_leibniz",
    "leibniz_defect",
    "ideal_closure",
    "is_two_sided",
    "ann_ideal",
    "quotient_algebra",
    "liezation",
    "centers",
    "derived_span",
    "lower_central_series",
    "ordinary_nilpotency_class",
    "check_homomorphism",
    "is_subalgebra",
    "subalgebra_closure",
]


class NotAnIdealError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAHomomorphismError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class LeibnizAlgebra:
    """Structure constants ``[e_i, e_j] = sum_k c[i][j][k] e_k`` stored sparsely."""

    __slots__ = ("dim", "field", "labels", "_products", "_key")

    def __init__(
        self,
        dim: int,
        products: Mapping[tuple[int, int], Mapping[int, object]] | None = None,
        labels: Sequence[str] | None = None,
        field=QQ,
    ):
        if dim < 0:
            raise ValueError("dimension must be non-negative")
        self.dim = dim
        self.field = field
        self.labels = tuple(labels) if labels is not None else tuple(f"a{i + 1}" for i in range(dim))
        if len(self.labels) != dim:
            raise ValueError(f"{len(self.labels)} labels for a {dim}-dimensional algebra")
        prods: dict[tuple[int, int], SparseVec] = {}
        for (i, j), vec in (products or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise IndexError(f"product index ({i}, {j}) out of range")
            v = to_sparse(vec, field)
            if v and (min(v) < 0 or max(v) >= dim):
                raise IndexError(f"result index out of range in [{i}, {j}]")
            if v:
                prods[(i, j)] = v
        self._products = prods
        self._key = tuple(sorted((ij, tuple(sorted(v.items()))) for ij, v in prods.items()))

    @classmethod
    def from_table(cls, dim: int, entries: Iterable[tuple], labels=None, field=QQ, one_based=True):
        """Build from ``(i, j, k, c)`` tuples meaning ``[e_i, e_j] += c e_k``."""
        off = 1 if one_based else 0
        prods: dict[tuple[int, int], SparseVec] = {}
        for i, j, k, c in entries:
            v = prods.setdefault((i - off, j - off), {})
            v[k - off] = field(v.get(k - off, field.zero) + field(c))
        return cls(dim, prods, labels, field)

    @property
    def products(self) -> dict[tuple[int, int], SparseVec]:
        return {ij: dict(v) for ij, v in self._products.items()}

    def table(self, one_based=True) -> list[tuple[int, int, int, object]]:
        off = 1 if one_based else 0
        return [(i + off, j + off, k + off, c) for (i, j), v in sorted(self._products.items()) for k, c in sorted(v.items())]

    def basis_vector(self, i: int) -> tuple:
        return to_dense({i: self.field.one}, self.dim, self.field)

    def full(self) -> Subspace:
        return Subspace.full(self.dim, self.field)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.dim, self.field)

    def span(self, vectors) -> Subspace:
        return span(vectors, self.dim, self.field)

    def bracket_sparse(self, u: SparseVec, v: SparseVec) -> SparseVec:
        out: SparseVec = {}
        prods = self._products
        for i, a in u.items():
            for j, b in v.items():
                w = prods.get((i, j))
                if w:
                    add_scaled(out, w, a * b)
        return out

    def bracket(self, u, v) -> tuple:
        for x in (u, v):
            if len(x) != self.dim:
                raise DimensionMismatchError(f"vector of length {len(x)} in a {self.dim}-dimensional algebra")
        f = self.field
        return to_dense(self.bracket_sparse(to_sparse(u, f), to_sparse(v, f)), self.dim, f)

    def sym(self, u: SparseVec, v: SparseVec) -> SparseVec:
        """Symmetrized bracket ``[u, v] + [v, u]``."""
        out = self.bracket_sparse(u, v)
        add_scaled(out, self.bracket_sparse(v, u), self.field.one)
        return out

    def left_mult(self, x: SparseVec) -> LinearMap:
        """``a -> [x, a]``."""
        return LinearMap.from_function(lambda j: self.bracket_sparse(x, {j: self.field.one}), self.dim, self.dim, self.field)

    def right_mult(self, x: SparseVec) -> LinearMap:
        """``a -> [a, x]``."""
        return LinearMap.from_function(lambda j: self.bracket_sparse({j: self.field.one}, x), self.dim, self.dim, self.field)

    def sym_mult(self, x: SparseVec) -> LinearMap:
        """``a -> [x, a] + [a, x]``."""
        return LinearMap.from_function(lambda j: self.sym(x, {j: self.field.one}), self.dim, self.dim, self.field)

    def opposite(self) -> "LeibnizAlgebra":
        """The algebra with ``[x, y]_op = [y, x]``; it turns left Leibniz algebras into right ones."""
        return LeibnizAlgebra(self.dim, {(j, i): v for (i, j), v in self._products.items()}, self.labels, self.field)

    def is_abelian(self) -> bool:
        return not self._products

    def is_lie(self) -> bool:
        """Antisymmetric brackets (the Leibniz identity then reads as Jacobi)."""
        return ann_ideal(self).space.is_zero()

    def __eq__(self, other):
        if not isinstance(other, LeibnizAlgebra):
            return NotImplemented
        return (self.dim, self.field, self.labels, self._key) == (other.dim, other.field, other.labels, other._key)

    def __hash__(self):
        return hash((self.dim, self.labels, self._key))

    def same_structure(self, other: "LeibnizAlgebra") -> bool:
        """Equal structure constants, ignoring labels."""
        return (self.dim, self.field, self._key) == (other.dim, other.field, other._key)

    def describe(self) -> str:
        f = self.field
        parts = []
        for (i, j), v in sorted(self._products.items()):
            terms = []
            for k, c in sorted(v.items()):
                t = f.to_text(c)
                sign, t = ("-", t[1:]) if t.startswith("-") else ("+", t)
                terms.append(f"{sign} {self.labels[k] if t == '1' else f'{t}*{self.labels[k]}'}")
            rhs = " ".join(terms)
            rhs = rhs[2:] if rhs.startswith("+ ") else "-" + rhs[2:]
            parts.append(f"[{self.labels[i]},{self.labels[j]}]={rhs}")
        return "; ".join(parts) if parts else "abelian"

    def __repr__(self):
        return f"LeibnizAlgebra(dim={self.dim}, {self.describe()})"


@dataclass(frozen=True)
class IdealWitness:
    algebra: LeibnizAlgebra
    space: Subspace
    two_sided: bool

    @property
    def dim(self) -> int:
        return self.space.dim


def _as_space(g: LeibnizAlgebra, s) -> Subspace:
    if isinstance(s, IdealWitness):
        return s.space
    if isinstance(s, Subspace):
        if s.ambient_dim != g.dim:
            raise DimensionMismatchError("subspace does not live in the algebra")
        return s
    return g.span(s)


def bracket(g: LeibnizAlgebra, u, v) -> tuple:
    return g.bracket(u, v)


def leibniz_defect(g: LeibnizAlgebra, x: int, y: int, z: int) -> tuple[SparseVec, SparseVec]:
    """Both sides of the identity on basis vectors ``(e_x, e_y, e_z)``."""
    one = g.field.one
    ex, ey, ez = {x: one}, {y: one}, {z: one}
    lhs = g.bracket_sparse(ex, g.bracket_sparse(ey, ez))
    rhs = g.bracket_sparse(g.bracket_sparse(ex, ey), ez)
    add_scaled(rhs, g.bracket_sparse(g.bracket_sparse(ex, ez), ey), -one)
    return lhs, rhs


@dataclass(frozen=True)
class LeibnizCheck:
    ok: bool
    triple: tuple[int, int, int] | None = None
    lhs: tuple | None = None
    rhs: tuple | None = None

    def __bool__(self):
        return self.ok


def check_leibniz(g: LeibnizAlgebra) -> LeibnizCheck:
    """Check the identity on all basis triples; report the first failure in lexicographic order."""
    for x, y, z in itertools.product(range(g.dim), repeat=3):
        lhs, rhs = leibniz_defect(g, x, y, z)
        if lhs != rhs:
            return LeibnizCheck(False, (x, y, z), to_dense(lhs, g.dim, g.field), to_dense(rhs, g.dim, g.field))
    return LeibnizCheck(True)


def is_two_sided(g: LeibnizAlgebra, space) -> tuple[bool, tuple | None]:
    """Returns ``(ok, witness)`` where the witness is ``(row, basis_index, side)``."""
    space = _as_space(g, space)
    one = g.field.one
    for r, row in enumerate(space.rows):
        for i in range(g.dim):
            e = {i: one}
            if space.reduce(g.bracket_sparse(row, e)):
                return False, (r, i, "right")
            if space.reduce(g.bracket_sparse(e, row)):
                return False, (r, i, "left")
    return True, None


def ideal_closure(g: LeibnizAlgebra, seed) -> IdealWitness:
    """Smallest two-sided ideal containing ``seed``."""
    space = _as_space(g, seed)
    one = g.field.one
    frontier = list(space.rows)
    while frontier:
        new = []
        for row in frontier:
            for i in range(g.dim):
                e = {i: one}
                new.append(g.bracket_sparse(row, e))
                new.append(g.bracket_sparse(e, row))
        bigger = span(list(space.rows) + new, g.dim, g.field)
        if bigger.dim == space.dim:
            break
        space = bigger
        frontier = list(space.rows)
    return IdealWitness(g, space, True)


def ann_ideal(g: LeibnizAlgebra) -> IdealWitness:
    """``g^ann``, the span of all squares ``[x, x]``."""
    one = g.field.one
    e = [{i: one} for i in range(g.dim)]
    sym_span = span([g.sym(e[i], e[j]) for i in range(g.dim) for j in range(i, g.dim)], g.dim, g.field)
    squares = [g.bracket_sparse(e[i], e[i]) for i in range(g.dim)]
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            s = {i: one, j: one}
            squares.append(g.bracket_sparse(s, s))
    assert span(squares, g.dim, g.field) == sym_span, "polarization failed"
    ok, _ = is_two_sided(g, sym_span)
    assert ok, "g^ann must be a two-sided ideal"
    return IdealWitness(g, sym_span, True)


def quotient_algebra(g: LeibnizAlgebra, n) -> tuple[LeibnizAlgebra, LinearMap]:
    """``g / n`` on deterministic coset representatives, with the projection map."""
    space = _as_space(g, n)
    ok, witness = is_two_sided(g, space)
    if not ok:
        raise NotAnIdealError("quotient by a subspace that is not a two-sided ideal", witness)
    q = QuotientSpace(g.full(), space)
    reps = q.representatives
    prods = {}
    for a, u in enumerate(reps):
        for b, v in enumerate(reps):
            c = q.coords(g.bracket_sparse(u, v))
            if any(c):
                prods[(a, b)] = dict(enumerate(c))
    labels = [g.labels[p] for p in q.pivots]
    quot = LeibnizAlgebra(q.dim, prods, labels, g.field)
    one = g.field.one
    proj = LinearMap.from_function(lambda j: q.coords({j: one}), g.dim, q.dim, g.field)
    return quot, proj


def liezation(g: LeibnizAlgebra) -> LeibnizAlgebra:
    """``g_Lie = g / g^ann``."""
    return quotient_algebra(g, ann_ideal(g))[0]


@dataclass(frozen=True)
class Centers:
    center: IdealWitness
    right_center: IdealWitness
    lie_center: IdealWitness


def centers(g: LeibnizAlgebra) -> Centers:
    """Center ``Z``, right center ``Z^r`` and Lie-center ``Z_Lie``."""
    zero = g.zero_space()
    if g.dim == 0:
        w = IdealWitness(g, zero, True)
        return Centers(w, w, w)
    one = g.field.one
    lefts = [g.left_mult({i: one}) for i in range(g.dim)]
    rights = [g.right_mult({i: one}) for i in range(g.dim)]
    syms = [g.sym_mult({i: one}) for i in range(g.dim)]
    z = solve_membership_conditions(lefts + rights, zero)
    zr = solve_membership_conditions(lefts, zero)
    zl = solve_membership_conditions(syms, zero)
    assert z <= zl and z <= zr
    return Centers(IdealWitness(g, z, True), IdealWitness(g, zr, True), IdealWitness(g, zl, True))


def derived_span(g: LeibnizAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """Span of all ``[x, y]`` with ``x`` in ``a`` and ``y`` in ``b``."""
    return span([g.bracket_sparse(x, y) for x in a.rows for y in b.rows], g.dim, g.field)


def lower_central_series(g: LeibnizAlgebra) -> list[Subspace]:
    """Ordinary series ``g^1 = g``, ``g^{k+1} = [g^k, g]`` until it stabilizes."""
    terms = [g.full()]
    full = g.full()
    while True:
        nxt = derived_span(g, terms[-1], full)
        if nxt == terms[-1]:
            return terms
        terms.append(nxt)
        if nxt.is_zero():
            return terms


def ordinary_nilpotency_class(g: LeibnizAlgebra) -> int | None:
    """Smallest ``c`` with ``g^{c+1} = 0``, or ``None`` if the series stalls above zero."""
    terms = lower_central_series(g)
    if not terms[-1].is_zero():
        return None
    return len(terms) - 1


def check_homomorphism(src: LeibnizAlgebra, dst: LeibnizAlgebra, f: LinearMap):
    """Returns ``(ok, witness)``; the witness is the first basis pair ``(i, j)`` that fails."""
    if f.domain_dim != src.dim or f.codomain_dim != dst.dim:
        raise DimensionMismatchError("map shape does not match the algebras")
    one = src.field.one
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = f.apply(src.bracket_sparse({i: one}, {j: one}))
            rhs = dst.bracket_sparse(f.columns[i], f.columns[j])
            if lhs != rhs:
                return False, (i, j)
    return True, None


def is_subalgebra(g: LeibnizAlgebra, space) -> tuple[bool, tuple | None]:
    """Closure under the bracket; the witness is the first failing basis pair of ``space``."""
    space = _as_space(g, space)
    rows = space.rows
    for a, u in enumerate(rows):
        for b, v in enumerate(rows):
            if space.reduce(g.bracket_sparse(u, v)):
                return False, (a, b)
    return True, None


def subalgebra_closure(g: LeibnizAlgebra, seed) -> Subspace:
    space = _as_space(g, seed)
    while True:
        bigger = space + derived_span(g, space, space)
        if bigger.dim == space.dim:
            return space
        space = bigger
