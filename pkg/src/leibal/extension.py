"""Surjections of Leibniz algebras viewed as extensions ``0 → n → g → q → 0``."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    IdealWitness,
    LeibnizAlgebra,
    NotAHomomorphismError,
    _as_space,
    check_homomorphism,
    quotient_algebra,
)
from .linalg import LinearMap

__all__ = ["Extension", "NotLieCentralError", "lie_central_witness"]


class NotLieCentralError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Extension:
    """``total ↠ quotient`` along ``projection``, with ``kernel`` recorded as an ideal."""

    total: LeibnizAlgebra
    quotient: LeibnizAlgebra
    projection: LinearMap
    kernel: IdealWitness

    @classmethod
    def from_projection(cls, total: LeibnizAlgebra, quotient: LeibnizAlgebra, projection: LinearMap) -> "Extension":
        ok, pair = check_homomorphism(total, quotient, projection)
        if not ok:
            raise NotAHomomorphismError("projection does not preserve brackets", pair)
        if projection.rank != quotient.dim:
            raise ValueError("projection is not surjective")
        return cls(total, quotient, projection, IdealWitness(total, projection.kernel(), True))

    @classmethod
    def from_ideal(cls, g: LeibnizAlgebra, n) -> "Extension":
        space = _as_space(g, n)
        q, proj = quotient_algebra(g, space)
        return cls(g, q, proj, IdealWitness(g, space, True))

    @classmethod
    def identity(cls, g: LeibnizAlgebra) -> "Extension":
        return cls(g, g, LinearMap.identity(g.dim, g.field), IdealWitness(g, g.zero_space(), True))


def lie_central_witness(g: LeibnizAlgebra, n) -> tuple[int, int] | None:
    """First ``(row of n, basis index of g)`` whose symmetrized bracket is nonzero."""
    space = _as_space(g, n)
    one = g.field.one
    for a, u in enumerate(space.rows):
        for j in range(g.dim):
            if g.sym(u, {j: one}):
                return (a, j)
    return None
