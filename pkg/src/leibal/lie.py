"""Constructions relative to the Liezation functor.

Everything here is built from the symmetrized bracket ``[x, y] + [y, x]``:
Lie-commutators, Lie-centralizers and normalizers, and the lower and upper
Lie-central series.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import (
    IdealWitness,
    LeibnizAlgebra,
    NotAnIdealError,
    _as_space,
    is_subalgebra,
    is_two_sided,
    subalgebra_closure,
)
from .linalg import Subspace, solve_membership_conditions, span

__all__ = [
    "SeriesReport",
    "NormalizerProbe",
    "lie_commutator",
    "lie_centralizer",
    "lie_normalizer",
    "lie_central_series",
    "lie_nilpotency_class",
    "relative_lower_series",
    "normalizer_condition_probe",
]


def lie_commutator(g: LeibnizAlgebra, m, n) -> IdealWitness:
    """``[m, n]_Lie``, the span of ``[u, v] + [v, u]`` over basis vectors of ``m`` and ``n``.

    Defined for arbitrary subspaces; ``two_sided`` records whether both
    arguments were two-sided ideals, in which case the result is one too.
    """
    ms, ns = _as_space(g, m), _as_space(g, n)
    result = span([g.sym(u, v) for u in ms.rows for v in ns.rows], g.dim, g.field)
    ideals = is_two_sided(g, ms)[0] and is_two_sided(g, ns)[0]
    if ideals:
        assert is_two_sided(g, result)[0], "Lie-commutator of ideals must be an ideal"
    return IdealWitness(g, result, ideals)


def _require_ideal(g, space, name):
    ok, witness = is_two_sided(g, space)
    if not ok:
        raise NotAnIdealError(f"{name} is not a two-sided ideal", witness)


def lie_centralizer(g: LeibnizAlgebra, m, n) -> IdealWitness:
    """``{q : [q, u] + [u, q] ∈ n for all u ∈ m}`` for two-sided ideals ``m``, ``n``."""
    ms, ns = _as_space(g, m), _as_space(g, n)
    _require_ideal(g, ms, "m")
    _require_ideal(g, ns, "n")
    if ms.is_zero():
        return IdealWitness(g, g.full(), True)
    result = solve_membership_conditions([g.sym_mult(u) for u in ms.rows], ns)
    return IdealWitness(g, result, True)


def lie_normalizer(g: LeibnizAlgebra, m) -> Subspace:
    """``{q : [q, u] + [u, q] ∈ m for all u ∈ m}`` for any subspace ``m``."""
    ms = _as_space(g, m)
    if ms.is_zero():
        return g.full()
    return solve_membership_conditions([g.sym_mult(u) for u in ms.rows], ms)


@dataclass(frozen=True)
class SeriesReport:
    """One Lie-central series.

    ``class_value`` is ``None`` when the series stabilizes without reaching
    its end (zero for the lower series, ``g`` for the upper one).
    """

    kind: str
    terms: tuple[Subspace, ...]
    stabilized_at: int
    lie_nilpotent: bool
    class_value: int | None

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]


def _lower(g: LeibnizAlgebra) -> SeriesReport:
    full = g.full()
    terms = [full]
    bound = g.dim + 1
    while len(terms) <= bound:
        nxt = lie_commutator(g, terms[-1], full).space
        if nxt == terms[-1]:
            break
        terms.append(nxt)
        if nxt.is_zero():
            break
    nil = terms[-1].is_zero()
    return SeriesReport("lower", tuple(terms), len(terms) - 1, nil, len(terms) - 1 if nil else None)


def _upper(g: LeibnizAlgebra) -> SeriesReport:
    full = g.full()
    terms = [g.zero_space()]
    bound = g.dim + 1
    while not terms[-1].is_full() and len(terms) <= bound:
        nxt = lie_centralizer(g, full, terms[-1]).space
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    nil = terms[-1].is_full()
    return SeriesReport("upper", tuple(terms), len(terms) - 1, nil, len(terms) - 1 if nil else None)


def lie_central_series(g: LeibnizAlgebra) -> tuple[SeriesReport, SeriesReport]:
    """Lower and upper Lie-central series.

    A disagreement between the two class values is reported as data (the two
    reports), never raised.
    """
    return _lower(g), _upper(g)


def lie_nilpotency_class(g: LeibnizAlgebra) -> int | None:
    return _lower(g).class_value


def relative_lower_series(g: LeibnizAlgebra, n, bound: int | None = None) -> list[Subspace]:
    """``n^[1] = n``, ``n^[i] = [n^[i-1], g]_Lie`` until stable or ``bound`` terms."""
    ns = _as_space(g, n)
    _require_ideal(g, ns, "n")
    bound = g.dim + 1 if bound is None else bound
    full = g.full()
    terms = [ns]
    while len(terms) < bound:
        nxt = lie_commutator(g, terms[-1], full).space
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return terms


@dataclass
class NormalizerProbe:
    passed: bool
    trials: int
    seed: int
    checked: list[Subspace] = field(default_factory=list)
    counterexample: Subspace | None = None


def normalizer_condition_probe(g: LeibnizAlgebra, trials: int, seed: int, subalgebras=None) -> NormalizerProbe:
    """Check ``S ⊊ N^Lie(S)`` on random proper subalgebras (plus any given ones).

    Random subalgebras are closures of 1..dim-1 random vectors with entries in
    ``{-2, ..., 2}``; draws that generate all of ``g`` are discarded.
    """
    rng = random.Random(seed)
    cands: list[Subspace] = [_as_space(g, s) for s in (subalgebras or [])]
    attempts = 0
    drawn = 0
    while drawn < trials and attempts < 20 * max(trials, 1) and g.dim > 0:
        attempts += 1
        k = rng.randint(1, max(1, g.dim - 1))
        vecs = [[rng.randint(-2, 2) for _ in range(g.dim)] for _ in range(k)]
        s = subalgebra_closure(g, g.span(vecs))
        if s.is_full():
            continue
        cands.append(s)
        drawn += 1
    probe = NormalizerProbe(True, len(cands), seed)
    for s in cands:
        assert is_subalgebra(g, s)[0], "candidate is not a subalgebra"
        probe.checked.append(s)
        if s.is_full():
            continue
        if not s < lie_normalizer(g, s):
            probe.passed = False
            probe.counterexample = s
            break
    return probe
