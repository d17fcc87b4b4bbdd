"""Lie-stem covers, the precise Lie-center and Lie-capability.

A cover is built inside a truncated presentation ``F̄ → g``.  Put
``V = r̄/[F̄,r̄]_Lie`` and let ``M ⊆ V`` be the multiplier.  A two-sided ideal
``S̄`` with ``S̄/[F̄,r̄]_Lie`` complementing ``M`` gives the cover ``F̄/S̄``.

Elements of ``[F̄,F̄]_Lie`` are right-annihilating, so right multiplication
acts trivially on ``M`` modulo ``[F̄,r̄]_Lie``.  Writing the complement as
``{w + Φ(w)}`` over a fixed initial complement ``W``, invariance under right
multiplication by each generator is therefore a linear system in ``Φ``.
Symmetrized brackets already lie in ``[F̄,r̄]_Lie``, so left invariance follows.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import LeibnizAlgebra, NotAHomomorphismError, _as_space, ann_ideal, centers, check_homomorphism, ideal_closure
from .extension import Extension
from .lie import lie_commutator
from .linalg import (
    DimensionMismatchError,
    LinearMap,
    QuotientSpace,
    SparseVec,
    Subspace,
    add_scaled,
    solve_combination,
    solve_membership_conditions,
    span,
)
from .free import UnsupportedInputError
from .multiplier import _frame, default_level, four_term_sequence, schur_lie_multiplier

__all__ = [
    "ExtensionFlags",
    "StemCover",
    "IsoclinismWitness",
    "IsoclinicCheck",
    "CapabilityReport",
    "EquivalenceReport",
    "classify_extension",
    "stem_cover",
    "covers_isoclinic_check",
    "verify_isoclinism",
    "hopfian_check",
    "precise_lie_center",
    "precise_lie_center_from_presentation",
    "is_lie_capable",
    "capability_equivalences",
]


@dataclass(frozen=True)
class ExtensionFlags:
    lie_central: bool
    stem: bool
    cover: bool


def classify_extension(ext: Extension) -> ExtensionFlags:
    """Lie-central, Lie-stem and Lie-stem-cover flags of ``ext``.

    The cover test is dimensional: a stem extension has ``θ`` onto the kernel,
    so it is an isomorphism exactly when the dimensions agree.
    """
    ok, pair = check_homomorphism(ext.total, ext.quotient, ext.projection)
    if not ok:
        raise NotAHomomorphismError("projection does not preserve brackets", pair)
    g, n = ext.total, ext.kernel.space
    central = lie_commutator(g, n, g.full()).space.is_zero()
    stem = central and n <= ann_ideal(g).space
    cover = False
    if stem:
        try:
            cover = n.dim == schur_lie_multiplier(ext.quotient).dim
        except UnsupportedInputError:
            cover = False
    return ExtensionFlags(central, stem, cover)


@dataclass
class StemCover:
    cover: LeibnizAlgebra | None
    extension: Extension | None
    complement_found: bool
    seed: int | None
    multiplier_dim: int
    phi: list = field(default_factory=list)


def _decompose(basis: list[SparseVec], v: SparseVec, fld) -> SparseVec:
    x = solve_combination(basis, v, fld)
    assert x is not None, "vector outside the span of the chosen basis"
    return x


def stem_cover(g: LeibnizAlgebra, seed: int | None = None) -> StemCover:
    """A Lie-stem cover of the nilpotent algebra ``g``.

    ``seed`` perturbs the initial complement ``W`` by a random map into ``M``;
    ``None`` keeps the coordinate complement.  If the invariance system has no
    solution the result has ``complement_found = False``.
    """
    fr = _frame(g, default_level(g))
    F, P, fld = fr.F, fr.P, g.field
    one = fld.one
    V = QuotientSpace(fr.rbar, fr.FR)
    mq = fr.multiplier_space()
    m = mq.dim
    mcoords = [dict((k, a) for k, a in enumerate(V.coords(r)) if a) for r in mq.representatives]
    chosen = span(mcoords, V.dim, fld) if mcoords else Subspace.zero(V.dim, fld)
    wcoords: list[SparseVec] = []
    for j in range(V.dim):
        e = {j: one}
        if chosen.reduce(dict(e)):
            wcoords.append(e)
            chosen = chosen + span([e], V.dim, fld)
    if seed is not None:
        rng = random.Random(seed)
        for w in wcoords:
            for mc in mcoords:
                a = rng.randint(-2, 2)
                if a:
                    add_scaled(w, mc, fld(a))
    d = len(wcoords)
    basis = mcoords + wcoords
    lifts = [V.lift([w.get(k, fld.zero) for k in range(V.dim)]) for w in wcoords]
    gens = [F.word_vector((i,)) for i in range(F.n_generators)]
    # Unknown Φ[k][l] sits at index k*d + l; equation (j, i, k) reads Σ_l Φ[k][l] β_l = α_k.
    columns: list[SparseVec] = [{} for _ in range(m * d)]
    target: SparseVec = {}
    for j, lift in enumerate(lifts):
        for i, x in enumerate(gens):
            img = F.bracket_sparse(lift, x)
            c = V.coords(img)
            coeffs = _decompose(basis, {k: a for k, a in enumerate(c) if a}, fld)
            for k in range(m):
                eq = (j * len(gens) + i) * m + k
                alpha = coeffs.get(k)
                if alpha:
                    target[eq] = alpha
                for l in range(d):
                    beta = coeffs.get(m + l)
                    if beta:
                        columns[k * d + l][eq] = beta
    if m * d:
        phi_vec = solve_combination(columns, target, fld)
    else:
        phi_vec = {} if not target else None
    if phi_vec is None:
        return StemCover(None, None, False, seed, m)
    phi = [[phi_vec.get(k * d + l, fld.zero) for l in range(d)] for k in range(m)]
    mlifts = [V.lift([mc.get(t, fld.zero) for t in range(V.dim)]) for mc in mcoords]
    srows = list(fr.FR.rows)
    for l, lift in enumerate(lifts):
        v = dict(lift)
        for k in range(m):
            if phi[k][l]:
                add_scaled(v, mlifts[k], phi[k][l])
        srows.append(v)
    S = span(srows, F.dim, fld)
    for s in S.rows:
        for x in gens:
            assert not S.reduce(F.bracket_sparse(s, x)), "complement is not an ideal"
    Qc = QuotientSpace(F.degree_space(1), S)
    if Qc.dim != g.dim + m:
        raise AssertionError(f"cover has dimension {Qc.dim}, expected {g.dim + m}")
    reps = Qc.representatives
    prods = {}
    for a, u in enumerate(reps):
        for b, v in enumerate(reps):
            c = Qc.coords(F.bracket_sparse(u, v))
            if any(c):
                prods[(a, b)] = {k: t for k, t in enumerate(c) if t}
    labels = [F.word_label(p) for p in Qc.pivots]
    cover = LeibnizAlgebra(Qc.dim, prods, labels, fld)
    proj = LinearMap(Qc.dim, g.dim, tuple(P.evaluation.apply(r) for r in reps), fld)
    ext = Extension.from_projection(cover, g, proj)
    return StemCover(cover, ext, True, seed, m, phi)


def _psi_of_lie_center(sc: StemCover) -> Subspace:
    g = sc.extension.quotient
    z = centers(sc.cover).lie_center.space
    return span([sc.extension.projection.apply(r) for r in z.rows], g.dim, g.field)


def precise_lie_center_from_presentation(g: LeibnizAlgebra) -> Subspace:
    """``ρ(Z_Lie(F̄/[F̄,r̄]_Lie))``, computed without any cover.

    Words of degree above the class lie in ``r̄``, so testing the symmetrized
    bracket against the lower-degree words is enough.
    """
    fr = _frame(g, default_level(g))
    F, one = fr.F, g.field.one
    c = fr.P.nilpotency_class
    maps = []
    for f in range(F.dim):
        if F.degrees[f] > c:
            break
        e = {f: one}
        maps.append(LinearMap.from_function(lambda j, e=e: F.sym({j: one}, e), F.dim, F.dim, g.field))
    if not maps:
        return g.zero_space()
    Z = solve_membership_conditions(maps, fr.FR)
    return span([fr.P.evaluation.apply(r) for r in Z.rows], g.dim, g.field)


def precise_lie_center(g: LeibnizAlgebra, seeds=(None, 1)) -> Subspace:
    """``Z*_Lie(g) = ψ(Z_Lie(g*))`` for a Lie-stem cover ``ψ: g* ↠ g``.

    Computed from a cover for every seed in ``seeds`` and from the presentation
    directly; all answers must agree.
    """
    images = []
    for s in seeds:
        sc = stem_cover(g, seed=s)
        if not sc.complement_found:
            raise RuntimeError(f"no invariant complement found (seed {s})")
        images.append(_psi_of_lie_center(sc))
    direct = precise_lie_center_from_presentation(g)
    for im in images:
        if im != direct:
            raise AssertionError("precise Lie-center depends on the route taken")
    return direct


@dataclass(frozen=True)
class CapabilityReport:
    capable: bool
    precise_center: Subspace
    sigma_injective: tuple
    consistent: bool


def is_lie_capable(g: LeibnizAlgebra) -> CapabilityReport:
    """``g`` is Lie-capable iff its precise Lie-center vanishes.

    Cross-check: for ``x`` running over a basis of ``Z_Lie(g)`` when capable
    (of ``Z*`` otherwise), ``σ_x: M(g) → M(g/⟨x⟩)`` should be non-injective
    (injective).  Disagreements are reported in ``consistent``.
    """
    zs = precise_lie_center(g)
    capable = zs.is_zero()
    probe = centers(g).lie_center.space if capable else zs
    flags = []
    for row in probe.rows:
        n = ideal_closure(g, [row]).space
        rep = four_term_sequence(g, n)
        flags.append(rep.spaces["sigma"].rank == rep.dims[1])
    consistent = all(f != capable for f in flags)
    return CapabilityReport(capable, zs, tuple(flags), consistent)


@dataclass(frozen=True)
class EquivalenceReport:
    a_holds: bool
    b_holds: bool
    c_holds: bool
    dims: tuple

    @property
    def agree(self) -> bool:
        return self.a_holds == self.b_holds == self.c_holds


def capability_equivalences(g: LeibnizAlgebra, n) -> EquivalenceReport:
    """The three equivalent conditions on a Lie-central ideal ``n``.

    (a) ``dim(n ∩ [g,g]_Lie) = dim M(g/n) - dim M(g)``; (b) ``n ⊆ Z*_Lie(g)``;
    (c) ``σ: M(g) → M(g/n)`` is injective.
    """
    space = _as_space(g, n)
    if not space <= centers(g).lie_center.space:
        raise ValueError("n is not contained in the Lie-center")
    rep = four_term_sequence(g, space)
    t1, t2, t3, t4 = rep.dims
    gg = lie_commutator(g, g.full(), g.full()).space
    a = (space & gg).dim == t3 - t2
    b = space <= precise_lie_center(g)
    c = rep.spaces["sigma"].rank == t2
    return EquivalenceReport(a, b, c, rep.dims)


@dataclass(frozen=True)
class IsoclinismWitness:
    """``eta: q1 → q2`` and ``xi: g1 → g2``, the latter used on ``[g1,g1]_Lie`` only."""

    eta: LinearMap
    xi: LinearMap


def _commutator_form(ext: Extension, shift: int = 0):
    """``C(u, v) = [ũ, ṽ] + [ṽ, ũ]`` on basis pairs of the quotient, for chosen lifts ``ũ``."""
    g, q = ext.total, ext.quotient
    fld = g.field
    one = fld.one
    cols = list(ext.projection.columns)
    lifts = []
    for i in range(q.dim):
        x = solve_combination(cols, {i: one}, fld)
        assert x is not None
        lifts.append(x)
    if shift:
        ker = ext.kernel.space.rows
        for i, l in enumerate(lifts):
            for k, r in enumerate(ker):
                add_scaled(l, r, fld(shift * (i + k + 1)))
    return {(i, j): g.sym(lifts[i], lifts[j]) for i in range(q.dim) for j in range(q.dim)}


def verify_isoclinism(e1: Extension, e2: Extension, w: IsoclinismWitness) -> bool:
    """Check that ``(eta, xi)`` is a Lie-isoclinism between two Lie-central extensions."""
    g1, g2, q1, q2 = e1.total, e2.total, e1.quotient, e2.quotient
    if (w.eta.domain_dim, w.eta.codomain_dim) != (q1.dim, q2.dim):
        raise DimensionMismatchError("eta must map q1 to q2")
    if (w.xi.domain_dim, w.xi.codomain_dim) != (g1.dim, g2.dim):
        raise DimensionMismatchError("xi must map g1 to g2")
    if q1.dim != q2.dim or w.eta.rank != q1.dim:
        return False
    c1 = lie_commutator(g1, g1.full(), g1.full()).space
    c2 = lie_commutator(g2, g2.full(), g2.full()).space
    img = span([w.xi.apply(r) for r in c1.rows], g2.dim, g2.field) if c1.dim else Subspace.zero(g2.dim, g2.field)
    if c1.dim != c2.dim or img != c2:
        return False
    C1, C2 = _commutator_form(e1), _commutator_form(e2)
    for form, ext in ((C1, e1), (C2, e2)):
        if form != _commutator_form(ext, shift=1):
            raise AssertionError("commutator form depends on the chosen lifts")
    for (i, j), val in C1.items():
        lhs = w.xi.apply(val)
        u, v = w.eta.columns[i], w.eta.columns[j]
        rhs: SparseVec = {}
        for a, x in u.items():
            for b, y in v.items():
                add_scaled(rhs, C2[(a, b)], x * y)
        if lhs != rhs:
            return False
    return True


@dataclass(frozen=True)
class IsoclinicCheck:
    passed: bool
    seeds: tuple
    invariants: tuple
    failed_seeds: tuple


def covers_isoclinic_check(g: LeibnizAlgebra, trials: int, seed: int) -> IsoclinicCheck:
    """Covers from ``trials`` seeded complements share the decidable isoclinism invariants.

    The invariants are the cover dimension, ``dim [g*, g*]_Lie`` and
    ``dim Z_Lie(g*) - dim(kernel)``.
    """
    seeds = tuple(seed + t for t in range(trials))
    invs, failed = [], []
    for s in seeds:
        sc = stem_cover(g, seed=s)
        if not sc.complement_found:
            failed.append(s)
            continue
        P = sc.cover
        comm = lie_commutator(P, P.full(), P.full()).space.dim
        zq = centers(P).lie_center.space.dim - sc.extension.kernel.space.dim
        invs.append((P.dim, comm, zq))
    passed = not failed and len(set(invs)) <= 1
    return IsoclinicCheck(passed, seeds, tuple(invs), tuple(failed))


def hopfian_check(c1: StemCover, c2: StemCover, eta: LinearMap) -> bool:
    """Whether a supplied epimorphism ``eta: g1* → g2*`` with ``eta(M1) ⊆ M2`` is injective."""
    P1, P2 = c1.cover, c2.cover
    ok, _ = check_homomorphism(P1, P2, eta)
    if not ok or eta.rank != P2.dim:
        raise ValueError("eta is not an epimorphism of the covers")
    m1, m2 = c1.extension.kernel.space, c2.extension.kernel.space
    if m1.dim and not span([eta.apply(r) for r in m1.rows], P2.dim, P2.field) <= m2:
        raise ValueError("eta does not map the multiplier into the multiplier")
    return eta.kernel().is_zero()
