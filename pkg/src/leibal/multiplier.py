"""The Schur Lie-multiplier ``M(g) = (r ∩ [F,F]_Lie) / [F,r]_Lie`` and its companions.

Everything is computed inside a truncated free presentation.  For ``g``
nilpotent of class ``c`` the level ``L = 2c + 1`` is enough: ``[F,F]_Lie`` is
spanned by homogeneous symmetrized brackets, and one of degree at least
``2c + 2`` always has a factor of degree at least ``c + 1``.  That factor lies
in ``r``, so the whole bracket lies in ``[F,r]_Lie`` and the discarded words
never reach the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import LeibnizAlgebra, NotAnIdealError, _as_space, ann_ideal, centers, is_two_sided, liezation
from .extension import Extension, NotLieCentralError, lie_central_witness
from .free import Presentation, UnsupportedInputError, present, _require_nilpotent
from .lie import lie_commutator, lie_nilpotency_class, relative_lower_series
from .linalg import LinearMap, QuotientSpace, SparseVec, Subspace, preimage_within, span

__all__ = [
    "TruncationError",
    "MultiplierResult",
    "FourTermReport",
    "BaerReport",
    "ClassCheck",
    "IsoCheck",
    "schur_lie_multiplier",
    "four_term_sequence",
    "baer_ladder",
    "theta_image",
    "extension_class_check",
    "perfect_quotient_iso_check",
    "default_level",
]

MAX_ESCALATION = 2


class TruncationError(RuntimeError):
    """Results disagree between truncation levels or between independent routes."""


def default_level(g: LeibnizAlgebra) -> int:
    c = len(_require_nilpotent(g)) - 1 if g.dim else 0
    return 2 * c + 1


class _Frame:
    """A presentation together with ``r̄``, ``[F̄,F̄]_Lie``, ``[F̄,r̄]_Lie`` and ``r̄ ∩ [F̄,F̄]_Lie``."""

    def __init__(self, g: LeibnizAlgebra, level: int, generators=None):
        P = present(g, level, generators)
        F = P.free
        self.g, self.P, self.F = g, P, F
        self.level = level
        c = P.nilpotency_class
        fld = g.field
        one = fld.one
        self.rbar = P.kernel
        pairs = []
        for i in range(F.dim):
            for j in range(i, F.dim):
                if F.degrees[i] + F.degrees[j] <= level:
                    v = F.sym({i: one}, {j: one})
                    if v:
                        pairs.append(v)
        self.Y = span(pairs, F.dim, fld)
        gens = []
        for j in range(F.dim):
            if F.degrees[j] < c + 1:
                continue
            for i in range(F.dim):
                if F.degrees[i] + F.degrees[j] <= level:
                    v = F.sym({i: one}, {j: one})
                    if v:
                        gens.append(v)
        self.r_low = preimage_within(F.degree_space(1, c), P.evaluation)
        gens.extend(self._sym_all(self.r_low.rows))
        self.FR = span(gens, F.dim, fld)
        self.rY = preimage_within(self.Y, P.evaluation)
        self._section = None

    def _sym_all(self, vectors) -> list[SparseVec]:
        F, one = self.F, self.g.field.one
        out = []
        for k in vectors:
            lo = min(F.degrees[t] for t in k)
            for i in range(F.dim):
                if F.degrees[i] + lo > self.level:
                    break
                v = F.sym({i: one}, k)
                if v:
                    out.append(v)
        return out

    @property
    def section(self) -> LinearMap:
        if self._section is None:
            self._section = self.P.section()
        return self._section

    def lifts(self, space: Subspace) -> list[SparseVec]:
        return [self.section.apply(r) for r in space.rows]

    def preimage(self, space: Subspace) -> Subspace:
        """``S̄``: everything in ``F̄`` evaluating into ``space``."""
        return self.rbar + span(self.lifts(space), self.F.dim, self.g.field)

    def comm_with(self, space: Subspace) -> Subspace:
        """``[F̄, S̄]_Lie`` for ``S̄`` the preimage of the ideal ``space``."""
        extra = self._sym_all(self.lifts(space))
        if not extra:
            return self.FR
        return span(list(self.FR.rows) + extra, self.F.dim, self.g.field)

    def within(self, space: Subspace, target: Subspace) -> Subspace:
        """``{x ∈ space : eval(x) ∈ target}``."""
        return preimage_within(space, self.P.evaluation, target)

    def multiplier_space(self) -> QuotientSpace:
        return QuotientSpace(self.rY, self.FR)


@lru_cache(maxsize=32)
def _frame(g: LeibnizAlgebra, level: int) -> _Frame:
    return _Frame(g, level)


@dataclass(frozen=True)
class MultiplierResult:
    dim: int
    representatives: tuple
    level_used: int
    stabilized: bool
    presentation: Presentation = field(repr=False, compare=False, default=None)

    def describe(self) -> list[str]:
        return [self.presentation.free.describe_vector(r) for r in self.representatives]


def schur_lie_multiplier(g: LeibnizAlgebra, level: int | None = None, stabilize: bool = False, generators=None) -> MultiplierResult:
    """``M(g)`` for a nilpotent ``g``, at ``level`` (default ``2c + 1``).

    With ``stabilize`` the computation is repeated one level higher and a
    disagreement raises :class:`TruncationError`.  ``generators`` overrides the
    minimal generating set.
    """
    L = default_level(g) if level is None else level
    frame = _frame(g, L) if generators is None else _Frame(g, L, generators)
    q = frame.multiplier_space()
    stabilized = False
    if stabilize:
        up = _frame(g, L + 1) if generators is None else _Frame(g, L + 1, generators)
        if up.multiplier_space().dim != q.dim:
            raise TruncationError(f"multiplier dimension changes between levels {L} and {L + 1}")
        stabilized = True
    return MultiplierResult(q.dim, tuple(q.representatives), L, stabilized, frame.P)


def _quotient_map(src: QuotientSpace, dst: QuotientSpace) -> LinearMap:
    """The map ``x + src.sub ↦ x + dst.sub`` in the fixed quotient coordinates."""
    cols = [dict(enumerate(dst.coords(r))) for r in src.representatives]
    cols = [{k: a for k, a in c.items() if a} for c in cols]
    return LinearMap(src.dim, dst.dim, tuple(cols), src.field)


@dataclass
class FourTermReport:
    """Dimensions and maps of ``0 → t1 →π M(g) →σ M(g/n) →τ t4 → 0``."""

    dims: tuple[int, int, int, int]
    maps: dict
    exact: bool
    level: int
    t1_derived: int
    t4_in_algebra: int
    checks: dict
    spaces: dict = field(default_factory=dict, repr=False)

    @property
    def dimension_identity(self) -> bool:
        t1, t2, t3, t4 = self.dims
        return t3 + t1 == t2 + t4


def _four_term_at(g: LeibnizAlgebra, n: Subspace, level: int) -> FourTermReport:
    fr = _frame(g, level)
    S = fr.preimage(n)
    FS = fr.comm_with(n)
    rFS = fr.within(FS, g.zero_space())
    SY = fr.within(fr.Y, n)
    Q1 = QuotientSpace(rFS, fr.FR)
    Q2 = fr.multiplier_space()
    Q3 = QuotientSpace(SY, FS)
    Q4 = QuotientSpace(S & (fr.Y + fr.rbar), FS + fr.rbar)
    pi = _quotient_map(Q1, Q2)
    sigma = _quotient_map(Q2, Q3)
    tau = _quotient_map(Q3, Q4)
    gg = lie_commutator(g, g.full(), g.full()).space
    t4_g = (n & gg).dim - lie_commutator(g, n, g.full()).space.dim
    t1, t2, t3, t4 = Q1.dim, Q2.dim, Q3.dim, Q4.dim
    checks = {
        "pi_injective": pi.rank == t1,
        "ker_sigma_eq_im_pi": sigma.compose(pi).is_zero() and t2 - sigma.rank == pi.rank,
        "ker_tau_eq_im_sigma": tau.compose(sigma).is_zero() and t3 - tau.rank == sigma.rank,
        "tau_surjective": tau.rank == t4,
    }
    return FourTermReport(
        dims=(t1, t2, t3, t4),
        maps={"pi": pi.matrix(), "sigma": sigma.matrix(), "tau": tau.matrix()},
        exact=all(checks.values()),
        level=level,
        t1_derived=t2 - t3 + t4,
        t4_in_algebra=t4_g,
        checks=checks,
        spaces={"frame": fr, "S": S, "FS": FS, "Q1": Q1, "Q2": Q2, "Q3": Q3, "Q4": Q4, "pi": pi, "sigma": sigma, "tau": tau},
    )


def four_term_sequence(g: LeibnizAlgebra, n, level: int | None = None) -> FourTermReport:
    """The exact sequence ``0 → (r ∩ [F,S]_Lie)/[F,r]_Lie → M(g) → M(g/n) → (n ∩ [g,g]_Lie)/[g,n]_Lie → 0``.

    The first term is computed directly and also read off from exactness; the
    last is computed in the free algebra and inside ``g``.  Any disagreement
    retries one level higher, then raises :class:`TruncationError`.
    """
    space = _as_space(g, n)
    ok, witness = is_two_sided(g, space)
    if not ok:
        raise NotAnIdealError("n is not a two-sided ideal", witness)
    L = default_level(g) if level is None else level
    for extra in range(MAX_ESCALATION + 1):
        rep = _four_term_at(g, space, L + extra)
        if rep.dims[0] == rep.t1_derived and rep.dims[3] == rep.t4_in_algebra:
            return rep
    raise TruncationError(
        f"four-term sequence cross-checks fail up to level {L + MAX_ESCALATION}: "
        f"dims {rep.dims}, derived t1 {rep.t1_derived}, t4 in algebra {rep.t4_in_algebra}"
    )


@dataclass(frozen=True)
class BaerReport:
    dim_M: int
    dim_Q: int
    dim_quotient: int
    commutator_meet: int
    inequality_ok: bool
    quotient_bound_ok: bool
    central: bool
    central_bound_ok: bool | None
    central_lhs: int | None
    central_rhs: int | None
    epimorphism_bound_ok: bool | None


def baer_ladder(g: LeibnizAlgebra, b) -> BaerReport:
    """Dimension ladder for ``g ↠ g/b``.

    ``Q = (S̄ ∩ [F̄,F̄]_Lie)/[F̄,r̄]_Lie`` contains ``M(g)`` with quotient
    ``[g,g]_Lie ∩ b`` and maps onto ``M(g/b)`` with kernel ``[F̄,S̄]_Lie/[F̄,r̄]_Lie``.
    When ``b`` is Lie-central that kernel is a quotient of ``b ⊗ g_Lie``.
    """
    space = _as_space(g, b)
    rep = four_term_sequence(g, space)
    fr: _Frame = rep.spaces["frame"]
    SY = fr.within(fr.Y, space)
    dim_Q = SY.dim - fr.FR.dim
    dim_M = rep.dims[1]
    dim_quot = rep.dims[2]
    gg = lie_commutator(g, g.full(), g.full()).space
    meet = (gg & space).dim
    if dim_Q - dim_M != meet:
        raise AssertionError(f"Q/M has dimension {dim_Q - dim_M}, expected {meet}")
    central = space <= centers(g).lie_center.space
    bound = lhs = rhs = epi = None
    if central:
        glie = liezation(g).dim
        lhs = dim_M + meet
        rhs = dim_quot + space.dim * glie
        bound = lhs <= rhs
        epi = rep.spaces["FS"].dim - fr.FR.dim <= space.dim * glie
    return BaerReport(
        dim_M=dim_M,
        dim_Q=dim_Q,
        dim_quotient=dim_quot,
        commutator_meet=meet,
        inequality_ok=dim_quot <= dim_M + meet,
        quotient_bound_ok=dim_quot <= dim_Q,
        central=central,
        central_bound_ok=bound,
        central_lhs=lhs,
        central_rhs=rhs,
        epimorphism_bound_ok=epi,
    )


def theta_image(ext: Extension, strict: bool = True) -> Subspace:
    """Image of the connecting map ``θ: M(q) → n``, that is ``ρ(S̄ ∩ [F̄,F̄]_Lie)``.

    It always equals ``n ∩ g^ann``; that identity is asserted.  With
    ``strict`` a kernel that is not Lie-central is rejected.
    """
    g, n = ext.total, ext.kernel.space
    if strict:
        w = lie_central_witness(g, n)
        if w is not None:
            raise NotLieCentralError("the kernel is not Lie-central", w)
    fr = _frame(g, default_level(g))
    SY = fr.within(fr.Y, n)
    image = span([fr.P.evaluation.apply(r) for r in SY.rows], g.dim, g.field)
    expected = n & ann_ideal(g).space
    if image != expected:
        raise AssertionError("θ image differs from n ∩ g^ann")
    return image


@dataclass(frozen=True)
class ClassCheck:
    k: int
    theta_on_kernel: Subspace
    quotient_class: int | None
    verdict: bool
    direct_class: int | None


def extension_class_check(ext: Extension, k: int, strict: bool = True) -> ClassCheck:
    """Is the Lie-nilpotency class of ``ext.total`` at most ``k``?

    ``τ: M(q) → M(q/q^[k])`` has kernel ``(S̄ ∩ [F̄,T̄]_Lie)/[F̄,S̄]_Lie`` where
    ``T̄`` is the preimage of ``q^[k]``.  The verdict is that ``θ`` kills this
    kernel and ``q`` itself has class at most ``k``; it is compared with the
    class computed directly from the lower series of ``g``.
    """
    g, q, proj = ext.total, ext.quotient, ext.projection
    n = ext.kernel.space
    if strict:
        w = lie_central_witness(g, n)
        if w is not None:
            raise NotLieCentralError("the kernel is not Lie-central", w)
    if k < 1:
        raise ValueError("k must be at least 1")
    qk = relative_lower_series(q, q.full(), bound=k)
    qk_term = qk[k - 1] if len(qk) >= k else qk[-1]
    t = preimage_within(g.full(), proj, qk_term)
    fr = _frame(g, default_level(g))
    FT = fr.comm_with(t)
    S_FT = fr.within(FT, n)
    theta = span([fr.P.evaluation.apply(r) for r in S_FT.rows], g.dim, g.field)
    qc = lie_nilpotency_class(q)
    verdict = theta.is_zero() and qc is not None and qc <= k
    direct = lie_nilpotency_class(g)
    if verdict != (direct is not None and direct <= k):
        raise AssertionError(f"class criterion says {verdict}, lower series gives class {direct}")
    return ClassCheck(k, theta, qc, verdict, direct)


@dataclass(frozen=True)
class IsoCheck:
    applicable: bool
    is_isomorphism: bool
    kernel_in_commutator: bool
    lie_nilpotent: bool
    quotient_multiplier_dim: int | None


def perfect_quotient_iso_check(ext: Extension) -> IsoCheck:
    """For Lie-nilpotent ``g`` with ``ker f ⊆ [g,g]_Lie`` and ``M(q) = 0``, ``f`` is injective.

    Reports whether the hypotheses hold and whether ``f`` is in fact an
    isomorphism; when the hypotheses hold, injectivity is asserted.
    """
    g, q = ext.total, ext.quotient
    ker = ext.kernel.space
    nil = lie_nilpotency_class(g) is not None
    gg = lie_commutator(g, g.full(), g.full()).space
    inside = ker <= gg
    try:
        mdim = schur_lie_multiplier(q).dim
    except UnsupportedInputError:
        mdim = None
    applicable = nil and inside and mdim == 0
    iso = ker.is_zero()
    if applicable and not iso:
        raise AssertionError("hypotheses hold but the surjection has a kernel")
    return IsoCheck(applicable, iso, inside, nil, mdim)

