import oracle
import pytest
from conftest import a2, abelian, cyclic, to_oracle

from leibal import (
    Extension,
    LeibnizAlgebra,
    NotAnIdealError,
    NotLieCentralError,
    UnsupportedInputError,
    baer_ladder,
    centers,
    entries,
    extension_class_check,
    get_entry,
    instantiate,
    perfect_quotient_iso_check,
    schur_lie_multiplier,
    stem_cover,
    theta_image,
)
from leibal.algebra import ann_ideal
from leibal.multiplier import four_term_sequence

# dim M^Lie for every multiplier-supported catalog row, from tests/oracle.py at level 2c+1
ORACLE_DIMS = {
    "2.1": 1, "3.1": 2, "3.2": 3, "3.3": 2, "3.5": 1,
    "4.1": 5, "4.2": 5, "4.3": 5, "4.4": 5, "4.5": 5, "4.6": 5, "4.7": 1, "4.8": 4, "4.9": 4,
    "4.10": 2, "4.11": 2, "4.12": 2, "4.13": 2, "4.14": 4, "4.15": 3, "4.16": 3, "4.17": 3,
    "4.18": 3, "4.19": 3, "4.20": 3, "4.21": 3, "4.22": 2, "4.23": 2, "4.24": 3, "4.25": 2,
}  # fmt: skip
# rows whose oracle run is well under a second
LIVE = ["2.1", "3.1", "3.2", "3.3", "3.5", "4.7", "4.8", "4.9", "4.14", "4.15", "4.17"]


def test_examples():
    m = schur_lie_multiplier(abelian(1))
    assert (m.dim, m.level_used, m.describe()) == (1, 3, ["x^2"])
    m = schur_lie_multiplier(a2(), stabilize=True)
    assert (m.dim, m.level_used, m.stabilized, m.describe()) == (1, 5, True, ["x^3"])
    assert schur_lie_multiplier(abelian(2)).dim == 3


def test_unsupported():
    with pytest.raises(UnsupportedInputError):
        schur_lie_multiplier(instantiate(get_entry("4.26")))


@pytest.mark.parametrize("eid", sorted(ORACLE_DIMS))
def test_catalog_multipliers_match_frozen_oracle(eid):
    m = schur_lie_multiplier(instantiate(get_entry(eid)), stabilize=True)
    assert m.dim == ORACLE_DIMS[eid]


@pytest.mark.parametrize("eid", LIVE)
def test_catalog_multipliers_match_live_oracle(eid):
    g = instantiate(get_entry(eid))
    o = to_oracle(g)
    c = oracle.ordinary_class(o)
    assert oracle.multiplier_dim(o, 2 * c + 1) == oracle.multiplier_dim(o, 2 * c + 2) == ORACLE_DIMS[eid]


def test_supported_set_is_exactly_the_frozen_set():
    assert {e.id for e in entries() if not e.multiplier_unsupported} == set(ORACLE_DIMS)


@pytest.mark.parametrize(
    "g,gens",
    [
        (a2(), [(1, 0), (0, 1)]),
        (instantiate(get_entry("3.1")), [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
        (cyclic(3), [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
    ],
)
def test_baer_invariance_under_redundant_generators(g, gens):
    assert schur_lie_multiplier(g, generators=gens).dim == schur_lie_multiplier(g).dim


def test_four_term_examples():
    g = a2()
    rep = four_term_sequence(g, [(1, 0)])
    assert rep.dims == (1, 1, 1, 1) and rep.exact and rep.dimension_identity
    rep0 = four_term_sequence(g, g.zero_space())
    assert rep0.dims == (0, 1, 1, 0) and rep0.spaces["sigma"].rank == 1
    repg = four_term_sequence(g, g.full())
    # g/g = 0 kills the third term; exactness then forces the fourth to vanish as well
    assert repg.dims == (1, 1, 0, 0) and repg.t4_in_algebra == 0
    with pytest.raises(NotAnIdealError):
        four_term_sequence(g, [(0, 1)])


def test_baer_examples():
    r = baer_ladder(a2(), [(1, 0)])
    assert (r.dim_M, r.dim_Q, r.dim_quotient) == (1, 2, 1)
    assert r.inequality_ok and r.quotient_bound_ok and r.central
    assert (r.central_lhs, r.central_rhs) == (2, 2) and r.central_bound_ok
    r0 = baer_ladder(a2(), [])
    assert r0.dim_Q == r0.dim_M and r0.dim_quotient == r0.dim_M
    rab = baer_ladder(abelian(2), [(1, 0)])
    assert (rab.dim_M, rab.dim_quotient, rab.commutator_meet) == (3, 1, 0)
    assert (rab.central_lhs, rab.central_rhs) == (3, 3)


def _cover_ext():
    return stem_cover(a2()).extension


def test_theta_examples():
    ext = _cover_ext()
    assert theta_image(ext) == ext.kernel.space
    assert theta_image(Extension.identity(a2())).is_zero()
    g = cyclic(3)
    ext3 = Extension.from_ideal(g, [(0, 1, 0), (0, 0, 1)])
    with pytest.raises(NotLieCentralError):
        theta_image(ext3)
    assert theta_image(ext3, strict=False) == g.span([(0, 1, 0), (0, 0, 1)])


def test_theta_equals_kernel_meet_ann():
    for eid in ("3.1", "3.3", "4.10", "4.22"):
        g = instantiate(get_entry(eid))
        z = centers(g).lie_center.space
        ext = Extension.from_ideal(g, z)
        assert theta_image(ext) == z & ann_ideal(g).space


def test_class_check_examples():
    ext = _cover_ext()
    k2 = extension_class_check(ext, 2)
    assert not k2.verdict and k2.theta_on_kernel == ext.kernel.space and k2.direct_class == 3
    k3 = extension_class_check(ext, 3)
    assert k3.verdict and k3.theta_on_kernel.is_zero()
    ident = extension_class_check(Extension.identity(a2()), 2)
    assert ident.verdict


def test_iso_check_examples():
    r = perfect_quotient_iso_check(Extension.identity(a2()))
    assert r.is_isomorphism
    r = perfect_quotient_iso_check(Extension.from_ideal(a2(), [(1, 0)]))
    assert r.kernel_in_commutator and r.quotient_multiplier_dim == 1 and not r.applicable
    r = perfect_quotient_iso_check(_cover_ext())
    assert r.kernel_in_commutator and not r.applicable and not r.is_isomorphism


def test_zero_algebra_multiplier():
    assert schur_lie_multiplier(LeibnizAlgebra(0, {})).dim == 0
