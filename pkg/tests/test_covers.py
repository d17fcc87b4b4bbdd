import pytest
from conftest import a2, abelian, cyclic

from leibal import (
    Extension,
    IsoclinismWitness,
    LeibnizAlgebra,
    LinearMap,
    ann_ideal,
    capability_equivalences,
    centers,
    classify_extension,
    covers_isoclinic_check,
    entries,
    get_entry,
    hopfian_check,
    ideal_closure,
    instantiate,
    is_lie_capable,
    precise_lie_center,
    precise_lie_center_from_presentation,
    schur_lie_multiplier,
    stem_cover,
    verify_isoclinism,
)
from leibal.algebra import NotAHomomorphismError

SUPPORTED = [e for e in entries() if not e.multiplier_unsupported]
# rows with a nonzero precise Lie-center, located by scanning every supported row
NONCAPABLE = {"3.1": 1, "3.3": 1, "4.1": 1, "4.2": 1, "4.3": 1, "4.4": 1, "4.5": 1, "4.6": 1,
              "4.10": 2, "4.11": 2, "4.12": 2, "4.13": 2, "4.22": 1, "4.23": 1, "4.25": 1}  # fmt: skip


def relabel(g: LeibnizAlgebra, perm: list[int], labels) -> LeibnizAlgebra:
    """The algebra with basis vector ``i`` of ``g`` renamed to ``perm[i]``."""
    prods = {(perm[i], perm[j]): {perm[k]: c for k, c in v.items()} for (i, j), v in g.products.items()}
    return LeibnizAlgebra(g.dim, prods, labels, g.field)


def test_cover_of_one_dim_abelian_is_a2():
    sc = stem_cover(abelian(1))
    assert sc.complement_found and sc.cover.dim == 2
    assert sc.cover.same_structure(LeibnizAlgebra.from_table(2, [(1, 1, 2, 1)]))
    assert relabel(sc.cover, [1, 0], ["a1", "a2"]).same_structure(a2())


def test_cover_of_a2_is_table_row_3_5():
    sc = stem_cover(a2())
    # x -> a3, x^2 -> a1, x^3 -> a2
    assert sc.cover.labels == ("x", "x^2", "x^3")
    moved = relabel(sc.cover, [2, 0, 1], ["a1", "a2", "a3"])
    assert moved.same_structure(instantiate(get_entry("3.5")))


def test_cover_of_two_dim_abelian():
    sc = stem_cover(abelian(2))
    assert sc.cover.dim == 5
    flags = classify_extension(sc.extension)
    assert flags.lie_central and flags.stem and flags.cover


@pytest.mark.parametrize("e", SUPPORTED, ids=[e.id for e in SUPPORTED])
def test_cover_invariants_on_catalog(e):
    g = instantiate(e)
    sc = stem_cover(g)
    assert sc.complement_found
    P, ext = sc.cover, sc.extension
    m = schur_lie_multiplier(g).dim
    assert P.dim == g.dim + m
    n = ext.kernel.space
    assert n <= centers(P).lie_center.space and n <= ann_ideal(P).space
    assert classify_extension(ext).cover


def test_classify_examples():
    ext = Extension.from_ideal(a2(), [(1, 0)])
    f = classify_extension(ext)
    assert f.lie_central and f.stem and f.cover
    # a2 ⊕ k ↠ a2 with the kernel outside the annihilator
    g = LeibnizAlgebra.from_table(3, [(2, 2, 1, 1)])
    ext = Extension.from_projection(g, a2(), LinearMap.from_matrix([[1, 0, 0], [0, 1, 0]]))
    f = classify_extension(ext)
    assert f.lie_central and not f.stem and not f.cover
    with pytest.raises(NotAHomomorphismError):
        Extension.from_projection(a2(), a2(), LinearMap.from_matrix([[0, 1], [1, 0]]))


def test_seed_changes_complement_but_not_invariants():
    for g in (a2(), abelian(2)):
        chk = covers_isoclinic_check(g, 3, 1)
        assert chk.passed and len(chk.invariants) == 3
    assert len({stem_cover(abelian(2), seed=s).cover for s in (None, 1, 2, 3)}) >= 2


def test_isoclinism_examples():
    ext = Extension.from_ideal(a2(), [(1, 0)])
    two = LinearMap.from_matrix([[2]])
    assert verify_isoclinism(ext, ext, IsoclinismWitness(LinearMap.identity(1), LinearMap.identity(2)))
    assert not verify_isoclinism(ext, ext, IsoclinismWitness(two, LinearMap.identity(2)))
    four = LinearMap.from_matrix([[4, 0], [0, 4]])
    assert verify_isoclinism(ext, ext, IsoclinismWitness(two, four))
    c = stem_cover(a2()).extension
    assert verify_isoclinism(c, c, IsoclinismWitness(LinearMap.identity(2), LinearMap.identity(3)))


def test_hopfian_examples():
    for g, scale in ((abelian(1), 2), (a2(), 3)):
        sc = stem_cover(g)
        d = sc.cover.dim
        # x ↦ s·x extends to the graded automorphism x^i ↦ s^i x^i
        eta = LinearMap.from_matrix([[scale ** (i + 1) if i == j else 0 for j in range(d)] for i in range(d)])
        assert hopfian_check(sc, sc, eta)


@pytest.mark.parametrize("g", [abelian(1), a2(), abelian(2), cyclic(3)], ids=["ab1", "A2", "ab2", "C3"])
def test_capable_examples(g):
    assert precise_lie_center(g).is_zero()
    rep = is_lie_capable(g)
    assert rep.capable and rep.consistent


@pytest.mark.parametrize("e", SUPPORTED, ids=[e.id for e in SUPPORTED])
def test_precise_center_scan(e):
    g = instantiate(e)
    z = precise_lie_center(g)
    assert z.dim == NONCAPABLE.get(e.id, 0)
    assert z <= centers(g).lie_center.space
    assert z == precise_lie_center_from_presentation(g)


def test_equivalence_examples():
    g = a2()
    r = capability_equivalences(g, [(1, 0)])
    assert (r.a_holds, r.b_holds, r.c_holds) == (False, False, False)
    r = capability_equivalences(g, g.zero_space())
    assert r.a_holds and r.b_holds and r.c_holds
    g = instantiate(get_entry("3.1"))
    r = capability_equivalences(g, precise_lie_center(g))
    assert r.a_holds and r.b_holds and r.c_holds
    with pytest.raises(ValueError):
        capability_equivalences(a2(), [(0, 1)])


@pytest.mark.parametrize("eid", ["3.1", "3.3", "4.10", "4.22", "4.15"])
def test_equivalences_agree_on_all_center_lines(eid):
    g = instantiate(get_entry(eid))
    z = centers(g).lie_center.space
    cands = [g.zero_space(), z, precise_lie_center(g)] + [ideal_closure(g, [r]).space for r in z.rows]
    for n in cands:
        assert capability_equivalences(g, n).agree
