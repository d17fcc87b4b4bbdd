from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibal.linalg import (
    GF,
    QQ,
    CharacteristicTwoError,
    ContainmentError,
    DimensionMismatchError,
    LinalgError,
    LinearMap,
    QuotientSpace,
    Subspace,
    meet_join,
    parse_rational,
    quotient_basis,
    solve_combination,
    solve_membership_conditions,
    span,
)


def test_span_examples():
    assert span([(1, 0), (0, 1)]).dim == 2
    s = span([(2, 4)])
    assert s.basis == [(1, 2)]
    assert span([], ambient_dim=3).dim == 0


def test_span_mixed_ambient_rejected():
    with pytest.raises(DimensionMismatchError):
        span([(1, 0), (1, 0, 0)])


def test_meet_join_examples():
    a, b = span([(1, 0)]), span([(0, 1)])
    s, i = meet_join(a, b)
    assert (s.dim, i.dim) == (2, 0)
    s, i = meet_join(a, a)
    assert s == a and i == a
    s, i = meet_join(span([(1, 0), (0, 1)]), span([(1, 1)]))
    assert i == span([(1, 1)])


def test_meet_join_ambient_mismatch():
    with pytest.raises(DimensionMismatchError):
        meet_join(span([(1, 0)]), span([(1, 0, 0)]))


def test_quotient_basis_examples():
    full2 = Subspace.full(2)
    assert quotient_basis(full2, span([(1, 0)])) == [(0, 1)]
    assert quotient_basis(full2, full2) == []
    reps = quotient_basis(Subspace.full(3), span([(1, 1, 0)]))
    assert len(reps) == 2
    with pytest.raises(ContainmentError):
        quotient_basis(span([(1, 0)]), span([(0, 1)]))


def test_solve_membership_examples():
    zero = LinearMap.from_matrix([[0, 0], [0, 0]])
    assert solve_membership_conditions([zero], Subspace.zero(2)).dim == 2
    assert solve_membership_conditions([LinearMap.identity(2)], Subspace.zero(2)).dim == 0
    shift = LinearMap.from_matrix([[0, 1], [0, 0]])
    assert solve_membership_conditions([shift], span([(1, 0)])).is_full()


def test_parse_rational():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    for bad in ("1/0", "0.5", "1e3", "", "a"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_prime_field():
    F = GF(7)
    assert F(3) * F(5) == F(1)
    assert F("1/2") * 2 == F.one
    assert F(Fraction(3, 4)) / F(3) == F("1/4")
    with pytest.raises(CharacteristicTwoError):
        GF(2)
    with pytest.raises(LinalgError):
        GF(9)
    with pytest.raises(ZeroDivisionError):
        F("1/7")


def test_quotient_space_roundtrip():
    whole = Subspace.full(3)
    sub = span([(1, 1, 0)])
    q = QuotientSpace(whole, sub)
    for coords in ((1, 0), (0, 1), (2, -3)):
        v = q.lift(coords)
        assert tuple(q.coords(v)) == tuple(QQ(c) for c in coords)


def test_solve_combination():
    cols = [{0: QQ(1), 1: QQ(1)}, {1: QQ(1)}]
    x = solve_combination(cols, {0: QQ(2), 1: QQ(5)})
    assert x == {0: 2, 1: 3}
    assert solve_combination([{0: QQ(1)}], {1: QQ(1)}) is None


def test_linear_map_rank_nullity():
    m = LinearMap.from_matrix([[1, 2, 3], [2, 4, 6]])
    assert m.rank == 1 and m.kernel().dim == 2
    assert m.compose(LinearMap.identity(3)).matrix() == m.matrix()


small = st.integers(min_value=-3, max_value=3)


def vectors(n):
    return st.lists(st.lists(small, min_size=n, max_size=n).map(tuple), max_size=n + 1)


@st.composite
def pair_of_spaces(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    return n, draw(vectors(n)), draw(vectors(n))


@settings(max_examples=200, deadline=None)
@given(pair_of_spaces())
def test_modular_law(data):
    n, a, b = data
    A, B = span(a, n), span(b, n)
    s, i = meet_join(A, B)
    assert s.dim + i.dim == A.dim + B.dim
    assert A <= s and B <= s and i <= A and i <= B


@settings(max_examples=100, deadline=None)
@given(pair_of_spaces())
def test_canonical_form(data):
    n, a, _ = data
    A = span(a, n)
    assert span(A.basis, n) == A
    assert list(A.pivot_cols) == sorted(set(A.pivot_cols))
    basis = A.basis
    for i, p in enumerate(A.pivot_cols):
        assert basis[i][p] == 1
        assert all(basis[j][p] == 0 for j in range(len(basis)) if j != i)


@settings(max_examples=100, deadline=None)
@given(pair_of_spaces())
def test_prime_field_agrees_on_unit_minors(data):
    # minors of 8x8 matrices with entries in {-3..3} stay below 3e7 (Hadamard), so ranks survive mod p
    n, a, b = data
    F = GF(2_147_483_647)
    assert span(a, n).dim == span(a, n, F).dim
    _, iq = meet_join(span(a, n), span(b, n))
    _, ip = meet_join(span(a, n, F), span(b, n, F))
    assert iq.dim == ip.dim
