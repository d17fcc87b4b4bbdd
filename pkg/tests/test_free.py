import oracle
import pytest
from conftest import a2, abelian
from hypothesis import given, settings
from hypothesis import strategies as st

from leibal import (
    GeneratorSetError,
    LeibnizAlgebra,
    TruncatedFreeAlgebra,
    UnsupportedInputError,
    free_bracket,
    minimal_generators,
    present,
    word_bracket,
)


def words(n, max_len):
    return st.lists(st.integers(0, n - 1), min_size=1, max_size=max_len).map(tuple)


def test_bracket_examples():
    F = TruncatedFreeAlgebra(1, 3)
    assert free_bracket(F, (0,), (0,)) == F.word_vector((0, 0))
    assert free_bracket(F, (0,), (0, 0)) == {}
    F2 = TruncatedFreeAlgebra(2, 3)
    xy = free_bracket(F2, (0,), (0, 1))
    assert xy == {F2.index[(0, 0, 1)]: 1, F2.index[(0, 1, 0)]: -1}
    assert free_bracket(F2, (0, 1), (1, 0)) == {}


@settings(max_examples=300, deadline=None)
@given(words(3, 4), words(3, 4))
def test_bracket_matches_closed_form(u, v):
    assert dict(word_bracket(u, v)) == oracle.closed_bracket(u, v)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 3), st.data())
def test_leibniz_identity_on_words(n, data):
    L = 4
    F = TruncatedFreeAlgebra(n, L)
    x, y, z = (data.draw(words(n, L)) for _ in range(3))
    lhs = free_bracket(F, x, free_bracket(F, y, z))
    a = free_bracket(F, free_bracket(F, x, y), z)
    b = free_bracket(F, free_bracket(F, x, z), y)
    rhs = {k: a.get(k, 0) - b.get(k, 0) for k in set(a) | set(b)}
    assert lhs == {k: c for k, c in rhs.items() if c}


@pytest.mark.parametrize("n,L", [(1, 5), (2, 4), (3, 3)])
def test_dimension_and_grading(n, L):
    F = TruncatedFreeAlgebra(n, L)
    assert F.dim == sum(n**d for d in range(1, L + 1))
    for i in range(F.dim):
        for j in range(F.dim):
            for k in F.bracket_words(i, j):
                assert F.degrees[k] == F.degrees[i] + F.degrees[j]


def test_one_generator_regression():
    F = TruncatedFreeAlgebra(1, 6)
    for a in range(1, 6):
        assert free_bracket(F, (0,) * a, (0,)) == F.word_vector((0,) * (a + 1))
        for b in range(2, 6 - a + 1):
            assert free_bracket(F, (0,) * a, (0,) * b) == {}


def test_minimal_generators():
    assert minimal_generators(a2()) == [{1: 1}]
    assert len(minimal_generators(abelian(3))) == 3
    c4 = LeibnizAlgebra.from_table(4, [(1, 1, 2, 1), (1, 2, 3, 1), (1, 3, 4, 1)])
    assert minimal_generators(c4) == [{0: 1}]
    # [a2,a2]=a2 is not nilpotent
    with pytest.raises(UnsupportedInputError):
        minimal_generators(LeibnizAlgebra.from_table(2, [(2, 2, 2, 1)]))


def test_present_examples():
    P = present(a2(), 5)
    assert P.free.dim == 5
    F = P.free
    assert P.kernel == F.degree_space(3)
    assert present(abelian(1), 3).kernel == TruncatedFreeAlgebra(1, 3).degree_space(2)
    P = present(abelian(2), 2)
    assert P.kernel == P.free.degree_space(2) and P.kernel.dim == 4
    with pytest.raises(GeneratorSetError):
        present(a2(), 3, generators=[(1, 0)])
    with pytest.raises(ValueError):
        present(a2(), 1)


def test_present_zero_algebra():
    P = present(LeibnizAlgebra(0, {}), 1)
    assert P.free.dim == 0 and P.kernel.dim == 0


@pytest.mark.parametrize("g", [a2(), abelian(2), LeibnizAlgebra.from_table(3, [(1, 3, 2, 1), (3, 3, 1, 1)])])
def test_presentation_properties(g):
    P = present(g, 4)
    assert P.kernel.dim == P.free.dim - g.dim
    c = P.nilpotency_class
    assert P.free.degree_space(c + 1) <= P.kernel
    s = P.section()
    assert P.evaluation.compose(s).matrix() == [[int(i == j) for j in range(g.dim)] for i in range(g.dim)]
