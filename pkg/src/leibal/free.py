"""Truncated free Leibniz algebras and free presentations of nilpotent algebras.

The free Leibniz algebra on ``x_1..x_n`` is realized on tensor words: bracketing
with a generator on the right is concatenation, and brackets with longer right
operands are expanded through the Leibniz identity

    [u, w·x] = [[u, w], x] - [[u, x], w]

which terminates because the right operand gets shorter.  Truncating at level
``L`` sets every word longer than ``L`` to zero; that is a quotient by a graded
ideal, so the Leibniz identity survives exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .algebra import LeibnizAlgebra, lower_central_series
from .linalg import QQ, LinearMap, QuotientSpace, SparseVec, Subspace, _Echelon, add_scaled, preimage_within

__all__ = [
    "Word",
    "UnsupportedInputError",
    "GeneratorSetError",
    "TruncatedFreeAlgebra",
    "Presentation",
    "word_bracket",
    "free_bracket",
    "minimal_generators",
    "present",
]

# A word is a tuple of 0-based generator indices; its degree is its length.
Word = tuple


class UnsupportedInputError(ValueError):
    """The input lies outside what the free-presentation machinery can handle."""


class GeneratorSetError(ValueError):
    """The chosen generator images do not generate the target algebra."""


@lru_cache(maxsize=None)
def word_bracket(u: Word, v: Word) -> tuple[tuple[Word, int], ...]:
    """Untruncated bracket of two words as sorted ``(word, integer)`` pairs.

    The coefficients are integers and do not depend on the truncation level,
    so a single process-wide cache serves every algebra.
    """
    if len(v) == 1:
        return ((u + v, 1),)
    w, x = v[:-1], v[-1:]
    acc: dict[Word, int] = {}
    for t, c in word_bracket(u, w):
        acc[t + x] = acc.get(t + x, 0) + c
    for t, c in word_bracket(u + x, w):
        acc[t] = acc.get(t, 0) - c
    return tuple(sorted((t, c) for t, c in acc.items() if c))


def _graded_words(n: int, level: int) -> list[Word]:
    words = []
    for d in range(1, level + 1):
        words.extend(product(range(n), repeat=d))
    return words


class TruncatedFreeAlgebra:
    """Free Leibniz algebra on ``n`` generators modulo words longer than ``level``.

    Basis words are ordered by degree, then lexicographically, which fixes every
    echelon choice made downstream.
    """

    def __init__(self, n_generators: int, level: int, field=QQ):
        if n_generators < 0 or level < 0:
            raise ValueError("generator count and level must be non-negative")
        self.n_generators = n_generators
        self.level = level
        self.field = field
        self.basis: list[Word] = _graded_words(n_generators, level) if n_generators else []
        self.index: dict[Word, int] = {w: i for i, w in enumerate(self.basis)}
        self.degrees: list[int] = [len(w) for w in self.basis]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def word_vector(self, w: Word) -> SparseVec:
        return {self.index[tuple(w)]: self.field.one}

    def bracket_words(self, i: int, j: int) -> SparseVec:
        u, v = self.basis[i], self.basis[j]
        if len(u) + len(v) > self.level:
            return {}
        f = self.field
        return {self.index[t]: f(c) for t, c in word_bracket(u, v)}

    def bracket_sparse(self, a: SparseVec, b: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for i, x in a.items():
            for j, y in b.items():
                if self.degrees[i] + self.degrees[j] > self.level:
                    continue
                prod = self.bracket_words(i, j)
                if prod:
                    add_scaled(out, prod, x * y)
        return out

    def sym(self, a: SparseVec, b: SparseVec) -> SparseVec:
        out = self.bracket_sparse(a, b)
        add_scaled(out, self.bracket_sparse(b, a), self.field.one)
        return out

    def degree_space(self, lo: int, hi: int | None = None) -> Subspace:
        """Span of the words with ``lo <= degree <= hi``."""
        hi = self.level if hi is None else hi
        one = self.field.one
        rows = [(i, {i: one}) for i, d in enumerate(self.degrees) if lo <= d <= hi]
        return Subspace(self.dim, self.field, rows)

    def words_of_degree(self, d: int) -> range:
        if d < 1 or d > self.level or not self.n_generators:
            return range(0)
        n = self.n_generators
        start = sum(n**k for k in range(1, d))
        return range(start, start + n**d)

    def word_label(self, i: int) -> str:
        names = _generator_names(self.n_generators)
        out, w = [], self.basis[i]
        k = 0
        while k < len(w):
            m = k
            while m < len(w) and w[m] == w[k]:
                m += 1
            out.append(names[w[k]] + (f"^{m - k}" if m - k > 1 else ""))
            k = m
        return "".join(out)

    def describe_vector(self, v: SparseVec) -> str:
        if not v:
            return "0"
        parts = []
        for i in sorted(v):
            c = v[i]
            coef = "" if c == 1 else "-" if c == -1 else f"{self.field.to_text(c)}*"
            parts.append(f"{coef}{self.word_label(i)}")
        return " + ".join(parts).replace("+ -", "- ")

    def as_algebra(self) -> LeibnizAlgebra:
        """The full structure-constant table (only sensible for small truncations)."""
        prods = {}
        for i in range(self.dim):
            for j in range(self.dim):
                p = self.bracket_words(i, j)
                if p:
                    prods[(i, j)] = p
        labels = [self.word_label(i) for i in range(self.dim)]
        return LeibnizAlgebra(self.dim, prods, labels=labels, field=self.field)

    def __repr__(self):
        return f"TruncatedFreeAlgebra(n={self.n_generators}, level={self.level}, dim={self.dim})"


def _generator_names(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


def free_bracket(F: TruncatedFreeAlgebra, u, v) -> SparseVec:
    """Bracket of two elements given as words, word lists, or sparse vectors."""
    return F.bracket_sparse(_as_element(F, u), _as_element(F, v))


def _as_element(F: TruncatedFreeAlgebra, x) -> SparseVec:
    if isinstance(x, dict):
        return x
    if isinstance(x, tuple) and all(isinstance(c, int) for c in x):
        if len(x) > F.level:
            return {}
        return F.word_vector(x)
    raise TypeError("expected a word tuple or a sparse vector")


def _require_nilpotent(g: LeibnizAlgebra) -> list[Subspace]:
    series = lower_central_series(g)
    if not series[-1].is_zero():
        raise UnsupportedInputError(
            f"algebra is not nilpotent: lower central series stabilizes at a term of dimension {series[-1].dim}"
        )
    return series


def minimal_generators(g: LeibnizAlgebra) -> list[SparseVec]:
    """Lifts of a basis of ``g / γ_2(g)``, a minimal generating set."""
    series = _require_nilpotent(g)
    gamma2 = series[1] if len(series) > 1 else g.zero_space()
    return QuotientSpace(g.full(), gamma2).representatives


@dataclass
class Presentation:
    """``F̄ → g`` sending ``x_i`` to ``generator_images[i]``, with kernel ``r̄``."""

    free: TruncatedFreeAlgebra
    target: LeibnizAlgebra
    generator_images: list[SparseVec]
    evaluation: LinearMap
    kernel: Subspace
    nilpotency_class: int

    @property
    def level(self) -> int:
        return self.free.level

    def preimage(self, space) -> Subspace:
        """``{f ∈ F̄ : eval(f) ∈ space}``."""
        return preimage_within(self.free.degree_space(1), self.evaluation, space)

    def section(self) -> LinearMap:
        """A linear section ``g → F̄`` of the evaluation map."""
        F, g = self.free, self.target
        one = g.field.one
        ech = _Echelon(g.field, track=True)
        for j in range(F.dim):
            if self.evaluation.columns[j]:
                ech.insert(self.evaluation.columns[j], {j: one})
            if len(ech) == g.dim:
                break
        lifts = []
        for i in range(g.dim):
            tag: SparseVec = {}
            assert not ech.reduce({i: one}, tag)
            lifts.append({k: -c for k, c in tag.items()})
        return LinearMap(g.dim, F.dim, tuple(lifts), g.field)


def _evaluate_words(F: TruncatedFreeAlgebra, g: LeibnizAlgebra, images: list[SparseVec]) -> list[SparseVec]:
    values: list[SparseVec] = []
    for w in F.basis:
        if len(w) == 1:
            values.append(dict(images[w[0]]))
        else:
            prefix = values[F.index[w[:-1]]]
            values.append(g.bracket_sparse(prefix, images[w[-1]]) if prefix else {})
    return values


def present(g: LeibnizAlgebra, level: int, generators=None) -> Presentation:
    """Free presentation of a nilpotent ``g`` truncated at ``level``.

    The word ``x_{i1}...x_{id}`` evaluates to the left-normed bracket of the
    generator images.  The evaluation is checked to be a surjective
    homomorphism before the kernel is returned.
    """
    series = _require_nilpotent(g)
    c = len(series) - 1 if g.dim else 0
    if level < c:
        raise ValueError(f"level {level} is below the nilpotency class {c}")
    if generators is None:
        images = minimal_generators(g)
    else:
        images = [_vec(g, v) for v in generators]
    F = TruncatedFreeAlgebra(len(images), level, g.field)
    values = _evaluate_words(F, g, images)
    ev = LinearMap(F.dim, g.dim, tuple(values), g.field)
    if ev.image().dim != g.dim:
        raise GeneratorSetError("the generator images do not generate the algebra")
    _check_evaluation(F, g, values)
    kernel = ev.kernel()
    return Presentation(F, g, images, ev, kernel, c)


def _vec(g: LeibnizAlgebra, v) -> SparseVec:
    if isinstance(v, dict):
        return {k: g.field(a) for k, a in v.items() if a}
    if len(v) != g.dim:
        raise ValueError("generator image has the wrong length")
    return {i: g.field(a) for i, a in enumerate(v) if a}


def _check_evaluation(F: TruncatedFreeAlgebra, g: LeibnizAlgebra, values: list[SparseVec]) -> None:
    for i in range(F.dim):
        for j in range(F.dim):
            inside = F.degrees[i] + F.degrees[j] <= F.level
            if not inside and not (values[i] and values[j]):
                continue
            lhs: SparseVec = {}
            if inside:
                for k, a in F.bracket_words(i, j).items():
                    if values[k]:
                        add_scaled(lhs, values[k], a)
            rhs = g.bracket_sparse(values[i], values[j]) if values[i] and values[j] else {}
            if lhs != rhs:
                raise AssertionError(f"evaluation is not a homomorphism on ({F.word_label(i)}, {F.word_label(j)})")
