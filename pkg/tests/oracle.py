"""Independent brute-force oracle for truncated free Leibniz algebras.

Nothing here imports the package.  The free bracket uses the closed form

    [u, v1 v2 ... vm] = sum over R ⊆ {2..m} of (-1)^|R| u · rev(v_R) · v1 · v_{not R}

(letters of R in decreasing position, the rest in increasing position), and all
ranks come from dense Gaussian elimination over ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product


def closed_bracket(u: tuple, v: tuple) -> dict[tuple, int]:
    m = len(v)
    out: dict[tuple, int] = {}
    rest = list(range(1, m))
    for size in range(len(rest) + 1):
        for R in combinations(rest, size):
            keep = [p for p in rest if p not in R]
            w = u + tuple(v[p] for p in reversed(R)) + (v[0],) + tuple(v[p] for p in keep)
            out[w] = out.get(w, 0) + (-1) ** size
    return {w: c for w, c in out.items() if c}


def rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    ncol = len(rows[0])
    r = 0
    for col in range(ncol):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col] / p
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def nullspace(rows: list[list[Fraction]], ncol: int) -> list[list[Fraction]]:
    """Basis of ``{x : rows · x = 0}``."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncol):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        m[r] = [a / p for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncol) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncol
        x[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -m[i][fc]
        basis.append(x)
    return basis


class Algebra:
    """Dense structure constants ``table[i][j]`` = vector of ``[e_i, e_j]``."""

    def __init__(self, dim: int, products: dict[tuple[int, int], dict[int, int]]):
        self.dim = dim
        self.table = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in products.items():
            for k, c in v.items():
                self.table[i][j][k] += Fraction(c)

    def br(self, a, b):
        out = [Fraction(0)] * self.dim
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    for k, c in enumerate(self.table[i][j]):
                        if c:
                            out[k] += x * y * c
        return out


def ordinary_class(g: Algebra) -> int:
    """Smallest ``c`` with every left-normed product of ``c + 1`` basis vectors zero."""
    e = [[Fraction(int(i == j)) for j in range(g.dim)] for i in range(g.dim)]
    layer = [r for r in e]
    c = 0
    while any(any(r) for r in layer):
        c += 1
        layer = [g.br(a, b) for a in layer for b in e]
        if c > g.dim + 1:
            raise ValueError("not nilpotent")
    return c


def generators(g: Algebra) -> list[int]:
    """Basis indices completing ``g² = span of all products`` greedily."""
    sq = [g.table[i][j] for i in range(g.dim) for j in range(g.dim)]
    chosen, base = [], rank(sq)
    for i in range(g.dim):
        e = [Fraction(int(i == j)) for j in range(g.dim)]
        trial = sq + [[Fraction(int(t == j)) for j in range(g.dim)] for t in chosen] + [e]
        if rank(trial) > base + len(chosen):
            chosen.append(i)
    return chosen


def multiplier_dim(g: Algebra, level: int) -> int:
    """``dim (r ∩ [F,F]_Lie) / [F,r]_Lie`` in the free algebra truncated at ``level``."""
    gens = generators(g)
    n = len(gens)
    words = [w for d in range(1, level + 1) for w in product(range(n), repeat=d)]
    idx = {w: i for i, w in enumerate(words)}
    N = len(words)
    c = ordinary_class(g)

    def ev(w):
        v = [Fraction(int(gens[w[0]] == j)) for j in range(g.dim)]
        for letter in w[1:]:
            v = g.br(v, [Fraction(int(gens[letter] == j)) for j in range(g.dim)])
        return v

    def vec(d: dict):
        out = [Fraction(0)] * N
        for w, a in d.items():
            if len(w) <= level:
                out[idx[w]] += a
        return out

    def bracket(a: dict, b: dict) -> dict:
        out: dict = {}
        for u, x in a.items():
            for v, y in b.items():
                if len(u) + len(v) > level:
                    continue
                for w, k in closed_bracket(u, v).items():
                    out[w] = out.get(w, 0) + x * y * k
        return out

    def sym(a: dict, b: dict) -> list[Fraction]:
        s = bracket(a, b)
        for w, k in bracket(b, a).items():
            s[w] = s.get(w, 0) + k
        return vec(s)

    evals = {w: ev(w) for w in words}
    Y = [sym({u: 1}, {v: 1}) for u in words for v in words if len(u) + len(v) <= level]
    # rank of eval restricted to Y: compose the dense vectors with evaluation
    evY = []
    for y in Y:
        img = [Fraction(0)] * g.dim
        for i, a in enumerate(y):
            if a:
                img = [s + a * t for s, t in zip(img, evals[words[i]])]
        evY.append(img)
    dim_rY = rank(Y) - rank(evY)
    low = [w for w in words if len(w) <= c]
    ev_cols = [[evals[w][k] for w in low] for k in range(g.dim)]
    r_low = [{low[i]: a for i, a in enumerate(x) if a} for x in nullspace(ev_cols, len(low))]
    r_high = [{w: 1} for w in words if len(w) > c]
    FR = [sym({u: 1}, k) for u in words for k in r_low + r_high]
    return dim_rY - rank(FR)


def cyclic(k: int) -> Algebra:
    """``[b, b^i] = 0``, ``[b^i, b] = b^{i+1}``: the ``k``-dim one-generated algebra."""
    return Algebra(k, {(i, 0): {i + 1: 1} for i in range(k - 1)})


def abelian(n: int) -> Algebra:
    return Algebra(n, {})
