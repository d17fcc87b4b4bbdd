"""
Schur Lie-multipliers from truncated free presentations
=======================================================

A nilpotent algebra of class c is presented by a free Leibniz algebra cut off
at words of length 2c + 1.  The multiplier, the four-term exact sequence and
the dimension bounds all live inside that finite-dimensional picture.
"""

from leibal import LeibnizAlgebra, baer_ladder, present, schur_lie_multiplier
from leibal.multiplier import four_term_sequence

a2 = LeibnizAlgebra.from_table(2, [(2, 2, 1, 1)])

# x -> a2, x^2 -> a1, longer words -> 0
P = present(a2, 5)
print("free basis:", [P.free.word_label(i) for i in range(P.free.dim)])
print("kernel dim:", P.kernel.dim)

m = schur_lie_multiplier(a2, stabilize=True)
print("M(A2): dim", m.dim, "spanned by", m.describe(), "at level", m.level_used)

for n in (1, 2, 3):
    ab = LeibnizAlgebra(n, {})
    print(f"M(abelian {n}) = {schur_lie_multiplier(ab).dim}")

# 0 -> t1 -> M(g) -> M(g/n) -> t4 -> 0 for n = <a1>
rep = four_term_sequence(a2, [(1, 0)])
print("four-term dims:", rep.dims, "exact:", rep.exact)
print("sigma matrix:", [[str(x) for x in row] for row in rep.maps["sigma"]])

r = baer_ladder(a2, [(1, 0)])
print("central bound:", r.central_lhs, "<=", r.central_rhs)
