"""
Lie-stem covers and capability
==============================

Build covers as quotients of the truncated free algebra, compare covers from
different complements, and decide which table rows are Lie-capable.
"""

from leibal import (
    LeibnizAlgebra,
    capability_equivalences,
    classify_extension,
    covers_isoclinic_check,
    entries,
    extension_class_check,
    instantiate,
    is_lie_capable,
    precise_lie_center,
    stem_cover,
)

a2 = LeibnizAlgebra.from_table(2, [(2, 2, 1, 1)])

sc = stem_cover(a2)
print("cover of A2:", sc.cover.describe())
print("flags:", classify_extension(sc.extension))

# the cover has Lie-nilpotency class 3, which the class-k criterion detects
for k in (2, 3):
    chk = extension_class_check(sc.extension, k)
    print(f"k={k}: theta on ker tau has dim {chk.theta_on_kernel.dim}, class <= k: {chk.verdict}")

# seeded complements give different covers with the same invariants
ab2 = LeibnizAlgebra(2, {})
for seed in (None, 1):
    print(f"seed {seed}:", stem_cover(ab2, seed=seed).cover.describe())
print(covers_isoclinic_check(ab2, 3, 1))

print("A2 capable:", is_lie_capable(a2).capable)

# scan the table for rows whose precise Lie-center is nonzero
for e in entries():
    if e.multiplier_unsupported:
        continue
    g = instantiate(e)
    z = precise_lie_center(g)
    if z.dim:
        eq = capability_equivalences(g, z)
        print(e.id, "Z* dim", z.dim, "a,b,c:", eq.a_holds, eq.b_holds, eq.c_holds)
