"""
The table of small Lie-nilpotent Leibniz algebras
=================================================

Load the built-in table, check every row, and look at the Lie-central series
of a few algebras.  Run with ``python demos/01_table_and_series.py``.
"""

from leibal import (
    centers,
    entries,
    get_entry,
    instantiate,
    lie_central_series,
    remark_algebra,
    remark_normalizer,
    subspace_report,
    verify_entry,
)

# every row at its default parameter sample
bad = [e.id for e in entries() if not verify_entry(e).ok]
print(f"{len(entries())} rows checked, failures: {bad or 'none'}")

# the 3-dimensional class-3 row, [a1,a3]=a2 and [a3,a3]=a1
g = instantiate(get_entry("3.5"))
print(g.describe())
lower, upper = lie_central_series(g)
print("lower series dims:", [t.dim for t in lower.terms])
print("upper series dims:", [t.dim for t in upper.terms])
print("Lie-center:", subspace_report(g.labels, centers(g).lie_center.space)["basis"])

# parameters are exact rationals; excluded values are refused
row = get_entry("4.17")
print(row.id, [(p.name, p.admissible) for p in row.parameters])
print("alpha = 5/3 ok:", verify_entry(row, {"alpha": "5/3"}).ok)

# a Lie-normalizer that is not a subalgebra
r = remark_algebra()
N, (i, j, value) = remark_normalizer()
print("N(<e1>) =", subspace_report(r.labels, N)["basis"])
print(f"[{r.labels[i]},{r.labels[j]}] =", [str(x) for x in value], "lies outside it")
