"""
Checking classes by restriction
===============================

A class supported on an orbit closure restricts to zero at every other
orbit of no larger codimension, and to the normal Euler class at the orbit
itself. Both sides are computable, so every class can be checked.
"""

from qcl import Quiver, canonical_minimal, codim, enumerate_orbits, euler_class_ext, orbit_class, restriction

q = Quiver.parse("<>")
dims = (1, 2, 1)
orbits = enumerate_orbits(q, dims)

# Restriction matrix: rows are classes, columns are orbits ordered by codimension.
orbits.sort(key=lambda mu: codim(q, mu))
for mu in orbits:
    f = orbit_class(q, dims, mu).poly
    row = []
    for eta in orbits:
        d = canonical_minimal(q, dims, eta)
        r = restriction(f, d)
        row.append("0" if r.is_zero() else "*")
    print(f"{str(mu):32} codim={codim(q, mu)}  {' '.join(row)}")

# The diagonal entries are Euler classes, one linear factor per Ext dimension.
mu = orbits[2]
d = canonical_minimal(q, dims, mu)
print(restriction(orbit_class(q, dims, mu).poly, d).to_text())
print(euler_class_ext(q, mu, d).to_text())


# The whole suite for one dimension vector, as the CLI runs it.
from qcl.classes import verify_all

reports = verify_all(q, dims)
print(sum(r["pass"] for r in reports), "of", len(reports), "orbits pass")
