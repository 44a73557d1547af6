"""
A K-theoretic candidate
=======================

Replacing Schubert polynomials by Grothendieck polynomials and summing over
a larger set of diagrams with alternating signs gives a Laurent polynomial.
Two things can be tested: it should be symmetric in each column, and its
lowest-degree part at x = 1 + t should be the cohomology class.
"""

from qcl import Orbit, Quiver, k_class, k_diagrams, orbit_class
from qcl.classes import is_separately_symmetric, verify_k_lowest_degree

q = Quiver.parse(">>")
dims = (1, 2, 1)
mu = Orbit(2, {(0, 1): 1, (1, 2): 1})

# Two minimal diagrams plus one with a doubled crossing, which enters with a minus sign.
for d in k_diagrams(q, dims, mu):
    print(d.perm_string(), d.length)

g = k_class(q, dims, mu)
print(g.to_text())
print(is_separately_symmetric(g, dims))

# Cohomology class for comparison.
print(orbit_class(q, dims, mu).poly.to_text())
print(verify_k_lowest_degree(q, dims, mu))
