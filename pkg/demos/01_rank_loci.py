"""
Rank loci of a single map
=========================

With one arrow, orbits are just ranks, and the orbit class is the
classical determinantal class of maps of rank at most r.
"""

# A quiver is a string of arrow directions. One rightward arrow V0 -> V1.
from qcl import Orbit, Quiver, codim, enumerate_orbits, orbit_class

q = Quiver.parse(">")
dims = (3, 2)

# Orbits are s-tables: s01 counts strands through both columns (the rank),
# s00 and s11 count the leftover dots.
for mu in enumerate_orbits(q, dims):
    print(mu, " codim", codim(q, mu))


# The rank <= 1 locus in Hom(C^3, C^2) has codimension (3-1)*(2-1) = 2.
rank1 = Orbit(1, {(0, 0): 2, (0, 1): 1, (1, 1): 1})
cls = orbit_class(q, dims, rank1)
print(cls.codim)
print(cls.poly.to_text())


# It is symmetric in each column's variables separately, as a class pulled
# back from BGL(3) x BGL(2) must be.
from qcl.classes import is_separately_symmetric

print(is_separately_symmetric(cls.poly, dims))


# LaTeX for pasting into notes.
print(cls.poly.to_latex())
