"""
Lace diagrams and permutation sequences
=======================================
"""

from qcl import LaceDiagram, Perm, Quiver, canonical_minimal, codim, minimal_diagrams

# A four-arrow quiver with one leftward arrow.
q = Quiver.parse("><>>")
dims = (3, 4, 4, 3, 3)

# Any diagram can be named by one partial permutation per arrow.
ws = [Perm.parse(w) for w in ("12453", "536412", "13524", "24513")]
d = LaceDiagram.from_perms(q, dims, ws)

print(d.render())
print("length", d.length)

# Its strands give the orbit.
mu = d.orbit()
print(mu)
print("codim", codim(q, mu))

# The diagram has 21 crossings but the orbit only needs 14, so it is far
# from minimal. Sorting strands by the stacking order gives a minimal one.
c = canonical_minimal(q, dims, mu)
print(c.perm_string(), c.length)

# Bottom alignment across leftward arrows reads closer to the usual pictures.
print(c.render("bottom"))

# All minimal diagrams, found by swapping adjacent dots without adding crossings.
for m in minimal_diagrams(q, dims, mu):
    print(" ", m.perm_string())

# Each diagram's strands get variables b1, b2, ... in (start, end, top dot) order.
for k, s in enumerate(c.strands, 1):
    print(f"b{k}", s.interval, s.dots)
