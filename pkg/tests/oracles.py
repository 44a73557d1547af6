"""Independent reference computations, written directly in sympy."""

import sympy

from qcl.polynomial import Poly


def to_sympy(f: Poly):
    expr = sympy.Integer(0)
    for mono, c in f:
        term = sympy.Integer(c)
        for var, e in mono:
            term *= sympy.Symbol(str(var)) ** e
        expr += term
    return sympy.expand(expr)


def giambelli(p, q, r):
    """Degeneracy class of rank <= r maps from a rank-p to a rank-q bundle.

    Determinant of Chern classes of ``E1 - E0`` in the column variables
    ``x0_*`` (source, p of them) and ``x1_*`` (target, q of them).
    """
    t = sympy.Symbol("t")
    src = [sympy.Symbol(f"x0_{j}") for j in range(1, p + 1)]
    tgt = [sympy.Symbol(f"x1_{j}") for j in range(1, q + 1)]
    size, shift = p - r, q - r
    top = shift + size
    gen = sympy.prod([1 + t * v for v in tgt]) / sympy.prod([1 + t * v for v in src])
    ser = sympy.series(gen, t, 0, top + 1).removeO()
    c = [sympy.expand(ser.coeff(t, k)) for k in range(top + 1)]

    def entry(i, j):
        k = shift + j - i
        return c[k] if 0 <= k <= top else 0

    if size <= 0:
        return sympy.Integer(1)
    return sympy.expand(sympy.Matrix(size, size, entry).det())
