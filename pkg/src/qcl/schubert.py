"""
Double Schubert and double Grothendieck polynomials.

Both families live in abstract slot variables ``x1..xm`` and ``y1..ym`` and
are computed by descending from the longest element ``w0`` of ``S_m``:

* ``S_{w0} = prod_{i+j<=m} (x_i - y_j)`` and ``S_w = d_i S_{w s_i}``,
* ``G_{w0} = prod_{i+j<=m} (1 - y_i/x_j)`` and ``G_w = pi_i G_{w s_i}``,

where ``i`` is the leftmost ascent of ``w``, ``d_i`` the divided difference
in ``x_i, x_{i+1}`` and ``pi_i f = d_i(x_i f)``.  Results are memoized per
``(w, m, family)``.
"""

from __future__ import annotations

import os
import threading

from .permutation import Perm
from .polynomial import Poly, divided_difference, slot_x, slot_y

SCHUBERT = "schubert"
GROTHENDIECK = "grothendieck"

_cache: dict[tuple[Perm, int, str], Poly] = {}
_lock = threading.Lock()


def _debug() -> bool:
    return os.environ.get("QCL_CACHE_DEBUG") == "1"


def clear_cache() -> None:
    with _lock:
        _cache.clear()


def cache_size() -> int:
    return len(_cache)


def _ambient(w: Perm, m: int | None) -> int:
    if m is None:
        return max(w.size, 1)
    if m < w.size:
        raise ValueError(f"{w} is not in S_{m}")
    return m


def _seed(m: int, family: str) -> Poly:
    f = Poly.one()
    for i in range(1, m):
        for j in range(1, m + 1 - i):
            if family == SCHUBERT:
                f = f * (Poly.var(slot_x(i)) - Poly.var(slot_y(j)))
            else:
                f = f * (1 - Poly.var(slot_y(i)) * Poly.var(slot_x(j), -1))
    return f


def _leftmost_ascent(w: Perm, m: int) -> int:
    for i in range(1, m):
        if w(i) < w(i + 1):
            return i
    raise AssertionError("the longest element has no ascent")


def _compute(w: Perm, m: int, family: str) -> Poly:
    key = (w, m, family)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    if w == Perm.longest(m):
        result = _seed(m, family)
    else:
        i = _leftmost_ascent(w, m)
        upper = _compute(w.right_swap(i), m, family)
        a, b = slot_x(i), slot_x(i + 1)
        check = _debug()
        if family == SCHUBERT:
            result = divided_difference(upper, a, b, check=check)
        else:
            result = divided_difference(upper * Poly.var(a), a, b, check=check)
        if check:
            _spot_check(w, m, family, result, upper, i)
    with _lock:
        _cache[key] = result
    return result


def _spot_check(w: Perm, m: int, family: str, result: Poly, upper: Poly, i: int) -> None:
    a, b = slot_x(i), slot_x(i + 1)
    if family == SCHUBERT:
        # d_i annihilates S_w because i is an ascent of w
        if not divided_difference(result, a, b).is_zero():
            raise ArithmeticError(f"recursion check failed for S_{w} in S_{m}")
    else:
        lhs = (Poly.var(a) - Poly.var(b)) * result
        rhs = Poly.var(a) * upper - Poly.var(b) * upper.swap(a, b)
        if lhs != rhs:
            raise ArithmeticError(f"recursion check failed for G_{w} in S_{m}")


def double_schubert(w: Perm, m: int | None = None) -> Poly:
    """``S_w(x; y)`` in slot variables, with ``w`` viewed in ``S_m``."""
    return _compute(w, _ambient(w, m), SCHUBERT)


def double_grothendieck(w: Perm, m: int | None = None) -> Poly:
    """``G_w(x; y)``, a Laurent polynomial in the ``x`` slots."""
    return _compute(w, _ambient(w, m), GROTHENDIECK)


def schubert_specialize(w: Perm, u: Perm, m: int | None = None) -> Poly:
    """``S_w(y_{u(1)}, ..., y_{u(m)}; y)``."""
    m = _ambient(w, m)
    m = max(m, u.size)
    f = double_schubert(w, m)
    return f.rename({slot_x(i): slot_y(u(i)) for i in range(1, m + 1)})


def inversion_product(u: Perm) -> Poly:
    """``prod_{i<j, u(i)>u(j)} (y_{u(i)} - y_{u(j)})``."""
    f = Poly.one()
    for i, j in u.inversions():
        f = f * (Poly.var(slot_y(u(i))) - Poly.var(slot_y(u(j))))
    return f
