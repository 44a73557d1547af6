"""
Equivariant classes of orbit closures and their verification.

``orbit_class`` sums products of double Schubert polynomials over the
minimal lace diagrams of an orbit.  ``verify_interpolation`` checks the
result against the localization characterization: it must restrict to the
Euler class at the orbit itself and to zero at every other orbit of no
larger codimension.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .lace import LaceDiagram, all_diagrams, canonical_minimal, k_diagrams, minimal_diagrams
from .permutation import Perm
from .polynomial import COL, SLOT_X, SLOT_Y, Poly, Var, col, is_symmetric, series, series_expand, strand
from .quiver import Orbit, Quiver, codim, enumerate_orbits, ext_dim, validate_orbit
from .schubert import double_grothendieck, double_schubert


@dataclass(frozen=True)
class OrbitClass:
    orbit: Orbit
    poly: Poly
    codim: int


def _slot_map(q: Quiver, dims: Sequence[int], a: int, w: Perm, f: Poly) -> dict[Var, Var]:
    """Slot variables of arrow ``a`` onto column variables (reversed for leftward arrows)."""
    p, r = dims[q.head(a)], dims[q.tail(a)]
    mapping = {}
    for v in f.variables():
        k = v.i
        if v.kind == SLOT_X:
            if k > p:
                raise ValueError(f"arrow {a}: {w} uses x{k} beyond {p} head dots")
            mapping[v] = col(a, k) if q.delta(a) == 1 else col(a - 1, dims[a - 1] - k + 1)
        elif v.kind == SLOT_Y:
            if k > r:
                raise ValueError(f"arrow {a}: {w} uses y{k} beyond {r} tail dots")
            mapping[v] = col(a - 1, k) if q.delta(a) == 1 else col(a, dims[a] - k + 1)
    return mapping


def _product(d: LaceDiagram, family: Callable[[Perm], Poly]) -> Poly:
    out = Poly.one()
    for a, w in enumerate(d.perms, 1):
        f = family(w)
        out = out * f.rename(_slot_map(d.quiver, d.dims, a, w, f))
    return out


def schub_product(d: LaceDiagram) -> Poly:
    return _product(d, double_schubert)


def groth_product(d: LaceDiagram) -> Poly:
    return _product(d, double_grothendieck)


def orbit_class(q: Quiver, dims: Sequence[int], mu: Orbit) -> OrbitClass:
    total = Poly()
    for d in minimal_diagrams(q, dims, mu):
        total = total + schub_product(d)
    return OrbitClass(mu, total, codim(q, mu))


def column_vars(dims: Sequence[int], i: int) -> list[Var]:
    return [col(i, j) for j in range(1, dims[i] + 1)]


def is_separately_symmetric(f: Poly, dims: Sequence[int]) -> bool:
    return all(is_symmetric(f, column_vars(dims, i)) for i in range(len(dims)))


# -- localization --------------------------------------------------------------


def restriction(f: Poly, d: LaceDiagram) -> Poly:
    """Send ``x^i_j`` to the variable of the strand through dot ``j`` of column ``i``."""
    table = d.strand_of
    mapping = {}
    for v in f.variables():
        key = (v.i, v.j)
        if v.kind != COL or key not in table:
            raise ValueError(f"variable {v} is not a column variable of this diagram")
        mapping[v] = strand(table[key])
    return f.rename(mapping)


def euler_class_ext(q: Quiver, mu: Orbit, d: LaceDiagram) -> Poly:
    """Product of ``(b_p - b_q)^{dim Ext(b_q, b_p)}`` over ordered strand pairs."""
    if d.orbit() != mu:
        raise ValueError("diagram does not represent the orbit")
    strands = d.strands
    out = Poly.one()
    for p, sp in enumerate(strands, 1):
        for r, sr in enumerate(strands, 1):
            if p != r and ext_dim(q, sr.interval, sp.interval):
                out = out * (Poly.var(strand(p)) - Poly.var(strand(r)))
    return out


def ext_total(q: Quiver, d: LaceDiagram) -> int:
    s = d.strands
    return sum(ext_dim(q, a.interval, b.interval) for a in s for b in s if a is not b)


def euler_class_cross(d: LaceDiagram) -> Poly:
    """Product over crossings of the extended diagram, higher-slope strand first.

    A crossing is an inversion ``i < j``, ``w(i) > w(j)`` of some arrow's
    permutation; the line in position ``i`` is the one with the higher
    slope there.
    """
    q = d.quiver
    if d.length != codim(q, d.orbit()):
        raise ValueError("crossing description of the Euler class needs a minimal diagram")
    table = d.strand_of
    out = Poly.one()
    for a, w in enumerate(d.perms, 1):
        for i, j in w.inversions():
            hi = table[d.line_owner(a, i)]
            lo = table[d.line_owner(a, j)]
            out = out * (Poly.var(strand(hi)) - Poly.var(strand(lo)))
    return out


@dataclass
class CheckRecord:
    eta: Orbit
    expected: str  # "zero" or "euler"
    actual: Poly
    target: Poly
    diagram: str
    passed: bool

    def to_json(self) -> dict:
        return {
            "eta": self.eta.to_json()["s"],
            "expected": self.expected,
            "diagram": self.diagram,
            "actual": self.actual.to_text(),
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    quiver: Quiver
    dims: tuple[int, ...]
    orbit: Orbit
    codim: int
    poly: Poly
    symmetric: bool
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.symmetric and self.poly.is_homogeneous(self.codim) and all(c.passed for c in self.checks)

    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "quiver": str(self.quiver),
            "dims": list(self.dims),
            "orbit": self.orbit.to_json()["s"],
            "codim": self.codim,
            "class": self.poly.to_text(),
            "symmetric": self.symmetric,
            "checks": [c.to_json() for c in self.checks],
            "pass": self.passed,
        }


def verify_interpolation(
    q: Quiver,
    dims: Sequence[int],
    mu: Orbit,
    strict: bool = False,
    poly: Poly | None = None,
) -> VerificationReport:
    """Check a class against the interpolation conditions.

    ``poly`` defaults to the component-formula class of ``mu``; passing a
    different one verifies that instead.  Vanishing is checked at the
    canonical diagram of each other orbit, or with ``strict`` at every
    diagram of that orbit of length at most ``codim(mu)``.
    """
    dims = q.check_dims(dims)
    if not validate_orbit(q, dims, mu):
        raise ValueError(f"orbit {mu} does not have dimension vector {dims}")
    c = codim(q, mu)
    f = orbit_class(q, dims, mu).poly if poly is None else poly
    report = VerificationReport(q, dims, mu, c, f, is_separately_symmetric(f, dims))

    everything: list[LaceDiagram] | None = list(all_diagrams(q, dims)) if strict else None

    def record(eta: Orbit, d: LaceDiagram, expected: str, target: Poly) -> None:
        actual = restriction(f, d)
        report.checks.append(CheckRecord(eta, expected, actual, target, d.perm_string(), actual == target))

    own = minimal_diagrams(q, dims, mu) if strict else [canonical_minimal(q, dims, mu)]
    for d in own:
        record(mu, d, "euler", euler_class_ext(q, mu, d))
    for eta in enumerate_orbits(q, dims):
        if eta == mu or codim(q, eta) > c:
            continue
        if strict:
            ds = [d for d in everything if d.length <= c and d.orbit() == eta]
        else:
            ds = [canonical_minimal(q, dims, eta)]
        for d in ds:
            record(eta, d, "zero", Poly())
    return report


# -- K-theory ------------------------------------------------------------------


def k_class(q: Quiver, dims: Sequence[int], mu: Orbit) -> Poly:
    """Signed sum of Grothendieck products over the K-theoretic lace diagrams of ``mu``."""
    d0 = codim(q, mu)
    total = Poly(laurent=True)
    for d in k_diagrams(q, dims, mu):
        term = groth_product(d)
        total = total + (term if (d.length - d0) % 2 == 0 else -term)
    return total


def shift_map(dims: Sequence[int]) -> dict[Var, Var]:
    return {col(i, j): series(i, j) for i in range(len(dims)) for j in range(1, dims[i] + 1)}


def verify_k_lowest_degree(q: Quiver, dims: Sequence[int], mu: Orbit, trunc: int | None = None) -> bool:
    """The lowest-degree part of the K-class at ``x = 1 + t`` must be the cohomology class."""
    dims = q.check_dims(dims)
    c = codim(q, mu)
    shift = shift_map(dims)
    expanded = series_expand(k_class(q, dims, mu), shift, c + 1 if trunc is None else trunc)
    if expanded.is_zero():
        return False
    low, part = expanded.lowest_component()
    return low == c and part == orbit_class(q, dims, mu).poly.rename(shift)


# -- grid runs -------------------------------------------------------------------


def _verify_job(args) -> dict:
    q_str, dims, s, strict = args
    q = Quiver.parse(q_str)
    mu = Orbit(q.n, {tuple(k): v for k, v in s})
    return verify_interpolation(q, dims, mu, strict=strict).to_json()


def verify_all(q: Quiver, dims: Sequence[int], strict: bool = False, jobs: int = 1) -> list[dict]:
    """Reports for every orbit, in enumeration order regardless of ``jobs``."""
    dims = q.check_dims(dims)
    work = [(str(q), dims, mu.s, strict) for mu in enumerate_orbits(q, dims)]
    if jobs <= 1:
        return [_verify_job(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_job, work))
