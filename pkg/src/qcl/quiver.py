"""
Type-A quivers, dimension vectors and orbit data.

Vertices are ``0..n`` and arrow ``a`` (``1 <= a <= n``) joins ``a-1`` and
``a``.  An orbit is recorded by its strand multiplicities ``s[i, j]``, the
number of copies of the indecomposable supported on ``[i, j]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, Sequence

Interval = tuple[int, int]


@dataclass(frozen=True)
class Quiver:
    """Orientation signs ``deltas[a-1] = h(a) - t(a)``."""

    deltas: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "deltas", tuple(self.deltas))
        if any(d not in (-1, 1) for d in self.deltas):
            raise ValueError(f"orientation signs must be +1 or -1: {self.deltas}")

    @classmethod
    def parse(cls, text: str) -> Quiver:
        """``">"`` is a rightward arrow, ``"<"`` a leftward one."""
        bad = set(text) - {"<", ">"}
        if bad:
            raise ValueError(f"quiver string may only contain '<' and '>': {text!r}")
        return cls(tuple(1 if ch == ">" else -1 for ch in text))

    def __str__(self) -> str:
        return "".join(">" if d == 1 else "<" for d in self.deltas)

    @property
    def n(self) -> int:
        return len(self.deltas)

    @property
    def vertices(self) -> range:
        return range(self.n + 1)

    @property
    def arrows(self) -> range:
        return range(1, self.n + 1)

    def delta(self, a: int) -> int:
        return self.deltas[a - 1]

    def tail(self, a: int) -> int:
        return a - 1 if self.delta(a) == 1 else a

    def head(self, a: int) -> int:
        return a if self.delta(a) == 1 else a - 1

    def boundary_delta(self, a: int) -> int:
        """``delta(a)`` extended to ``a = 0`` (as +1) and ``a = n+1`` (as -1)."""
        if a <= 0:
            return 1
        if a > self.n:
            return -1
        return self.delta(a)

    def intervals(self) -> Iterator[Interval]:
        for i in self.vertices:
            for j in range(i, self.n + 1):
                yield (i, j)

    def check_dims(self, dims: Sequence[int]) -> tuple[int, ...]:
        dims = tuple(int(e) for e in dims)
        if len(dims) != self.n + 1:
            raise ValueError(f"quiver {self} needs {self.n + 1} dimensions, got {len(dims)}")
        if any(e < 0 for e in dims):
            raise ValueError(f"dimensions must be non-negative: {dims}")
        return dims

    def rep_dim(self, dims: Sequence[int]) -> int:
        """Dimension of the representation space ``V``."""
        return sum(dims[self.tail(a)] * dims[self.head(a)] for a in self.arrows)


@dataclass(frozen=True)
class Orbit:
    """Strand multiplicities of a G-orbit, keyed by interval ``(i, j)``.

    Zero entries are not stored, so two orbits compare equal exactly when
    their tables agree.
    """

    n: int
    s: tuple[tuple[Interval, int], ...]

    def __init__(self, n: int, s: Mapping[Interval, int]):
        for (i, j), c in s.items():
            if not (0 <= i <= j <= n):
                raise ValueError(f"interval ({i},{j}) outside 0..{n}")
            if c < 0:
                raise ValueError(f"negative multiplicity at ({i},{j})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "s", tuple(sorted((k, v) for k, v in s.items() if v)))

    def __getitem__(self, ij: Interval) -> int:
        i, j = ij
        if i > j:
            return 0
        return self.table.get(ij, 0)

    @cached_property
    def table(self) -> dict[Interval, int]:
        return dict(self.s)

    def dims(self) -> tuple[int, ...]:
        e = [0] * (self.n + 1)
        for (i, j), c in self.s:
            for k in range(i, j + 1):
                e[k] += c
        return tuple(e)

    def strand_types(self) -> list[Interval]:
        """Intervals with multiplicity, in table order."""
        return [ij for ij, c in self.s for _ in range(c)]

    def key(self) -> str:
        return ";".join(f"{i},{j}:{c}" for (i, j), c in self.s)

    def __str__(self) -> str:
        return "{" + ", ".join(f"s{i}{j}={c}" if self.n < 10 else f"s{i},{j}={c}" for (i, j), c in self.s) + "}"

    def to_json(self, quiver: Quiver | None = None) -> dict:
        doc: dict = {}
        if quiver is not None:
            doc["quiver"] = str(quiver)
            doc["dims"] = list(self.dims())
        doc["s"] = {f"{i},{j}": c for (i, j), c in self.s}
        return doc

    @classmethod
    def from_json(cls, doc: Mapping | str, n: int | None = None) -> Orbit:
        if isinstance(doc, str):
            doc = json.loads(doc)
        if n is None:
            if "quiver" not in doc:
                raise ValueError("orbit JSON needs a 'quiver' field or an explicit n")
            n = len(doc["quiver"])
        s = {}
        for key, c in doc["s"].items():
            i, j = (int(t) for t in key.split(","))
            s[(i, j)] = int(c)
        return cls(n, s)

    @classmethod
    def zero(cls, dims: Sequence[int]) -> Orbit:
        return cls(len(dims) - 1, {(i, i): e for i, e in enumerate(dims)})


def validate_orbit(q: Quiver, dims: Sequence[int], mu: Orbit) -> bool:
    """True iff the strands of ``mu`` fill exactly ``dims``."""
    dims = q.check_dims(dims)
    if mu.n != q.n:
        raise ValueError(f"orbit has n={mu.n}, quiver has n={q.n}")
    return mu.dims() == dims


def rank_table(mu: Orbit) -> dict[Interval, int]:
    """``r[i, j]``: number of strands covering both column ``i`` and column ``j``."""
    n = mu.n
    r = {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            r[(i, j)] = sum(c for (k, l), c in mu.s if k <= i and l >= j)
    return r


def codim(q: Quiver, mu: Orbit) -> int:
    """Forced-crossing count of an orbit, which equals its codimension."""
    r = rank_table(mu)
    d = 0
    for i in range(q.n + 1):
        for j in range(i + 1, q.n + 1):
            if q.delta(i + 1) == q.delta(j):
                d += (r[(i + 1, j)] - r[(i, j)]) * (r[(i, j - 1)] - r[(i, j)])
            else:
                d += r[(i, j)] * mu[(i + 1, j - 1)]
    return d


def enumerate_orbits(q: Quiver, dims: Sequence[int]) -> list[Orbit]:
    """All orbits of dimension vector ``dims``, lexicographic in the flattened s-table."""
    dims = q.check_dims(dims)
    cells = list(q.intervals())
    out: list[Orbit] = []
    need = list(dims)

    def rec(k: int, chosen: dict):
        if k == len(cells):
            if not any(need):
                out.append(Orbit(q.n, chosen))
            return
        i, j = cells[k]
        # (i, n) is the last interval starting at i, so it must fill column i
        lo = need[i] if j == q.n else 0
        hi = min(need[i : j + 1])
        for c in range(lo, hi + 1):
            for v in range(i, j + 1):
                need[v] -= c
            if c:
                chosen[(i, j)] = c
            rec(k + 1, chosen)
            chosen.pop((i, j), None)
            for v in range(i, j + 1):
                need[v] += c

    rec(0, {})
    return out


def dense_orbit(q: Quiver, dims: Sequence[int]) -> Orbit:
    return min(enumerate_orbits(q, dims), key=lambda mu: codim(q, mu))


def euler_form(q: Quiver, e: Sequence[int], f: Sequence[int]) -> int:
    if len(e) != q.n + 1 or len(f) != q.n + 1:
        raise ValueError("dimension vectors must have one entry per vertex")
    return sum(a * b for a, b in zip(e, f)) - sum(e[q.tail(a)] * f[q.head(a)] for a in q.arrows)


def interval_dims(q: Quiver, ij: Interval) -> tuple[int, ...]:
    i, j = ij
    return tuple(1 if i <= k <= j else 0 for k in q.vertices)


def _escape_count(q: Quiver, a: Interval, b: Interval) -> int:
    i, j = a
    p, r = b
    count = 0
    for arrow in q.arrows:
        t, h = q.tail(arrow), q.head(arrow)
        if i <= t <= j and p <= h <= r and (not i <= h <= j or not p <= t <= r):
            count += 1
    return count


def _meet(a: Interval, b: Interval) -> bool:
    return max(a[0], b[0]) <= min(a[1], b[1])


def ext_dim(q: Quiver, a: Interval, b: Interval) -> int:
    """``dim Ext(X^a, X^b)`` for indecomposables supported on intervals ``a`` and ``b``."""
    n_esc = _escape_count(q, a, b)
    if _meet(a, b):
        return int(n_esc == 2)
    return int(n_esc == 1)


def hom_dim(q: Quiver, a: Interval, b: Interval) -> int:
    return int(_meet(a, b) and _escape_count(q, a, b) == 0)
