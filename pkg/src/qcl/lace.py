"""
Lace diagrams and their permutation-sequence codec.

Dots in column ``i`` are numbered ``1..e_i`` from the top.  Between columns
``a-1`` and ``a`` a diagram holds a partial matching, stored as pairs
``(left dot, right dot)``.  Each arrow's matching is encoded as the shortest
permutation extending it, read against the arrow's direction: a rightward
arrow maps dots of column ``a`` (top-counted) to dots of column ``a-1``
(top-counted); a leftward arrow maps dots of column ``a-1`` (bottom-counted)
to dots of column ``a`` (bottom-counted).

Crossings are never drawn; every crossing count goes through inversions of
these permutations.
"""

from __future__ import annotations

import functools
import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .permutation import Perm, min_completion, real_pairs
from .quiver import Interval, Orbit, Quiver, codim

Matching = frozenset  # frozenset[tuple[int, int]] of (left dot, right dot)


@dataclass(frozen=True)
class Strand:
    start: int
    end: int
    dots: tuple[int, ...]  # dot index in each column start..end

    @property
    def interval(self) -> Interval:
        return (self.start, self.end)

    def dot(self, column: int) -> int:
        return self.dots[column - self.start]


class LaceDiagram:
    """A lace diagram for a quiver and dimension vector.

    ``matchings[a-1]`` is the set of ``(l, r)`` pairs joining dot ``l`` of
    column ``a-1`` to dot ``r`` of column ``a``.
    """

    __slots__ = ("quiver", "dims", "matchings", "__dict__")

    def __init__(self, quiver: Quiver, dims: Sequence[int], matchings: Iterable[Iterable[tuple[int, int]]]):
        self.quiver = quiver
        self.dims = quiver.check_dims(dims)
        ms = tuple(Matching((int(l), int(r)) for l, r in m) for m in matchings)
        if len(ms) != quiver.n:
            raise ValueError(f"need {quiver.n} matchings, got {len(ms)}")
        for a, m in enumerate(ms, 1):
            left = [l for l, _ in m]
            right = [r for _, r in m]
            if len(set(left)) != len(left) or len(set(right)) != len(right):
                raise ValueError(f"matching of arrow {a} is not injective")
            if any(not 1 <= l <= self.dims[a - 1] for l in left) or any(not 1 <= r <= self.dims[a] for r in right):
                raise ValueError(f"matching of arrow {a} refers to a missing dot")
        self.matchings = ms

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LaceDiagram)
            and self.quiver == other.quiver
            and self.dims == other.dims
            and self.matchings == other.matchings
        )

    def __hash__(self) -> int:
        return hash((self.quiver, self.dims, self.matchings))

    def __repr__(self) -> str:
        return f"LaceDiagram({self.quiver}, {list(self.dims)}, perms={self.perm_string()})"

    @classmethod
    def empty(cls, quiver: Quiver, dims: Sequence[int]) -> LaceDiagram:
        return cls(quiver, dims, [()] * quiver.n)

    # -- codec --------------------------------------------------------------

    def _bounds(self, a: int) -> tuple[int, int]:
        """``(p, q) = (e_head, e_tail)`` for arrow ``a``."""
        q = self.quiver
        return self.dims[q.head(a)], self.dims[q.tail(a)]

    @cached_property
    def perms(self) -> tuple[Perm, ...]:
        out = []
        for a, m in enumerate(self.matchings, 1):
            eL, eR = self.dims[a - 1], self.dims[a]
            if self.quiver.delta(a) == 1:
                pairs = {r: l for l, r in m}
            else:
                pairs = {eL - l + 1: eR - r + 1 for l, r in m}
            out.append(min_completion(pairs, *self._bounds(a)))
        return tuple(out)

    @classmethod
    def from_perms(cls, quiver: Quiver, dims: Sequence[int], perms: Sequence[Perm]) -> LaceDiagram:
        dims = quiver.check_dims(dims)
        if len(perms) != quiver.n:
            raise ValueError(f"need {quiver.n} permutations, got {len(perms)}")
        matchings = []
        for a, w in enumerate(perms, 1):
            p, q = dims[quiver.head(a)], dims[quiver.tail(a)]
            if not w.is_partial(p, q):
                raise ValueError(f"arrow {a}: {w} is not a partial permutation from {p} to {q}")
            pairs = real_pairs(w, p, q)
            eL, eR = dims[a - 1], dims[a]
            if quiver.delta(a) == 1:
                matchings.append([(l, r) for r, l in pairs.items()])
            else:
                matchings.append([(eL - k + 1, eR - v + 1) for k, v in pairs.items()])
        return cls(quiver, dims, matchings)

    def perm_string(self) -> str:
        return ";".join(w.to_string(compact=True) for w in self.perms)

    @cached_property
    def length(self) -> int:
        return sum(w.length for w in self.perms)

    # -- strands ------------------------------------------------------------

    @cached_property
    def strands(self) -> tuple[Strand, ...]:
        """Strands sorted by (start column, end column, dot in start column)."""
        n = self.quiver.n
        right = [dict() for _ in range(n + 1)]
        has_left = [set() for _ in range(n + 1)]
        for a, m in enumerate(self.matchings, 1):
            for l, r in m:
                right[a - 1][l] = r
                has_left[a].add(r)
        out = []
        for c in range(n + 1):
            for k in range(1, self.dims[c] + 1):
                if k in has_left[c]:
                    continue
                dots = [k]
                col = c
                while dots[-1] in right[col]:
                    dots.append(right[col][dots[-1]])
                    col += 1
                out.append(Strand(c, col, tuple(dots)))
        out.sort(key=lambda s: (s.start, s.end, s.dots[0]))
        return tuple(out)

    @cached_property
    def strand_of(self) -> dict[tuple[int, int], int]:
        """``(column, dot) -> strand number``, strands numbered from 1."""
        table = {}
        for k, s in enumerate(self.strands, 1):
            for c in range(s.start, s.end + 1):
                table[(c, s.dot(c))] = k
        return table

    def orbit(self) -> Orbit:
        counts: dict[Interval, int] = {}
        for s in self.strands:
            counts[s.interval] = counts.get(s.interval, 0) + 1
        return Orbit(self.quiver.n, counts)

    def line_owner(self, a: int, position: int) -> tuple[int, int]:
        """The real dot ``(column, dot)`` carried by line ``position`` of ``perms[a-1]``.

        A line of the extended diagram has at least one real end; the
        position end is preferred.
        """
        w = self.perms[a - 1]
        eL, eR = self.dims[a - 1], self.dims[a]
        value = w(position)
        if self.quiver.delta(a) == 1:
            if position <= eR:
                return (a, position)
            return (a - 1, value)
        if position <= eL:
            return (a - 1, eL - position + 1)
        return (a, eR - value + 1)

    # -- local moves --------------------------------------------------------

    def swap(self, column: int, row: int) -> LaceDiagram:
        """Exchange dots ``row`` and ``row + 1`` of ``column``, keeping their connections."""
        if not 0 <= column <= self.quiver.n:
            raise ValueError(f"column {column} out of range")
        if not 1 <= row < self.dims[column]:
            raise ValueError(f"row {row} out of range for column {column} with {self.dims[column]} dots")
        t = {row: row + 1, row + 1: row}
        ms = list(self.matchings)
        if column >= 1:
            ms[column - 1] = [(l, t.get(r, r)) for l, r in ms[column - 1]]
        if column < self.quiver.n:
            ms[column] = [(t.get(l, l), r) for l, r in ms[column]]
        return LaceDiagram(self.quiver, self.dims, ms)

    def render(self, align: str = "top") -> str:
        """Text picture: one row per dot level, ``o`` for dots.

        Between two columns a digit names the row of the right-hand partner
        and ``-`` marks a partner in the same row.  With ``align="bottom"``
        columns joined by a leftward arrow are drawn bottom-aligned
        relative to each other, which only shifts rows.
        """
        if align not in ("top", "bottom"):
            raise ValueError("align must be 'top' or 'bottom'")
        n = self.quiver.n
        offset = [0] * (n + 1)
        if align == "bottom":
            for a in self.quiver.arrows:
                shift = self.dims[a] - self.dims[a - 1] if self.quiver.delta(a) == -1 else 0
                offset[a] = offset[a - 1] - shift
            low = min(offset)
            offset = [o - low for o in offset]
        height = max((offset[c] + self.dims[c] for c in range(n + 1)), default=0)
        rows = []
        for y in range(1, height + 1):
            cells = []
            for c in range(n + 1):
                k = y - offset[c]
                cells.append("o" if 1 <= k <= self.dims[c] else " ")
                if c < n:
                    partner = next((r for l, r in self.matchings[c] if l == k), None)
                    if partner is None:
                        cells.append("   ")
                    elif partner + offset[c + 1] == y:
                        cells.append("---")
                    else:
                        cells.append(f" {partner + offset[c + 1]} ")
            rows.append("".join(cells).rstrip())
        return "\n".join(rows)

    def to_json(self) -> dict:
        return {
            "quiver": str(self.quiver),
            "dims": list(self.dims),
            "perms": [list(w.padded(max(w.size, 1))) for w in self.perms],
        }

    @classmethod
    def from_json(cls, doc: dict) -> LaceDiagram:
        q = Quiver.parse(doc["quiver"])
        return cls.from_perms(q, doc["dims"], [Perm(w) for w in doc["perms"]])


# -- module-level operations -------------------------------------------------


def to_perm_seq(d: LaceDiagram) -> tuple[Perm, ...]:
    return d.perms


def from_perm_seq(q: Quiver, dims: Sequence[int], ws: Sequence[Perm]) -> LaceDiagram:
    return LaceDiagram.from_perms(q, dims, ws)


def orbit_of(d: LaceDiagram) -> Orbit:
    return d.orbit()


def diagram_length(d: LaceDiagram) -> int:
    return d.length


def is_minimal(d: LaceDiagram) -> bool:
    return d.length == codim(d.quiver, d.orbit())


def swap_move(d: LaceDiagram, col: int, row: int) -> LaceDiagram:
    return d.swap(col, row)


def partial_matchings(p: int, q: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All injective partial maps from ``1..p`` to ``1..q`` as pair tuples."""
    for k in range(min(p, q) + 1):
        for left in itertools.combinations(range(1, p + 1), k):
            for right in itertools.permutations(range(1, q + 1), k):
                yield tuple(zip(left, right))


def all_diagrams(q: Quiver, dims: Sequence[int]) -> Iterator[LaceDiagram]:
    dims = q.check_dims(dims)
    choices = [list(partial_matchings(dims[a - 1], dims[a])) for a in q.arrows]
    for ms in itertools.product(*choices):
        yield LaceDiagram(q, dims, ms)


def strand_order(q: Quiver, a: Interval, b: Interval) -> int:
    """Three-way comparison of strand types for stacking; smaller goes on top.

    Missing arrows past either end count as ``delta(0) = +1`` and
    ``delta(n+1) = -1``.
    """
    (i, j), (p, r) = a, b
    if a == b:
        return 0
    di, dp = q.boundary_delta(i), q.boundary_delta(p)
    if i != p:
        if di != dp:
            return -1 if di == -1 else 1
        if di == -1:
            return -1 if i > p else 1
        return -1 if i < p else 1
    dj, dr = q.boundary_delta(j + 1), q.boundary_delta(r + 1)
    if dj != dr:
        return -1 if dj == -1 else 1
    if dj == -1:
        return -1 if j < r else 1
    return -1 if j > r else 1


def canonical_minimal(q: Quiver, dims: Sequence[int], mu: Orbit) -> LaceDiagram:
    """Minimal diagram with strands stacked in :func:`strand_order` in every column."""
    dims = q.check_dims(dims)
    if mu.dims() != dims:
        raise ValueError(f"orbit {mu} does not have dimension vector {dims}")
    kinds = sorted(mu.strand_types(), key=functools.cmp_to_key(lambda a, b: strand_order(q, a, b)))
    dot_at: list[dict[int, int]] = [dict() for _ in q.vertices]  # column -> strand idx -> dot
    for c in q.vertices:
        row = 0
        for idx, (i, j) in enumerate(kinds):
            if i <= c <= j:
                row += 1
                dot_at[c][idx] = row
    matchings = []
    for a in q.arrows:
        matchings.append(
            [(dot_at[a - 1][idx], dot_at[a][idx]) for idx, (i, j) in enumerate(kinds) if i <= a - 1 and a <= j]
        )
    return LaceDiagram(q, dims, matchings)


def minimal_diagrams(q: Quiver, dims: Sequence[int], mu: Orbit) -> list[LaceDiagram]:
    """All minimal diagrams of ``mu``: closure of the canonical one under length-preserving swaps."""
    start = canonical_minimal(q, dims, mu)
    target = codim(q, mu)
    seen = {start}
    queue = deque([start])
    while queue:
        d = queue.popleft()
        for c in q.vertices:
            for row in range(1, d.dims[c]):
                d2 = d.swap(c, row)
                if d2 not in seen and d2.length == target:
                    seen.add(d2)
                    queue.append(d2)
    return sorted(seen, key=_diagram_key)


def _diagram_key(d: LaceDiagram):
    return (d.length, tuple(w.oneline for w in d.perms))


def brute_minimal_diagrams(q: Quiver, dims: Sequence[int], mu: Orbit) -> list[LaceDiagram]:
    target = codim(q, mu)
    found = [d for d in all_diagrams(q, dims) if d.orbit() == mu and d.length == target]
    return sorted(found, key=_diagram_key)


# -- K-theoretic moves -------------------------------------------------------


def _side_ops(q: Quiver, dims: Sequence[int], column: int, row: int):
    """Permutation actions exchanging dots ``row, row+1`` of ``column`` on each side."""
    e = dims[column]
    if q.delta(column) == 1:
        left = lambda w: w.right_swap(row)  # noqa: E731
    else:
        left = lambda w: w.left_swap(e - row)  # noqa: E731
    if q.delta(column + 1) == 1:
        right = lambda w: w.left_swap(row)  # noqa: E731
    else:
        right = lambda w: w.right_swap(e - row)  # noqa: E731
    return left, right


def k_moves(d: LaceDiagram) -> Iterator[LaceDiagram]:
    """Neighbours of ``d`` under the three-way K-theoretic exchange.

    At two consecutive dots of an interior column the lines to either
    side may cross on the left only, on the right only, or on both sides;
    the three configurations are interchangeable.  Results that are not
    valid diagrams (a crossing between two extended lines) are skipped.
    """
    q, dims = d.quiver, d.dims
    ws = d.perms
    for c in range(1, q.n):
        for row in range(1, dims[c]):
            left, right = _side_ops(q, dims, c, row)
            wl, wr = ws[c - 1], ws[c]
            lw, rw = left(wl), right(wr)
            crossed_l = lw.length < wl.length
            crossed_r = rw.length < wr.length
            if crossed_l and crossed_r:
                options = [(lw, wr), (wl, rw)]
            elif crossed_l:
                options = [(lw, rw), (wl, rw)]
            elif crossed_r:
                options = [(lw, rw), (lw, wr)]
            else:
                continue
            for nl, nr in options:
                new = list(ws)
                new[c - 1], new[c] = nl, nr
                try:
                    yield LaceDiagram.from_perms(q, dims, new)
                except ValueError:
                    continue


def k_diagrams(q: Quiver, dims: Sequence[int], mu: Orbit) -> list[LaceDiagram]:
    """Closure of the minimal diagrams of ``mu`` under :func:`k_moves`."""
    start = minimal_diagrams(q, dims, mu)
    seen = set(start)
    queue = deque(start)
    while queue:
        d = queue.popleft()
        for d2 in k_moves(d):
            if d2 not in seen:
                seen.add(d2)
                queue.append(d2)
    return sorted(seen, key=_diagram_key)
