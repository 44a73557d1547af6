"""
Permutations of ``{1, ..., m}`` in one-line notation.

A permutation is stored with its trailing fixed points removed, so that
``S_m`` embeds in ``S_{m+1}`` without any bookkeeping:

>>> Perm([1, 3, 2, 4, 5]) == Perm([1, 3, 2])
True
>>> Perm.parse("536412").length
11
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Mapping


class Perm:
    """An element of the infinite symmetric group, stored in one-line notation."""

    __slots__ = ("_w", "__dict__")

    def __init__(self, oneline: Iterable[int] = ()):
        w = list(oneline)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
        while w and w[-1] == len(w):
            w.pop()
        self._w = tuple(w)

    @classmethod
    def identity(cls) -> Perm:
        return cls()

    @classmethod
    def longest(cls, m: int) -> Perm:
        return cls(range(m, 0, -1))

    @classmethod
    def simple(cls, i: int) -> Perm:
        """The adjacent transposition ``s_i = (i, i+1)``."""
        if i < 1:
            raise ValueError("simple reflections are indexed from 1")
        w = list(range(1, i + 2))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @classmethod
    def parse(cls, text: str) -> Perm:
        """Read ``"5,3,6,4,1,2"`` or the compact form ``"536412"``."""
        text = text.strip()
        if "," in text:
            return cls(int(tok) for tok in text.split(","))
        if not text:
            return cls()
        return cls(int(ch) for ch in text)

    # -- one-line access ----------------------------------------------------

    @property
    def oneline(self) -> tuple[int, ...]:
        return self._w

    @property
    def size(self) -> int:
        """Smallest ``m`` with ``self`` in ``S_m``."""
        return len(self._w)

    def padded(self, m: int) -> tuple[int, ...]:
        if m < self.size:
            raise ValueError(f"{self} does not lie in S_{m}")
        return self._w + tuple(range(self.size + 1, m + 1))

    def __call__(self, i: int) -> int:
        if i < 1:
            raise ValueError(f"position {i} out of range")
        return self._w[i - 1] if i <= len(self._w) else i

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self._w == other._w

    def __lt__(self, other: Perm) -> bool:
        return self._w < other._w

    def __hash__(self) -> int:
        return hash(self._w)

    def __repr__(self) -> str:
        return f"Perm({self})"

    def __str__(self) -> str:
        if not self._w:
            return "1"
        if len(self._w) <= 9:
            return "".join(map(str, self._w))
        return ",".join(map(str, self._w))

    def to_string(self, m: int | None = None, compact: bool = True) -> str:
        w = self.padded(m) if m is not None else self._w
        if compact and len(w) <= 9:
            return "".join(map(str, w)) or "1"
        return ",".join(map(str, w))

    # -- group structure ----------------------------------------------------

    def __mul__(self, other: Perm) -> Perm:
        """Composition ``(self * other)(i) = self(other(i))``."""
        m = max(self.size, other.size)
        return Perm(self(other(i)) for i in range(1, m + 1))

    def inverse(self) -> Perm:
        inv = [0] * self.size
        for i, v in enumerate(self._w, 1):
            inv[v - 1] = i
        return Perm(inv)

    def right_swap(self, i: int) -> Perm:
        """``w s_i``: exchange the entries in positions ``i`` and ``i+1``."""
        w = list(self.padded(max(self.size, i + 1)))
        w[i - 1], w[i] = w[i], w[i - 1]
        return Perm(w)

    def left_swap(self, i: int) -> Perm:
        """``s_i w``: exchange the values ``i`` and ``i+1``."""
        swap = {i: i + 1, i + 1: i}
        w = self.padded(max(self.size, i + 1))
        return Perm(swap.get(v, v) for v in w)

    # -- statistics ---------------------------------------------------------

    @cached_property
    def length(self) -> int:
        """Number of inversions."""
        w = self._w
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def inversions(self) -> list[tuple[int, int]]:
        """Position pairs ``(i, j)``, ``i < j``, with ``w(i) > w(j)``."""
        w = self._w
        return [(i + 1, j + 1) for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]]

    def descents(self) -> frozenset[int]:
        w = self._w
        return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])

    def last_descent(self) -> int:
        return max(self.descents(), default=0)

    def is_partial(self, p: int, q: int) -> bool:
        """True iff all descents of ``w`` are ``<= p`` and those of ``w^-1`` are ``<= q``."""
        if p < 0 or q < 0:
            raise ValueError("p and q must be non-negative")
        return self.last_descent() <= p and self.inverse().last_descent() <= q

    def reduced_word(self) -> list[int]:
        """A reduced word ``[i_1, ..., i_l]`` with ``w = s_{i_1} ... s_{i_l}``.

        Built by repeatedly stripping the leftmost descent from the right,
        so the word is read off in reverse.
        """
        word = []
        w = self
        while w.size:
            i = min(w.descents())
            word.append(i)
            w = w.right_swap(i)
        word.reverse()
        return word

    @classmethod
    def from_word(cls, word: Iterable[int]) -> Perm:
        w = cls()
        for i in word:
            w = w * cls.simple(i)
        return w

    def bruhat_leq(self, other: Perm) -> bool:
        """Bruhat comparison ``self <= other`` by the rank-matrix criterion.

        ``u <= w`` iff ``#{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j}``
        for all ``i, j``.
        """
        if self.length > other.length:
            return False
        m = max(self.size, other.size)
        u, w = self.padded(m), other.padded(m)
        for i in range(1, m):
            cu = cw = 0
            # values >= j among the first i entries, scanning j downward
            us = set(u[:i])
            ws = set(w[:i])
            for j in range(m, 0, -1):
                cu += j in us
                cw += j in ws
                if cu > cw:
                    return False
        return True


def length(w: Perm) -> int:
    return w.length


def descents(w: Perm) -> frozenset[int]:
    return w.descents()


def is_partial(w: Perm, p: int, q: int) -> bool:
    return w.is_partial(p, q)


def bruhat_leq(u: Perm, w: Perm) -> bool:
    return u.bruhat_leq(w)


def reduced_word(w: Perm) -> list[int]:
    return w.reduced_word()


def min_completion(pairs: Mapping[int, int], p: int, q: int) -> Perm:
    """Shortest permutation extending a partial matching of ``1..p`` into ``1..q``.

    Real positions are ``1..p`` and real values ``1..q``.  Unmatched real
    positions receive the virtual values ``q+1, q+2, ...`` in increasing
    order; unmatched real values are hit by the virtual positions
    ``p+1, p+2, ...`` in increasing order.

    >>> min_completion({1: 1}, 2, 2)
    Perm(132)
    >>> min_completion({2: 1}, 2, 2)
    Perm(312)
    """
    if len(set(pairs.values())) != len(pairs):
        raise ValueError(f"matching is not injective: {dict(pairs)}")
    for k, v in pairs.items():
        if not (1 <= k <= p and 1 <= v <= q):
            raise ValueError(f"pair {k}->{v} outside real range {p}x{q}")
    free_pos = [k for k in range(1, p + 1) if k not in pairs]
    hit = set(pairs.values())
    free_val = [v for v in range(1, q + 1) if v not in hit]
    w = dict(pairs)
    for n, k in enumerate(free_pos):
        w[k] = q + 1 + n
    for n, v in enumerate(free_val):
        w[p + 1 + n] = v
    m = p + len(free_val)
    return Perm(w[k] for k in range(1, m + 1))


def real_pairs(w: Perm, p: int, q: int) -> dict[int, int]:
    """Inverse of :func:`min_completion`: the matched real (position, value) pairs."""
    if not w.is_partial(p, q):
        raise ValueError(f"{w} is not a partial permutation from {p} to {q}")
    return {k: w(k) for k in range(1, p + 1) if w(k) <= q}
