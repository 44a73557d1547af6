"""
Sparse multivariate (Laurent) polynomials with exact integer coefficients.

A polynomial is a map from monomials to nonzero ``int`` coefficients.  A
monomial is a sorted tuple of ``(Var, exponent)`` pairs with no zero
exponents.  Negative exponents are only allowed when the polynomial is
flagged ``laurent``.

>>> x, y = slot_x(1), slot_y(1)
>>> p = (Poly.var(x) - Poly.var(y)) * (Poly.var(x) + Poly.var(y))
>>> p.to_text()
'+1*x1^2 -1*y1^2'
"""

from __future__ import annotations

import json
import re
from collections import defaultdict
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

# variable kinds, in their canonical order
COL, STRAND, SERIES, SLOT_X, SLOT_Y = range(5)


class Var(NamedTuple):
    """Structured variable identity; tuple order is the canonical variable order."""

    kind: int
    i: int
    j: int = 0

    def __str__(self) -> str:
        if self.kind == COL:
            return f"x{self.i}_{self.j}"
        if self.kind == STRAND:
            return f"b{self.i}"
        if self.kind == SERIES:
            return f"t{self.i}_{self.j}"
        if self.kind == SLOT_X:
            return f"x{self.i}"
        return f"y{self.i}"

    def latex(self) -> str:
        if self.kind == COL:
            return f"x^{{{self.i}}}_{{{self.j}}}"
        if self.kind == STRAND:
            return f"b_{{{self.i}}}"
        if self.kind == SERIES:
            return f"t^{{{self.i}}}_{{{self.j}}}"
        if self.kind == SLOT_X:
            return f"x_{{{self.i}}}"
        return f"y_{{{self.i}}}"


def col(i: int, j: int) -> Var:
    """Column variable ``x^i_j`` (vertex ``i``, dot ``j`` from the top)."""
    return Var(COL, i, j)


def strand(k: int) -> Var:
    return Var(STRAND, k)


def series(i: int, j: int) -> Var:
    """Shifted variable used when expanding ``x^i_j = 1 + t^i_j``."""
    return Var(SERIES, i, j)


def slot_x(k: int) -> Var:
    return Var(SLOT_X, k)


def slot_y(k: int) -> Var:
    return Var(SLOT_Y, k)


_VAR_RE = re.compile(r"^(?:x(\d+)_(\d+)|b(\d+)|t(\d+)_(\d+)|x(\d+)|y(\d+))$")


def parse_var(name: str) -> Var:
    m = _VAR_RE.match(name)
    if not m:
        raise ValueError(f"unknown variable name {name!r}")
    g = m.groups()
    if g[0] is not None:
        return col(int(g[0]), int(g[1]))
    if g[2] is not None:
        return strand(int(g[2]))
    if g[3] is not None:
        return series(int(g[3]), int(g[4]))
    if g[5] is not None:
        return slot_x(int(g[5]))
    return slot_y(int(g[6]))


Monomial = tuple  # tuple[tuple[Var, int], ...], sorted by Var
ONE: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        e2 = d.get(v, 0) + e
        if e2:
            d[v] = e2
        else:
            del d[v]
    return tuple(sorted(d.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _sort_key(item: tuple[Monomial, int]):
    # degree descending, then positive coefficients first, then lex on the monomial
    m, c = item
    return (-mono_degree(m), -c, tuple((v, -e) for v, e in m))


Coercible = Union["Poly", int]


def _latex_power(v: Var, e: int) -> str:
    base = v.latex()
    if e == 1:
        return base
    if "^" in base:
        base = "{" + base + "}"
    return f"{base}^{{{e}}}"


def _rename_mono(m: Monomial, mapping: Mapping[Var, Var]) -> Monomial:
    acc: dict[Var, int] = {}
    for v, e in m:
        v = mapping.get(v, v)
        acc[v] = acc.get(v, 0) + e
    if len(acc) == len(m):
        return tuple(sorted(acc.items()))
    return tuple(sorted(item for item in acc.items() if item[1]))


class Poly:
    """Immutable sparse polynomial over ``Z``."""

    __slots__ = ("terms", "laurent")

    def __init__(self, terms: Mapping[Monomial, int] | None = None, laurent: bool = False):
        clean = {m: c for m, c in (terms or {}).items() if c}
        if not laurent:
            for m in clean:
                if any(e < 0 for _, e in m):
                    raise ValueError("negative exponent in a non-Laurent polynomial")
        self.terms: dict[Monomial, int] = clean
        self.laurent = laurent

    @classmethod
    def _make(cls, terms: dict[Monomial, int], laurent: bool) -> Poly:
        # trusted inputs: monomials already canonical and sign-compatible
        p = cls.__new__(cls)
        p.terms = {m: c for m, c in terms.items() if c}
        p.laurent = laurent
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls({ONE: c})

    @classmethod
    def var(cls, v: Var, exp: int = 1) -> Poly:
        return cls({((v, exp),): 1}, laurent=exp < 0)

    @classmethod
    def zero(cls) -> Poly:
        return cls()

    @classmethod
    def one(cls) -> Poly:
        return cls({ONE: 1})

    @staticmethod
    def _coerce(other: Coercible) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return NotImplemented

    # -- inspection ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.terms.items())

    def variables(self) -> set[Var]:
        return {v for m in self.terms for v, _ in m}

    def degrees(self) -> set[int]:
        return {mono_degree(m) for m in self.terms}

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        return len(degs) == 1 and (d is None or d in degs)

    def constant(self) -> int:
        return self.terms.get(ONE, 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: Coercible) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly._make(out, self.laurent or other.laurent)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._make({m: -c for m, c in self.terms.items()}, self.laurent)

    def __sub__(self, other: Coercible) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Coercible) -> Poly:
        return (-self) + other

    def __mul__(self, other: Coercible) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = defaultdict(int)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[mono_mul(m1, m2)] += c1 * c2
        return Poly._make(out, self.laurent or other.laurent)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = Poly.one()
        for _ in range(n):
            out = out * self
        return out

    # -- variable manipulation ---------------------------------------------

    def rename(self, mapping: Mapping[Var, Var]) -> Poly:
        """Substitute variables for variables."""
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            key = _rename_mono(m, mapping)
            out[key] = out.get(key, 0) + c
        return Poly._make(out, self.laurent)

    def swap(self, a: Var, b: Var) -> Poly:
        return self.rename({a: b, b: a})

    def substitute(self, mapping: Mapping[Var, Poly]) -> Poly:
        """Ring homomorphism sending each mapped variable to a polynomial.

        A variable occurring with a negative exponent must be sent to a
        single monomial with coefficient ``+-1``; use :func:`series_expand`
        for anything else.
        """
        powers: dict[tuple[Var, int], Poly] = {}

        def power(v: Var, e: int) -> Poly:
            key = (v, e)
            if key not in powers:
                img = mapping[v]
                if e < 0:
                    if len(img.terms) != 1:
                        raise ValueError(f"image of {v} is not invertible: {img}")
                    (m, c), = img.terms.items()
                    if c not in (1, -1):
                        raise ValueError(f"image of {v} is not invertible: {img}")
                    inv = Poly({tuple((w, -k) for w, k in m): c}, laurent=True)
                    powers[key] = inv ** (-e)
                else:
                    powers[key] = img ** e
            return powers[key]

        total: dict[Monomial, int] = defaultdict(int)
        for m, c in self.terms.items():
            rest = []
            term = Poly.const(c)
            for v, e in m:
                if v in mapping:
                    term = term * power(v, e)
                else:
                    rest.append((v, e))
            if rest:
                term = term * Poly({tuple(rest): 1}, laurent=any(e < 0 for _, e in rest))
            for m2, c2 in term.terms.items():
                total[m2] += c2
        negative = any(e < 0 for m in total for _, e in m)
        return Poly(total, laurent=self.laurent or negative)

    def graded_component(self, d: int) -> Poly:
        if self.laurent and any(e < 0 for m in self.terms for _, e in m):
            raise ValueError("graded components need a polynomial, not a Laurent polynomial")
        return Poly({m: c for m, c in self.terms.items() if mono_degree(m) == d})

    def truncate(self, d: int) -> Poly:
        """Drop every term of total degree above ``d``."""
        return Poly({m: c for m, c in self.terms.items() if mono_degree(m) <= d}, self.laurent)

    def lowest_component(self) -> tuple[int, Poly]:
        if not self.terms:
            raise ValueError("the zero polynomial has no lowest component")
        d = min(self.degrees())
        return d, self.graded_component(d)

    # -- serialization ------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=_sort_key)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            s = f"{c:+d}"
            for v, e in m:
                s += f"*{v}" if e == 1 else f"*{v}^{e}"
            parts.append(s)
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"

    def to_latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for n, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else ("+" if n else "")
            mag = abs(c)
            body = " ".join(_latex_power(v, e) for v, e in m)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag} {body}"
            parts.append(f"{sign} {body}".strip() if n else f"{sign}{body}")
        return " ".join(parts)

    def to_json(self) -> dict:
        doc = {"terms": [{"c": str(c), "m": {str(v): e for v, e in m}} for m, c in self.sorted_terms()]}
        if self.laurent:
            doc["laurent"] = True
        return doc

    @classmethod
    def from_json(cls, doc: Mapping | str) -> Poly:
        if isinstance(doc, str):
            doc = json.loads(doc)
        terms: dict[Monomial, int] = defaultdict(int)
        for t in doc["terms"]:
            m = tuple(sorted((parse_var(k), int(e)) for k, e in t["m"].items()))
            terms[m] += int(t["c"])
        return cls(terms, laurent=bool(doc.get("laurent", False)))

    @classmethod
    def parse(cls, text: str) -> Poly:
        """Inverse of :meth:`to_text`."""
        text = text.strip()
        if text == "0":
            return cls()
        terms: dict[Monomial, int] = defaultdict(int)
        laurent = False
        for tok in text.split():
            head, *factors = tok.split("*")
            c = int(head)
            d: dict[Var, int] = {}
            for f in factors:
                name, _, e = f.partition("^")
                v = parse_var(name)
                d[v] = d.get(v, 0) + (int(e) if e else 1)
            laurent = laurent or any(e < 0 for e in d.values())
            terms[tuple(sorted((v, e) for v, e in d.items() if e))] += c
        return cls(terms, laurent=laurent)


def var(v: Var) -> Poly:
    return Poly.var(v)


def divided_difference(f: Poly, a: Var, b: Var, check: bool = False) -> Poly:
    """``(f - f|a<->b) / (a - b)``, computed monomial by monomial.

    For ``a^p b^q`` with ``p > q`` the quotient is
    ``a^q b^q (a^{p-q-1} + a^{p-q-2} b + ... + b^{p-q-1})``; this works for
    negative exponents too, so Laurent input is accepted.
    """
    out: dict[Monomial, int] = defaultdict(int)
    for m, c in f.terms.items():
        d = dict(m)
        p = d.pop(a, 0)
        q = d.pop(b, 0)
        if p == q:
            continue
        sign = 1 if p > q else -1
        lo, k = min(p, q), abs(p - q)
        rest = list(d.items())
        for i in range(k):
            ea, eb = lo + k - 1 - i, lo + i
            mono = rest + [(a, ea), (b, eb)]
            out[tuple(sorted((v, e) for v, e in mono if e))] += sign * c
    res = Poly(out, f.laurent)
    if check:
        lhs = res * (Poly.var(a) - Poly.var(b))
        if lhs != f - f.swap(a, b):
            raise ArithmeticError("divided difference left a remainder")
    return res


def is_symmetric(f: Poly, variables: Iterable[Var]) -> bool:
    vs = list(variables)
    terms = f.terms
    for a, b in zip(vs, vs[1:]):
        t = {a: b, b: a}
        for m, c in terms.items():
            if terms.get(_rename_mono(m, t)) != c:
                return False
    return True


def graded_component(f: Poly, d: int) -> Poly:
    return f.graded_component(d)


def substitute(f: Poly, mapping: Mapping[Var, Poly]) -> Poly:
    return f.substitute(mapping)


def series_expand(f: Poly, shift: Mapping[Var, Var], trunc: int) -> Poly:
    """Expand ``f`` after substituting ``v = 1 + shift[v]``, dropping degrees above ``trunc``.

    Inverse powers are expanded as truncated geometric series,
    ``(1 + t)^-1 = 1 - t + t^2 - ...``.
    """
    if trunc < 0:
        raise ValueError("truncation degree must be non-negative")
    cache: dict[tuple[Var, int], Poly] = {}

    def power(v: Var, e: int) -> Poly:
        key = (v, e)
        if key not in cache:
            t = Poly.var(shift[v])
            if e >= 0:
                base = 1 + t
                n = e
            else:
                base = Poly({((shift[v], k),): (-1) ** k for k in range(1, trunc + 1)}) + 1
                n = -e
            out = Poly.one()
            for _ in range(n):
                out = (out * base).truncate(trunc)
            cache[key] = out
        return cache[key]

    total = Poly()
    for m, c in f.terms.items():
        term = Poly.const(c)
        for v, e in m:
            if v in shift:
                term = (term * power(v, e)).truncate(trunc)
            else:
                if e < 0:
                    raise ValueError(f"inverted variable {v} has no series shift")
                term = (term * Poly.var(v, e)).truncate(trunc)
        total = total + term
    return Poly(total.terms)
