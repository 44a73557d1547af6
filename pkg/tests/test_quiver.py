import itertools

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from qcl.lace import LaceDiagram
from qcl.permutation import Perm
from qcl.quiver import (
    Orbit,
    Quiver,
    codim,
    dense_orbit,
    enumerate_orbits,
    euler_form,
    ext_dim,
    hom_dim,
    interval_dims,
    rank_table,
    validate_orbit,
)

from conftest import grid, quivers

RIGHT = Quiver.parse(">")
EXAMPLE_Q = Quiver.parse("><>>")
EXAMPLE_DIMS = (3, 4, 4, 3, 3)
EXAMPLE_PERMS = "12453;536412;13524;24513"
EXAMPLE_S = {(0, 0): 1, (0, 1): 1, (0, 3): 1, (1, 1): 1, (1, 2): 1, (2, 2): 1, (2, 4): 1, (3, 3): 1, (4, 4): 2}


def orbit(n, **cells):
    return Orbit(n, {(int(k[1]), int(k[2])): v for k, v in cells.items()})


def brute_orbits(q, dims):
    """All s-tables with entries up to max(dims) that fill ``dims``."""
    cells = list(q.intervals())
    top = max(dims, default=0)
    out = []
    for vals in itertools.product(range(top + 1), repeat=len(cells)):
        mu = Orbit(q.n, dict(zip(cells, vals)))
        if mu.dims() == tuple(dims):
            out.append(mu)
    return out


def orbit_count_oracle(n, e):
    """Coefficient of z^e in the product over intervals of 1/(1 - z_i...z_j)."""
    series = {(0,) * (n + 1): 1}
    for i in range(n + 1):
        for j in range(i, n + 1):
            new = {}
            for mono, c in series.items():
                m = list(mono)
                while all(m[v] <= e[v] for v in range(i, j + 1)):
                    t = tuple(m)
                    new[t] = new.get(t, 0) + c
                    for v in range(i, j + 1):
                        m[v] += 1
            series = new
    return series.get(tuple(e), 0)


def hom_oracle(q, a, b):
    """dim Hom between interval modules by solving the commutation equations."""
    (i, j), (p, r) = a, b
    inside_a = lambda v: i <= v <= j  # noqa: E731
    inside_b = lambda v: p <= v <= r  # noqa: E731
    common = [v for v in q.vertices if inside_a(v) and inside_b(v)]
    if not common:
        return 0
    idx = {v: k for k, v in enumerate(common)}
    rows = []
    for arrow in q.arrows:
        t, h = q.tail(arrow), q.head(arrow)
        if not (inside_a(t) and inside_b(h)):
            continue
        row = [0] * len(common)
        if inside_b(t):
            row[idx[t]] += 1
        if inside_a(h):
            row[idx[h]] -= 1
        rows.append(row)
    rank = sympy.Matrix(rows).rank() if rows else 0
    return len(common) - rank


def test_quiver_parse():
    q = Quiver.parse("><>>")
    assert q.n == 4 and str(q) == "><>>"
    assert [q.delta(a) for a in q.arrows] == [1, -1, 1, 1]
    assert (q.tail(2), q.head(2)) == (2, 1)
    assert (q.tail(1), q.head(1)) == (0, 1)
    assert q.boundary_delta(0) == 1 and q.boundary_delta(5) == -1
    with pytest.raises(ValueError):
        Quiver.parse(">x")
    with pytest.raises(ValueError):
        q.check_dims((1, 2))
    with pytest.raises(ValueError):
        RIGHT.check_dims((1, -1))


def test_validate_orbit_examples():
    assert validate_orbit(RIGHT, (1, 1), orbit(1, s01=1))
    assert not validate_orbit(RIGHT, (1, 1), orbit(1, s00=1))
    mu = Orbit(4, EXAMPLE_S)
    assert validate_orbit(EXAMPLE_Q, EXAMPLE_DIMS, mu)


def test_example_orbit_decodes_from_perms():
    d = LaceDiagram.from_perms(EXAMPLE_Q, EXAMPLE_DIMS, [Perm.parse(w) for w in EXAMPLE_PERMS.split(";")])
    assert d.orbit() == Orbit(4, EXAMPLE_S)
    assert str(d.orbit()) == "{s00=1, s01=1, s03=1, s11=1, s12=1, s22=1, s24=1, s33=1, s44=2}"


def test_rank_table_examples():
    r = rank_table(orbit(1, s00=1, s01=1, s11=1))
    assert (r[(0, 0)], r[(0, 1)], r[(1, 1)]) == (2, 1, 2)
    zero = Orbit.zero((2, 3, 1))
    assert all(v == 0 for (i, j), v in rank_table(zero).items() if i < j)


def test_rank_table_example_orbit():
    mu = Orbit(4, EXAMPLE_S)
    r = rank_table(mu)
    for i in range(5):
        assert r[(i, i)] == EXAMPLE_DIMS[i]
        for j in range(i, 5):
            assert r[(i, j)] == sum(c for (k, l), c in EXAMPLE_S.items() if k <= i and l >= j)
    assert r[(0, 3)] == 1 and r[(1, 2)] == 2 and r[(2, 4)] == 1 and r[(0, 4)] == 0


def test_codim_examples():
    assert codim(RIGHT, orbit(1, s00=1, s01=1, s11=1)) == 1
    assert codim(EXAMPLE_Q, Orbit(4, EXAMPLE_S)) == 14


@pytest.mark.parametrize("q, dims", list(grid(3, 2)))
def test_zero_and_dense_orbit_codims(q, dims):
    zero = Orbit.zero(dims)
    assert codim(q, zero) == q.rep_dim(dims) == sum(dims[q.tail(a)] * dims[q.head(a)] for a in q.arrows)
    assert codim(q, dense_orbit(q, dims)) == 0


def test_enumerate_orbits_counts():
    assert len(enumerate_orbits(RIGHT, (1, 1))) == 2
    assert len(enumerate_orbits(RIGHT, (2, 2))) == 3
    assert len(enumerate_orbits(EXAMPLE_Q, EXAMPLE_DIMS)) == 1372 == orbit_count_oracle(4, EXAMPLE_DIMS)


@pytest.mark.parametrize("dims", [(2, 3, 1), (1, 2, 2, 1), (3, 3, 3), (2, 1, 3, 2)])
def test_enumerate_orbits_count_matches_generating_function(dims):
    q = Quiver((1,) * (len(dims) - 1))
    assert len(enumerate_orbits(q, dims)) == orbit_count_oracle(q.n, dims)


@pytest.mark.parametrize("q, dims", [(q, d) for q, d in grid(2, 2)] + [(Quiver.parse("<>"), (3, 1, 2))])
def test_enumerate_orbits_matches_brute_force(q, dims):
    got = enumerate_orbits(q, dims)
    want = brute_orbits(q, dims)
    assert sorted(mu.key() for mu in got) == sorted(mu.key() for mu in want)
    assert len({mu.key() for mu in got}) == len(got)
    flat = [[mu[c] for c in q.intervals()] for mu in got]
    assert flat == sorted(flat)


def test_enumerate_orbits_ignores_orientation():
    a = enumerate_orbits(Quiver.parse(">>"), (2, 1, 2))
    b = enumerate_orbits(Quiver.parse("<>"), (2, 1, 2))
    assert [mu.key() for mu in a] == [mu.key() for mu in b]


def test_euler_form_examples():
    assert euler_form(RIGHT, (1, 1), (1, 1)) == 1
    assert euler_form(RIGHT, (1, 1), (0, 0)) == 0
    assert euler_form(RIGHT, (1, 0), (0, 1)) == -1


def test_ext_hom_examples():
    assert ext_dim(RIGHT, (0, 0), (1, 1)) == 1
    assert ext_dim(RIGHT, (0, 1), (0, 0)) == 0
    assert hom_dim(RIGHT, (0, 0), (0, 1)) == 0
    for q in quivers(3):
        for a in q.intervals():
            assert ext_dim(q, a, a) == 0
            assert hom_dim(q, a, a) == 1
    assert hom_dim(Quiver.parse(">>>"), (0, 1), (2, 3)) == 0


@pytest.mark.parametrize("q", list(quivers(4)), ids=str)
def test_hom_ext_against_linear_algebra(q):
    for a in q.intervals():
        for b in q.intervals():
            h = hom_oracle(q, a, b)
            assert hom_dim(q, a, b) == h, (a, b)
            assert h - ext_dim(q, a, b) == euler_form(q, interval_dims(q, a), interval_dims(q, b)), (a, b)


def test_orbit_json_round_trip():
    mu = Orbit(4, EXAMPLE_S)
    doc = mu.to_json(EXAMPLE_Q)
    assert Orbit.from_json(doc, n=4) == mu
    assert Orbit.from_json('{"s":{"0,0":1,"0,1":1,"1,1":1}}', n=1) == orbit(1, s00=1, s01=1, s11=1)
    with pytest.raises(ValueError):
        Orbit.from_json({"s": {"1,0": 1}}, n=1)
    with pytest.raises(ValueError):
        Orbit.from_json({"s": {"0,0": -1}}, n=1)


@given(st.integers(0, 3).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 2), min_size=n + 1, max_size=n + 1))))
def test_rank_table_is_monotone(args):
    n, dims = args
    q = Quiver((1,) * n)
    for mu in enumerate_orbits(q, dims):
        r = rank_table(mu)
        for i in range(n + 1):
            assert r[(i, i)] == dims[i]
            for j in range(i + 1, n + 1):
                assert r[(i, j)] <= r[(i, j - 1)]
                assert r[(i, j)] <= r[(i + 1, j)]
