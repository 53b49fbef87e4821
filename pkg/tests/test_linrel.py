import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from bondsem import linrel as lr
from bondsem.linrel import LinRelError

from oracles import random_rational_rows, sympy_compose, sympy_row_space

RATIONALS = st.fractions(min_value=-4, max_value=4, max_denominator=4)


@st.composite
def relations(draw, dom=None, cod=None, max_side=3):
    a = draw(st.integers(0, max_side)) if dom is None else dom
    b = draw(st.integers(0, max_side)) if cod is None else cod
    k = draw(st.integers(0, a + b))
    rows = draw(st.lists(st.lists(RATIONALS, min_size=a + b, max_size=a + b), min_size=k, max_size=k))
    return lr.relation(a, b, rows)


@st.composite
def composable(draw, count=3):
    sizes = [draw(st.integers(0, 3)) for _ in range(count + 1)]
    return [draw(relations(sizes[i], sizes[i + 1])) for i in range(count)]


def test_rref_example():
    rows = lr.rref([[2, 4, 6], [1, 2, 4], [3, 6, 9]], 3)
    assert rows == ((1, 2, 0), (0, 0, 1))
    assert all(isinstance(x, Fraction) for row in rows for x in row)


def test_nullspace_is_annihilated():
    rows = [[1, 2, 3, 4], [0, 1, 1, 0]]
    for v in lr.nullspace(rows, 4):
        assert all(sum(Fraction(a) * b for a, b in zip(r, v)) == 0 for r in rows)
    assert len(lr.nullspace(rows, 4)) == 2


def test_canonical_basis_is_independent_of_spanning_set():
    a = lr.relation(1, 1, [[1, 2], [2, 4], [0, 0]])
    b = lr.relation(1, 1, [[Fraction(1, 2), 1]])
    assert a == b
    assert a.basis == ((1, 2),)


def test_compose_rejects_mismatch():
    with pytest.raises(LinRelError):
        lr.rel_compose(lr.rel_identity(2), lr.rel_identity(3))


def test_relation_rejects_wrong_width():
    with pytest.raises(LinRelError):
        lr.relation(1, 1, [[1, 2, 3]])


def test_dup_then_add_doubles():
    doubled = lr.rel_compose(lr.scalar_generator("add"), lr.scalar_generator("dup"))
    assert doubled == lr.graph([[2]], 1, 1)


def test_codup_after_dup_is_identity():
    assert lr.rel_compose(lr.scalar_generator("codup"), lr.scalar_generator("dup")) == lr.rel_identity(1)


def test_from_constraints_matches_explicit_span():
    # x + y = z on k^2 -> k
    r = lr.from_constraints(2, 1, [[1, 1, -1]])
    assert r == lr.scalar_generator("add")


def test_constraints_of_round_trip():
    r = lr.relation(2, 2, [[1, 0, 1, 1], [0, 1, -1, 2]])
    assert lr.from_constraints(2, 2, lr.constraints_of(r)) == r


def test_pair_generator_M_is_one_junction():
    # (E1,F1,E2,F2,E3,F3): E1 + E2 = E3, F1 = F2 = F3
    expected = lr.from_constraints(4, 2, [
        [1, 0, 1, 0, -1, 0],
        [0, 1, 0, -1, 0, 0],
        [0, 0, 0, 1, 0, -1],
    ])
    assert lr.pair_generator("M") == expected


@pytest.mark.parametrize("name, partner", [("M", "D"), ("I", "E"), ("Mp", "Dp"), ("Ip", "Ep")])
def test_pair_generators_are_dagger_pairs(name, partner):
    assert lr.rel_dagger(lr.pair_generator(name)) == lr.pair_generator(partner)


@pytest.mark.parametrize("name", sorted(lr.PAIR_GENERATORS))
def test_pair_generators_are_lagrangian(name):
    assert lr.is_lagrangian(lr.pair_generator(name))


def test_non_lagrangian_examples():
    # the full relation k^2 -> k^2 is coisotropic but too big
    assert not lr.is_lagrangian(lr.relation(2, 2, [[1 if i == j else 0 for j in range(4)] for i in range(4)]))
    # a graph that scales effort but not flow breaks the form
    assert not lr.is_lagrangian(lr.graph([[2, 0], [0, 1]], 2, 2))
    with pytest.raises(LinRelError):
        lr.relation_signs(lr.rel_identity(1))


def test_orthogonal_of_lagrangian_is_itself():
    r = lr.pair_generator("M")
    space = r.space
    assert lr.subspace_equal(lr.orthogonal(space, lr.relation_signs(r)), space)


@given(relations())
def test_identity_laws(r):
    assert lr.rel_compose(r, lr.rel_identity(r.dom_dim)) == r
    assert lr.rel_compose(lr.rel_identity(r.cod_dim), r) == r


@settings(max_examples=60)
@given(composable())
def test_compose_associative(rs):
    r, s, t = rs
    assert lr.rel_compose(t, lr.rel_compose(s, r)) == lr.rel_compose(lr.rel_compose(t, s), r)


@settings(max_examples=60)
@given(composable(2), composable(2))
def test_interchange(p, q):
    (f, g), (h, k) = p, q
    lhs = lr.rel_compose(lr.rel_tensor(g, k), lr.rel_tensor(f, h))
    rhs = lr.rel_tensor(lr.rel_compose(g, f), lr.rel_compose(k, h))
    assert lhs == rhs


@given(composable(2))
def test_dagger_reverses_composition(rs):
    r, s = rs
    assert lr.rel_dagger(lr.rel_compose(s, r)) == lr.rel_compose(lr.rel_dagger(r), lr.rel_dagger(s))
    assert lr.rel_dagger(lr.rel_dagger(r)) == r


@given(relations())
def test_json_round_trip(r):
    assert lr.LinearRelation.from_json(r.to_json()) == r


@given(relations())
def test_basis_is_rref(r):
    assert lr.rref(r.basis, r.dom_dim + r.cod_dim) == r.basis


@given(st.integers(0, 3), st.integers(0, 3))
def test_block_swap_inverse(a, b):
    assert lr.rel_compose(lr.block_swap(b, a), lr.block_swap(a, b)) == lr.rel_identity(a + b)


@st.composite
def lagrangians(draw, ports_in, ports_out):
    """Composites of pair generators, which stay Lagrangian."""
    names = ["M", "I", "D", "E", "Mp", "Ip", "Dp", "Ep"]
    r = lr.rel_identity(2 * ports_in)
    for _ in range(draw(st.integers(0, 3))):
        name = draw(st.sampled_from(names))
        g = lr.pair_generator(name)
        width = r.cod_dim // 2
        gin = g.dom_dim // 2
        if gin > width:
            continue
        pad = draw(st.integers(0, width - gin))
        step = lr.rel_tensor_all(lr.rel_identity(2 * pad), g, lr.rel_identity(2 * (width - gin - pad)))
        r = lr.rel_compose(step, r)
    return r


@given(lagrangians(2, 0))
def test_lagrangian_closed_under_composition(r):
    assert lr.is_lagrangian(r)


def test_compose_matches_sympy_oracle():
    rng = random.Random(2024)
    for _ in range(25):
        a, b, c = rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)
        r_rows = random_rational_rows(rng, rng.randint(0, a + b), a + b)
        s_rows = random_rational_rows(rng, rng.randint(0, b + c), b + c)
        r, s = lr.relation(a, b, r_rows), lr.relation(b, c, s_rows)
        got = lr.rel_compose(s, r)
        want = sympy_compose([list(v) for v in r.basis], [list(v) for v in s.basis], a, b, c)
        assert sympy_row_space([list(v) for v in got.basis], a + c) == want


def test_sympy_cross_check_of_rref():
    m = [[3, 1, 4, 1], [5, 9, 2, 6], [8, 10, 6, 7]]
    ours = lr.rref(m, 4)
    theirs = sympy.Matrix(m).rref()[0]
    assert [list(r) for r in ours] == [[Fraction(int(x.p), int(x.q)) for x in theirs.row(i)] for i in range(len(ours))]
