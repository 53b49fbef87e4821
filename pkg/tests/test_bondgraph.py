import pytest
from hypothesis import given, settings, strategies as st

from bondsem import corelation as cr
from bondsem import linrel as lr
from bondsem.bondgraph import (
    alpha,
    black_box,
    check_naturality,
    eval_corel,
    eval_lagrel,
    naturality_sweep,
    potential_current,
    sweep_terms,
)
from bondsem.terms import BOND, COREL_WIRE, Braid, Comp, Gen, Id, Tensor, mirror, random_term

from test_corelation import corelations

BOND_GENS = sorted(BOND.generators)


def test_G_on_generators():
    pairs = {"M": "m2", "I": "i2", "D": "d2", "E": "e2",
             "Mp": "mu2", "Ip": "iota2", "Dp": "delta2", "Ep": "eps2"}
    for g, c in pairs.items():
        assert eval_corel(Gen(g)) == cr.port_generator(c)


def test_G_on_structure():
    assert eval_corel(Id(2)) == cr.identity(4)
    assert eval_corel(Braid(1, 1)) == cr.braiding(2, 2)


def test_F_on_structure():
    assert eval_lagrel(Id(1)) == lr.rel_identity(2)
    assert eval_lagrel(Braid(1, 2)) == lr.block_swap(2, 4)


def test_eval_lagrel_needs_bond():
    with pytest.raises(ValueError):
        eval_lagrel(Gen("m"), COREL_WIRE)


def test_black_box_of_wire_generators():
    # m: two inputs and an output on one node
    expected = lr.from_constraints(4, 2, [
        [1, 0, -1, 0, 0, 0],
        [0, 0, 1, 0, -1, 0],
        [0, 1, 0, 1, 0, -1],
    ])
    assert black_box(cr.generator("m")) == expected
    # e: one input, current must vanish
    assert black_box(cr.generator("e")) == lr.from_constraints(2, 0, [[0, 1]])


def test_F_and_G_respect_dagger():
    for g in BOND_GENS:
        t = Gen(g)
        assert eval_lagrel(mirror(t, BOND)) == lr.rel_dagger(eval_lagrel(t))
        assert eval_corel(mirror(t, BOND)) == cr.dagger(eval_corel(t))


@st.composite
def composable_corelations(draw):
    a, b, c = (draw(st.integers(0, 4)) for _ in range(3))
    return draw(corelations(a, b)), draw(corelations(b, c))


@settings(max_examples=60, deadline=None)
@given(composable_corelations())
def test_K_preserves_composition(fg):
    f, g = fg
    assert black_box(cr.compose(g, f)) == lr.rel_compose(black_box(g), black_box(f))


@settings(deadline=None)
@given(corelations(), corelations(max_side=2))
def test_K_preserves_tensor_and_dagger(f, g):
    assert black_box(cr.tensor(f, g)) == lr.rel_tensor(black_box(f), black_box(g))
    assert black_box(cr.dagger(f)) == lr.rel_dagger(black_box(f))


@settings(deadline=None)
@given(corelations())
def test_K_images_are_lagrangian(f):
    assert lr.is_lagrangian(black_box(f))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8), st.integers(0, 10_000))
def test_F_images_are_lagrangian(size, seed):
    assert lr.is_lagrangian(eval_lagrel(random_term(size, seed, BOND)))


@pytest.mark.parametrize("n", range(6))
def test_alpha_has_left_inverse(n):
    for orientation in ("forward", "power"):
        a = alpha(n, orientation)
        assert lr.rel_compose(lr.rel_dagger(a), a) == lr.rel_identity(2 * n)


def test_alpha_lagrangian_depends_on_orientation():
    assert lr.is_lagrangian(alpha(1, "power"))
    assert lr.is_lagrangian(alpha(3, "power"))
    # V = phi2 - phi1 pairs V*I against -(phi1*I1 + phi2*I2)
    assert not lr.is_lagrangian(alpha(1, "forward"))


def test_alpha_rejects_unknown_orientation():
    with pytest.raises(ValueError):
        alpha(1, "sideways")


def test_worked_sandwich_for_M():
    # (V', I', V'', I'', V, I): V' + V'' = V and I = I' = I''
    expected = lr.from_constraints(4, 2, [
        [1, 0, 1, 0, -1, 0],
        [0, 1, 0, 0, 0, -1],
        [0, 0, 0, 1, 0, -1],
    ])
    sandwich = lr.rel_compose_all(alpha(2), potential_current(Gen("M")), lr.rel_dagger(alpha(1)))
    assert sandwich == expected == eval_lagrel(Gen("M"))


@pytest.mark.parametrize("name", ["M", "I", "E", "Mp", "Ip", "Ep"])
def test_naturality_square_on_generators(name):
    report = check_naturality(Gen(name))
    assert report.equal and report.sandwich_equal


@pytest.mark.parametrize("name", ["D", "Dp"])
def test_naturality_square_fails_on_comultiplications(name):
    # the sandwich still recovers F, but the square itself does not commute
    report = check_naturality(Gen(name))
    assert report.sandwich_equal
    assert not report.equal
    assert report.left_only or report.right_only


def test_sandwich_cannot_separate_G_equal_terms():
    # G identifies these two terms while F does not, so no alpha can fix both
    a = Comp(Gen("M"), Gen("Dp"))
    b = Comp(Gen("Mp"), Gen("D"))
    assert eval_corel(a) == eval_corel(b)
    assert eval_lagrel(a) != eval_lagrel(b)
    assert not (check_naturality(a).sandwich_equal and check_naturality(b).sandwich_equal)


def test_structure_morphisms_are_natural():
    for t in (Id(0), Id(2), Braid(1, 1), Tensor(Gen("M"), Id(1))):
        assert check_naturality(t).equal


def test_sweep_is_deterministic():
    assert sweep_terms(5, 6, 3) == sweep_terms(5, 6, 3)
    reports = naturality_sweep(5, 6, 3)
    assert [r.summary() for r in reports] == [r.summary() for r in naturality_sweep(5, 6, 3)]
