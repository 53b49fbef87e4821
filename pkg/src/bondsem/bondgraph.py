"""Semantics of bond-graph terms.

Two evaluations of the bond prop are provided:

* ``eval_corel`` sends a port to two wires and each junction to its
  corelation (the functor G), and ``black_box`` then reads off potentials and
  currents (the functor K).
* ``eval_lagrel`` sends a port to an (effort, flow) pair and each junction to
  its Lagrangian relation (the functor F).

``alpha`` converts (voltage, current) on a port into potentials and currents
on its two terminals, and ``check_naturality`` compares the two ways round
the square built from it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import corelation as cr
from . import linrel as lr
from .corelation import Corelation
from .linrel import LinearRelation
from .terms import BOND, COREL_PORT, COREL_WIRE, Braid, Comp, Gen, Id, Signature, Tensor, Term, random_term, typecheck

BOND_TO_PORT = {
    "M": "m2", "I": "i2", "D": "d2", "E": "e2",
    "Mp": "mu2", "Ip": "iota2", "Dp": "delta2", "Ep": "eps2",
}


def _corel_leaf(name: str, sig: Signature) -> Corelation:
    if sig.name == BOND.name:
        return cr.port_generator(BOND_TO_PORT[name])
    if sig.name == COREL_PORT.name:
        return cr.port_generator(name)
    if sig.name == COREL_WIRE.name:
        return cr.generator(name)
    raise ValueError(f"signature {sig.name!r} has no corelation semantics")


def eval_corel(t: Term, sig: Signature = BOND) -> Corelation:
    typecheck(t, sig)
    return _eval_corel(t, sig)


def _eval_corel(t: Term, sig: Signature) -> Corelation:
    w = sig.wires_per_object
    if isinstance(t, Gen):
        return _corel_leaf(t.name, sig)
    if isinstance(t, Id):
        return cr.identity(w * t.n)
    if isinstance(t, Braid):
        return cr.braiding(w * t.a, w * t.b)
    if isinstance(t, Comp):
        return cr.compose(_eval_corel(t.after, sig), _eval_corel(t.before, sig))
    return cr.tensor(_eval_corel(t.left, sig), _eval_corel(t.right, sig))


def eval_lagrel(t: Term, sig: Signature = BOND) -> LinearRelation:
    """Effort/flow semantics of a bond term."""
    if sig.name != BOND.name:
        raise ValueError("effort/flow semantics is defined for bond terms only")
    typecheck(t, sig)
    return _eval_lagrel(t)


def _eval_lagrel(t: Term) -> LinearRelation:
    if isinstance(t, Gen):
        return lr.pair_generator(t.name)
    if isinstance(t, Id):
        return lr.rel_identity(2 * t.n)
    if isinstance(t, Braid):
        return lr.block_swap(2 * t.a, 2 * t.b)
    if isinstance(t, Comp):
        return lr.rel_compose(_eval_lagrel(t.after), _eval_lagrel(t.before))
    return lr.rel_tensor(_eval_lagrel(t.left), _eval_lagrel(t.right))


@lru_cache(maxsize=4096)
def black_box(c: Corelation) -> LinearRelation:
    """Potentials agree within a block; input current into a block equals output current.

    Terminal ``t`` (inputs first) owns coordinates ``2t`` (potential) and
    ``2t + 1`` (current).
    """
    n = 2 * c.size
    rows = []
    for block in c.blocks:
        for a, b in zip(block, block[1:]):
            row = [0] * n
            row[2 * a], row[2 * b] = 1, -1
            rows.append(row)
        row = [0] * n
        for t in block:
            row[2 * t + 1] = 1 if t < c.dom else -1
        rows.append(row)
    return lr.from_constraints(2 * c.dom, 2 * c.cod, rows)


def potential_current(t: Term, sig: Signature = BOND) -> LinearRelation:
    """The composite K after G (or K alone for wire and port corelation terms)."""
    return black_box(eval_corel(t, sig))


ORIENTATIONS = ("forward", "power")


@lru_cache(maxsize=64)
def alpha(n: int, orientation: str = "forward") -> LinearRelation:
    """``k^(2n) -> k^(4n)``: per port, V = phi2 - phi1 and I = I1 = -I2.

    With ``orientation="power"`` the voltage is ``phi1 - phi2`` instead, which
    makes ``V*I`` equal the power ``phi1*I1 + phi2*I2`` and the relation
    Lagrangian.
    """
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}")
    s = 1 if orientation == "forward" else -1
    # coordinates (V, I, phi1, I1, phi2, I2)
    unit = lr.from_constraints(2, 4, [
        [1, 0, s, 0, -s, 0],
        [0, 1, 0, -1, 0, 0],
        [0, 0, 0, 1, 0, 1],
    ])
    return lr.rel_tensor_all(*([unit] * n))


@dataclass(frozen=True)
class NaturalityReport:
    term: Term
    dom: int
    cod: int
    left: LinearRelation   # alpha_n after F(t)
    right: LinearRelation  # KiG(t) after alpha_m
    equal: bool
    left_only: tuple       # basis vectors of left outside right
    right_only: tuple
    sandwich_equal: bool   # alpha_n^dagger . KiG(t) . alpha_m == F(t)

    def summary(self) -> dict:
        return {
            "dom": self.dom,
            "cod": self.cod,
            "dim_left": self.left.dim,
            "dim_right": self.right.dim,
            "equal": self.equal,
            "sandwich_equal": self.sandwich_equal,
        }


def _outside(a: LinearRelation, b: LinearRelation) -> tuple:
    return tuple(tuple(str(x) for x in v) for v in a.basis if not b.space.contains(v))


def check_naturality(t: Term, orientation: str = "forward") -> NaturalityReport:
    m, n = typecheck(t, BOND)
    f = eval_lagrel(t)
    k = potential_current(t)
    left = lr.rel_compose(alpha(n, orientation), f)
    right = lr.rel_compose(k, alpha(m, orientation))
    sandwich = lr.rel_compose(lr.rel_dagger(alpha(n, orientation)), right)
    return NaturalityReport(
        term=t,
        dom=m,
        cod=n,
        left=left,
        right=right,
        equal=left == right,
        left_only=_outside(left, right),
        right_only=_outside(right, left),
        sandwich_equal=sandwich == f,
    )


def sweep_terms(count: int, max_size: int, seed: int) -> list[Term]:
    """``count`` random bond terms with between 1 and ``max_size`` leaves."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        size = rng.randint(1, max_size)
        out.append(random_term(size, rng.randrange(2**32), BOND))
    return out


def naturality_sweep(count: int, max_size: int, seed: int, orientation: str = "forward") -> list[NaturalityReport]:
    return [check_naturality(t, orientation) for t in sweep_terms(count, max_size, seed)]
