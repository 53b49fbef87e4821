"""Catalog of equations between prop terms and an exact checker for them.

Each suite is a list of :class:`Equation`.  Both sides are evaluated in a
backend (``corel`` or ``lagrel``) and compared by canonical value, so a law
holds exactly or not at all.  ``expect`` records the outcome the theory
predicts per backend; it is ``True`` unless an equation is a deliberate
negative control.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

from .bondgraph import eval_corel, eval_lagrel, potential_current
from .terms import (
    BOND,
    COREL_PORT,
    COREL_WIRE,
    Braid,
    Gen,
    Id,
    Signature,
    Tensor,
    Term,
    par,
    power,
    seq,
    to_sexpr,
    typecheck,
)

BACKENDS = ("corel", "lagrel", "potential")


@dataclass(frozen=True)
class Equation:
    name: str
    left: Term
    right: Term
    sig: Signature
    citation: str = ""
    expect: dict = field(default_factory=dict, compare=False, hash=False)

    def expected(self, backend: str) -> bool:
        return self.expect.get(backend, True)

    def arities(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return typecheck(self.left, self.sig), typecheck(self.right, self.sig)

    def to_fixture(self) -> dict:
        return {
            "name": self.name,
            "sig": self.sig.name,
            "left": to_sexpr(self.left),
            "right": to_sexpr(self.right),
            "citation": self.citation,
            "expect": self.expect,
        }


@dataclass(frozen=True)
class Verdict:
    equation: str
    backend: str
    holds: bool
    expected: bool
    counterexample: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.holds == self.expected

    def to_json(self) -> dict:
        out = {
            "equation": self.equation,
            "backend": self.backend,
            "holds": self.holds,
            "expected": self.expected,
        }
        if self.counterexample is not None:
            out["counterexample"] = {"left": self.counterexample[0], "right": self.counterexample[1]}
        return out


# -- law families -------------------------------------------------------------

X = Id(1)
SWAP = Braid(1, 1)


def monoid_laws(mu: Term, eta: Term) -> list[tuple[str, Term, Term]]:
    return [
        ("assoc", seq(Tensor(mu, X), mu), seq(Tensor(X, mu), mu)),
        ("unit-left", seq(Tensor(eta, X), mu), X),
        ("unit-right", seq(Tensor(X, eta), mu), X),
    ]


def comonoid_laws(delta: Term, eps: Term) -> list[tuple[str, Term, Term]]:
    return [
        ("coassoc", seq(delta, Tensor(delta, X)), seq(delta, Tensor(X, delta))),
        ("counit-left", seq(delta, Tensor(eps, X)), X),
        ("counit-right", seq(delta, Tensor(X, eps)), X),
    ]


def frobenius_laws(mu: Term, eta: Term, delta: Term, eps: Term, flavour: str) -> list[tuple[str, Term, Term]]:
    """Extraspecial Frobenius laws; ``flavour`` is ``commutative`` or ``symmetric``."""
    laws = monoid_laws(mu, eta) + comonoid_laws(delta, eps)
    laws += [
        ("frobenius-left", seq(Tensor(delta, X), Tensor(X, mu)), seq(mu, delta)),
        ("frobenius-right", seq(Tensor(X, delta), Tensor(mu, X)), seq(mu, delta)),
        ("special", seq(delta, mu), X),
        ("extra", seq(eta, eps), Id(0)),
    ]
    if flavour == "commutative":
        laws += [
            ("commutative", seq(SWAP, mu), mu),
            ("cocommutative", seq(delta, SWAP), delta),
        ]
    elif flavour == "symmetric":
        laws += [
            ("symmetric", seq(SWAP, mu, eps), seq(mu, eps)),
            ("cosymmetric", seq(eta, delta, SWAP), seq(eta, delta)),
        ]
    else:
        raise ValueError(f"unknown flavour {flavour!r}")
    return laws


def bimonoid_compat(mu: Term, delta: Term) -> tuple[str, Term, Term]:
    return (
        "bimonoid",
        seq(mu, delta),
        seq(Tensor(delta, delta), par(X, SWAP, X), Tensor(mu, mu)),
    )


def weak_bimonoid_laws(mu: Term, eta: Term, delta: Term, eps: Term) -> list[tuple[str, Term, Term]]:
    """The three axiom families of a weak bimonoid, written out as five equations."""
    mu_eps = seq(mu, eps)
    eta_delta = seq(eta, delta)
    lhs_counit = seq(Tensor(mu, X), mu, eps)
    lhs_unit = seq(eta, delta, Tensor(delta, X))
    return [
        bimonoid_compat(mu, delta),
        ("weak-counit-1", lhs_counit, seq(par(X, delta, X), Tensor(mu_eps, mu_eps))),
        ("weak-counit-2", lhs_counit, seq(par(X, seq(delta, SWAP), X), Tensor(mu_eps, mu_eps))),
        ("weak-unit-1", lhs_unit, seq(Tensor(eta_delta, eta_delta), par(X, mu, X))),
        ("weak-unit-2", lhs_unit, seq(Tensor(eta_delta, eta_delta), par(X, seq(SWAP, mu), X))),
    ]


def bimonoid_laws(mu: Term, eta: Term, delta: Term, eps: Term) -> list[tuple[str, Term, Term]]:
    return monoid_laws(mu, eta) + comonoid_laws(delta, eps) + [
        bimonoid_compat(mu, delta),
        ("counit-mult", seq(mu, eps), Tensor(eps, eps)),
        ("unit-comult", seq(eta, delta), Tensor(eta, eta)),
        ("counit-unit", seq(eta, eps), Id(0)),
    ]


def _gens(*names: str) -> tuple[Term, ...]:
    return tuple(Gen(n) for n in names)


def _tag(prefix: str, laws, sig: Signature, citation: str) -> list[Equation]:
    return [Equation(f"{prefix}/{name}", left, right, sig, citation) for name, left, right in laws]


# -- suites -------------------------------------------------------------------


def _wire_frobenius() -> list[Equation]:
    laws = frobenius_laws(*_gens("m", "i", "d", "e"), "commutative")
    laws += [
        ("zigzag-left", seq(Tensor(X, Gen("cap")), Tensor(Gen("cup"), X)), X),
        ("zigzag-right", seq(Tensor(Gen("cap"), X), Tensor(X, Gen("cup"))), X),
        ("cap-is-d-after-i", Gen("cap"), seq(Gen("i"), Gen("d"))),
        ("cup-is-e-after-m", Gen("cup"), seq(Gen("m"), Gen("e"))),
    ]
    return _tag("wire", laws, COREL_WIRE, "(1,m,i,d,e) is an extraspecial commutative Frobenius monoid")


def _series() -> list[Equation]:
    laws = frobenius_laws(*_gens("m2", "i2", "d2", "e2"), "symmetric")
    return _tag("series", laws, COREL_PORT, "(2,m2,i2,d2,e2) is an extraspecial symmetric Frobenius monoid")


def _parallel() -> list[Equation]:
    laws = frobenius_laws(*_gens("mu2", "iota2", "delta2", "eps2"), "commutative")
    return _tag("parallel", laws, COREL_PORT, "(2,mu2,iota2,delta2,eps2) is an extraspecial commutative Frobenius monoid")


def _weak_bimonoid() -> list[Equation]:
    cite = "weak bimonoids on the port object and their extra laws"
    eqs = _tag("wb-mu2-d2", weak_bimonoid_laws(*_gens("mu2", "iota2", "d2", "e2")), COREL_PORT, cite)
    eqs += _tag("wb-m2-delta2", weak_bimonoid_laws(*_gens("m2", "i2", "delta2", "eps2")), COREL_PORT, cite)
    m2, i2, d2, e2, mu2, iota2, delta2, eps2 = _gens("m2", "i2", "d2", "e2", "mu2", "iota2", "delta2", "eps2")
    series_then_parallel = seq(delta2, m2)
    parallel_then_series = seq(d2, mu2)
    eqs += _tag("wb-extra", [
        ("eps2-after-i2", seq(i2, eps2), Id(0)),
        ("e2-after-iota2", seq(iota2, e2), Id(0)),
        ("m2-delta2-is-mu2-d2", series_then_parallel, parallel_then_series),
        ("m2-delta2-idempotent", power(series_then_parallel, 2), series_then_parallel),
        ("mu2-d2-idempotent", power(parallel_then_series, 2), parallel_then_series),
    ], COREL_PORT, cite)
    return eqs


def _lagrel_frobenius() -> list[Equation]:
    cite = "two extraspecial commutative Frobenius monoids on k+k"
    eqs = _tag("lag-frob-0", frobenius_laws(*_gens("Mp", "Ip", "Dp", "Ep"), "commutative"), BOND, cite)
    eqs += _tag("lag-frob-1", frobenius_laws(*_gens("M", "I", "D", "E"), "commutative"), BOND, cite)
    return eqs


def _lagrel_bimonoid() -> list[Equation]:
    cite = "the mixed structures on k+k are bimonoids"
    eqs = _tag("lag-bi-a", bimonoid_laws(*_gens("Mp", "Ip", "D", "E")), BOND, cite)
    eqs += _tag("lag-bi-b", bimonoid_laws(*_gens("M", "I", "Dp", "Ep")), BOND, cite)
    return eqs


def _lagrel_inverse() -> list[Equation]:
    M, D, Mp, Dp = _gens("M", "D", "Mp", "Dp")
    halve = seq(D, Mp)   # (codup + add) after (coadd + dup)
    double = seq(Dp, M)  # (add + codup) after (dup + coadd)
    return _tag("lag-inverse", [
        ("halve-then-double", seq(halve, double), X),
        ("double-then-halve", seq(double, halve), X),
    ], BOND, "the two mixed composites are mutually inverse")


def _bondgraph_presentation() -> list[Equation]:
    cite = "defining equations of the bond graph prop"
    M, I, D, E, Mp, Ip, Dp, Ep = _gens("M", "I", "D", "E", "Mp", "Ip", "Dp", "Ep")
    eqs = _tag("bg-frob-1", frobenius_laws(M, I, D, E, "symmetric"), BOND, cite)
    eqs += _tag("bg-frob-0", frobenius_laws(Mp, Ip, Dp, Ep, "symmetric"), BOND, cite)
    eqs += _tag("bg-wb-M-Dp", weak_bimonoid_laws(M, I, Dp, Ep), BOND, cite)
    eqs += _tag("bg-wb-Mp-D", weak_bimonoid_laws(Mp, Ip, D, E), BOND, cite)
    loop_a = seq(Dp, M, D, Mp)
    loop_b = seq(D, Mp, Dp, M)
    eqs += _tag("bg-extra", [
        ("E-after-Ip", seq(Ip, E), Id(0)),
        ("Ep-after-I", seq(I, Ep), Id(0)),
        ("Mp-D-M-Dp-idempotent", power(loop_a, 2), loop_a),
        ("M-Dp-Mp-D-idempotent", power(loop_b, 2), loop_b),
    ], BOND, cite)
    return eqs


def _negative_controls() -> list[Equation]:
    mu2, iota2, d2, e2, m2 = _gens("mu2", "iota2", "d2", "e2", "m2")
    M, Dp, Mp, D = _gens("M", "Dp", "Mp", "D")
    fail_both = {"corel": False, "lagrel": False}
    return [
        Equation("neg/strict-unit-comult", seq(iota2, d2), Tensor(iota2, iota2), COREL_PORT,
                 "strict bimonoid unit law fails for (2,mu2,iota2,d2,e2)", fail_both),
        Equation("neg/strict-counit-mult", seq(mu2, e2), Tensor(e2, e2), COREL_PORT,
                 "strict bimonoid counit law fails for (2,mu2,iota2,d2,e2)", fail_both),
        Equation("neg/series-not-commutative", seq(SWAP, m2), m2, COREL_PORT,
                 "m2 is symmetric but not commutative", fail_both),
        Equation("neg/swapped-junctions", seq(Dp, M), seq(D, Mp), BOND,
                 "m2.delta2 = mu2.d2 holds for corelations but not for bond graphs",
                 {"corel": True, "lagrel": False}),
    ]


SUITES = {
    "wire-frobenius": (_wire_frobenius, ("corel",)),
    "series": (_series, ("corel",)),
    "parallel": (_parallel, ("corel",)),
    "weak-bimonoid": (_weak_bimonoid, ("corel",)),
    "lagrel-frobenius": (_lagrel_frobenius, ("lagrel",)),
    "lagrel-bimonoid": (_lagrel_bimonoid, ("lagrel",)),
    "lagrel-inverse": (_lagrel_inverse, ("lagrel",)),
    "bondgraph-presentation": (_bondgraph_presentation, ("corel", "lagrel")),
    "negative-controls": (_negative_controls, ("corel", "lagrel")),
}


def law_registry(suite: str) -> list[Equation]:
    try:
        build, _ = SUITES[suite]
    except KeyError:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}") from None
    return build()


def default_backends(suite: str) -> tuple[str, ...]:
    return SUITES[suite][1]


def evaluate(t: Term, sig: Signature, backend: str):
    """Evaluate ``t`` in one of three backends.

    ``corel`` reads bond terms through G.  ``lagrel`` reads bond terms through
    F and corelation terms through K.  ``potential`` always goes through K
    (after G for bond terms).
    """
    if backend == "corel":
        return eval_corel(t, sig)
    if backend == "lagrel":
        if sig.name == BOND.name:
            return eval_lagrel(t, sig)
        return potential_current(t, sig)
    if backend == "potential":
        return potential_current(t, sig)
    raise ValueError(f"unknown backend {backend!r}; choose from {', '.join(BACKENDS)}")


def check_equation(eq: Equation, backend: str) -> Verdict:
    left = evaluate(eq.left, eq.sig, backend)
    right = evaluate(eq.right, eq.sig, backend)
    holds = left == right
    witness = None if holds else (left.to_json(), right.to_json())
    return Verdict(eq.name, backend, holds, eq.expected(backend), witness)


def run_suite(suite: str, backend: str) -> list[Verdict]:
    return [check_equation(eq, backend) for eq in law_registry(suite)]


def iter_fixtures() -> Iterator[dict]:
    for suite in SUITES:
        for eq in law_registry(suite):
            yield {"suite": suite, **eq.to_fixture()}


def dump_fixtures() -> str:
    return "".join(json.dumps(f, sort_keys=True) + "\n" for f in iter_fixtures())
