"""Terms of a free prop over a signature.

A term is a tree of generators, identities and braidings glued by
composition and tensor.  Arities count prop objects; the backends decide how
many wires or coordinates one object stands for.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Union


class TermError(ValueError):
    pass


class ArityError(TermError):
    def __init__(self, message: str, path: tuple[str, ...] = ()):
        self.path = path
        where = "/".join(path) if path else "<root>"
        super().__init__(f"{message} (at {where})")


@dataclass(frozen=True)
class Signature:
    name: str
    generators: dict[str, tuple[int, int]]
    daggers: dict[str, str] = field(default_factory=dict)
    # how many wires (corelation backend) one prop object stands for
    wires_per_object: int = 1

    def arity(self, name: str) -> tuple[int, int]:
        try:
            return self.generators[name]
        except KeyError:
            raise TermError(f"unknown generator {name!r} in signature {self.name!r}") from None

    def __hash__(self) -> int:
        return hash(self.name)


def _involution(pairs: dict[str, str]) -> dict[str, str]:
    out = dict(pairs)
    out.update({v: k for k, v in pairs.items()})
    return out


BOND = Signature(
    "bond",
    {"M": (2, 1), "I": (0, 1), "D": (1, 2), "E": (1, 0),
     "Mp": (2, 1), "Ip": (0, 1), "Dp": (1, 2), "Ep": (1, 0)},
    _involution({"M": "D", "I": "E", "Mp": "Dp", "Ip": "Ep"}),
    wires_per_object=2,
)

COREL_WIRE = Signature(
    "corel-wire",
    {"m": (2, 1), "i": (0, 1), "d": (1, 2), "e": (1, 0), "cap": (0, 2), "cup": (2, 0)},
    _involution({"m": "d", "i": "e", "cap": "cup"}),
    wires_per_object=1,
)

COREL_PORT = Signature(
    "corel-port",
    {"m2": (2, 1), "i2": (0, 1), "d2": (1, 2), "e2": (1, 0),
     "mu2": (2, 1), "iota2": (0, 1), "delta2": (1, 2), "eps2": (1, 0)},
    _involution({"m2": "d2", "i2": "e2", "mu2": "delta2", "iota2": "eps2"}),
    wires_per_object=2,
)

SIGNATURES = {s.name: s for s in (BOND, COREL_WIRE, COREL_PORT)}


def get_signature(name: str) -> Signature:
    try:
        return SIGNATURES[name]
    except KeyError:
        raise TermError(f"unknown signature {name!r}; choose from {', '.join(SIGNATURES)}") from None


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Id:
    n: int


@dataclass(frozen=True)
class Braid:
    a: int
    b: int


@dataclass(frozen=True)
class Comp:
    after: "Term"
    before: "Term"


@dataclass(frozen=True)
class Tensor:
    left: "Term"
    right: "Term"


Term = Union[Gen, Id, Braid, Comp, Tensor]


def seq(*terms: Term) -> Term:
    """Compose in diagrammatic order: ``seq(f, g)`` is ``Comp(g, f)``."""
    out = terms[0]
    for t in terms[1:]:
        out = Comp(t, out)
    return out


def par(*terms: Term) -> Term:
    out = terms[0]
    for t in terms[1:]:
        out = Tensor(out, t)
    return out


def typecheck(t: Term, sig: Signature, path: tuple[str, ...] = ()) -> tuple[int, int]:
    if isinstance(t, Gen):
        return sig.arity(t.name)
    if isinstance(t, Id):
        if t.n < 0:
            raise ArityError(f"negative identity size {t.n}", path)
        return t.n, t.n
    if isinstance(t, Braid):
        if t.a < 0 or t.b < 0:
            raise ArityError(f"negative braiding size ({t.a}, {t.b})", path)
        return t.a + t.b, t.a + t.b
    if isinstance(t, Comp):
        before = typecheck(t.before, sig, path + ("before",))
        after = typecheck(t.after, sig, path + ("after",))
        if before[1] != after[0]:
            raise ArityError(f"codomain {before[1]} does not match domain {after[0]}", path)
        return before[0], after[1]
    if isinstance(t, Tensor):
        left = typecheck(t.left, sig, path + ("left",))
        right = typecheck(t.right, sig, path + ("right",))
        return left[0] + right[0], left[1] + right[1]
    raise TermError(f"not a term: {t!r}")


def mirror(t: Term, sig: Signature) -> Term:
    """Vertical reflection of a term (the dagger of the free prop)."""
    if isinstance(t, Gen):
        try:
            return Gen(sig.daggers[t.name])
        except KeyError:
            raise TermError(f"generator {t.name!r} has no registered dagger") from None
    if isinstance(t, Id):
        return t
    if isinstance(t, Braid):
        return Braid(t.b, t.a)
    if isinstance(t, Comp):
        return Comp(mirror(t.before, sig), mirror(t.after, sig))
    return Tensor(mirror(t.left, sig), mirror(t.right, sig))


def leaves(t: Term) -> int:
    if isinstance(t, Comp):
        return leaves(t.after) + leaves(t.before)
    if isinstance(t, Tensor):
        return leaves(t.left) + leaves(t.right)
    return 1


def power(t: Term, k: int) -> Term:
    return seq(*([t] * k))


# -- S-expressions ------------------------------------------------------------


def to_sexpr(t: Term) -> str:
    if isinstance(t, Gen):
        return f"(gen {t.name})"
    if isinstance(t, Id):
        return f"(id {t.n})"
    if isinstance(t, Braid):
        return f"(sigma {t.a} {t.b})"
    if isinstance(t, Comp):
        return f"(comp {to_sexpr(t.after)} {to_sexpr(t.before)})"
    return f"(tensor {to_sexpr(t.left)} {to_sexpr(t.right)})"


_SEXPR_TOKEN = re.compile(r"\s*(\(|\)|[^\s()]+)")


def from_sexpr(text: str) -> Term:
    tokens = _SEXPR_TOKEN.findall(text)
    pos = 0

    def expr() -> Term:
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != "(":
            raise TermError(f"expected '(' at token {pos} in {text!r}")
        head = tokens[pos + 1]
        pos += 2
        if head == "gen":
            node: Term = Gen(tokens[pos])
            pos += 1
        elif head == "id":
            node = Id(int(tokens[pos]))
            pos += 1
        elif head == "sigma":
            node = Braid(int(tokens[pos]), int(tokens[pos + 1]))
            pos += 2
        elif head in ("comp", "tensor"):
            first = expr()
            second = expr()
            node = Comp(first, second) if head == "comp" else Tensor(first, second)
        else:
            raise TermError(f"unknown s-expression head {head!r}")
        if pos >= len(tokens) or tokens[pos] != ")":
            raise TermError(f"expected ')' at token {pos} in {text!r}")
        pos += 1
        return node

    try:
        node = expr()
    except IndexError:
        raise TermError(f"truncated s-expression {text!r}") from None
    if pos != len(tokens):
        raise TermError(f"trailing tokens in {text!r}")
    return node


# -- random terms -------------------------------------------------------------


def random_term(size: int, seed: int, sig: Signature, max_arity: int = 4) -> Term:
    """A well-typed term with exactly ``size`` leaves, determined by ``seed``.

    Grows a term step by step: tensor a fresh leaf on a random side, compose
    a leaf whose arity matches the whole boundary, or compose a generator
    padded with an identity (two leaves) so it acts on part of the boundary.
    Tensoring stops once a boundary reaches ``max_arity`` objects.
    """
    if size < 1:
        raise TermError("random terms need at least one leaf")
    rng = random.Random(seed)
    gens = sorted(sig.generators)

    def any_leaf() -> Term:
        roll = rng.random()
        if roll < 0.7:
            return Gen(rng.choice(gens))
        if roll < 0.85:
            return Id(rng.randint(0, 2))
        return Braid(rng.randint(1, 2), rng.randint(1, 2))

    def leaf_with_dom(n: int) -> Term:
        options: list[Term] = [Gen(g) for g in gens if sig.generators[g][0] == n]
        options += [Braid(a, n - a) for a in range(1, n)]
        if rng.random() < 0.15 or not options:
            return Id(n)
        return rng.choice(options)

    def leaf_with_cod(n: int) -> Term:
        options: list[Term] = [Gen(g) for g in gens if sig.generators[g][1] == n]
        options += [Braid(a, n - a) for a in range(1, n)]
        if rng.random() < 0.15 or not options:
            return Id(n)
        return rng.choice(options)

    def padded(leaf: Term, width: int) -> Term:
        # leaf plus an identity wire bundle on a random side
        pad = Id(width)
        return Tensor(leaf, pad) if rng.random() < 0.5 else Tensor(pad, leaf)

    t = any_leaf()
    dom, cod = typecheck(t, sig)
    remaining = size - 1
    while remaining:
        wide = max(dom, cod) >= max_arity
        roll = rng.random()
        if remaining >= 2 and (wide or roll < 0.25) and max(dom, cod) > 2:
            # act on part of the boundary: a generator beside an identity
            if cod >= dom:
                g = rng.choice([g for g in gens if 0 < sig.generators[g][0] <= cod])
                t = Comp(padded(Gen(g), cod - sig.generators[g][0]), t)
            else:
                g = rng.choice([g for g in gens if 0 < sig.generators[g][1] <= dom])
                t = Comp(t, padded(Gen(g), dom - sig.generators[g][1]))
            remaining -= 2
        elif not wide and roll < 0.55:
            leaf = any_leaf()
            t = Tensor(t, leaf) if rng.random() < 0.5 else Tensor(leaf, t)
            remaining -= 1
        elif roll < 0.8:
            t = Comp(leaf_with_dom(cod), t)
            remaining -= 1
        else:
            t = Comp(t, leaf_with_cod(dom))
            remaining -= 1
        dom, cod = typecheck(t, sig)
    return t
