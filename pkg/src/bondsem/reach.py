"""Breadth-first enumeration of the corelations a signature can reach.

Terms are grown by leaf count.  Only one term per distinct corelation is
kept, which is sound because composition and tensor are congruences.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bondgraph import eval_corel
from .corelation import Corelation
from .terms import COREL_PORT, Braid, Comp, Gen, Id, Signature, Tensor, Term, typecheck


@dataclass(frozen=True)
class Reached:
    term: Term
    dom: int
    cod: int
    value: Corelation
    size: int


def _leaves(sig: Signature) -> list[Term]:
    return [Gen(g) for g in sorted(sig.generators)] + [Id(0), Id(1), Braid(1, 1)]


def reachable(max_size: int, sig: Signature = COREL_PORT, max_arity: int | None = None) -> list[Reached]:
    """Every distinct corelation denoted by a term with at most ``max_size`` leaves.

    ``max_arity`` (in prop objects) prunes intermediate terms; left as
    ``None`` nothing is pruned.  Results come in discovery order, which is
    deterministic.
    """
    seen: dict[Corelation, Reached] = {}
    by_size: dict[int, list[Reached]] = {}

    def offer(t: Term, size: int) -> None:
        dom, cod = typecheck(t, sig)
        if max_arity is not None and max(dom, cod) > max_arity:
            return
        value = eval_corel(t, sig)
        if value not in seen:
            r = Reached(t, dom, cod, value, size)
            seen[value] = r
            by_size.setdefault(size, []).append(r)

    for leaf in _leaves(sig):
        offer(leaf, 1)
    for size in range(2, max_size + 1):
        for k in range(1, size):
            for a in by_size.get(k, ()):
                for b in by_size.get(size - k, ()):
                    offer(Tensor(a.term, b.term), size)
                    if a.cod == b.dom:
                        offer(Comp(b.term, a.term), size)
    return list(seen.values())


def enumerate_hom(ports_in: int, ports_out: int, max_size: int, sig: Signature = COREL_PORT) -> list[Reached]:
    """Reachable corelations between ``ports_in`` and ``ports_out`` objects."""
    return [r for r in reachable(max_size, sig) if r.dom == ports_in and r.cod == ports_out]
