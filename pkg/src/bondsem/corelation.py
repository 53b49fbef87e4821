"""Finite corelations: partitions of the disjoint union of inputs and outputs.

A corelation ``dom -> cod`` is stored as a partition of the flat index set
``0 .. dom + cod - 1`` where inputs come first and outputs follow.  Values are
immutable and always canonical, so ``==`` and ``hash`` decide equality of
morphisms in FinCorel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class CorelationError(ValueError):
    pass


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            # keep the smaller index as root so classes come out stable
            if rj < ri:
                ri, rj = rj, ri
            self.parent[rj] = ri

    def classes(self, members: Iterable[int]) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for i in members:
            groups.setdefault(self.find(i), []).append(i)
        return list(groups.values())


def _canonical(blocks: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


@dataclass(frozen=True)
class Corelation:
    dom: int
    cod: int
    blocks: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return self.dom + self.cod

    def block_of(self) -> list[int]:
        """Map each boundary index to the position of its block."""
        owner = [0] * self.size
        for k, block in enumerate(self.blocks):
            for i in block:
                owner[i] = k
        return owner

    def to_json(self) -> dict:
        return {"dom": self.dom, "cod": self.cod, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> "Corelation":
        return make(data["dom"], data["cod"], data["blocks"])

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)
        return f"Corelation({self.dom}->{self.cod}: {body})"

    # operator sugar mirroring the categorical notation
    def __rshift__(self, other: "Corelation") -> "Corelation":
        return compose(other, self)

    def __matmul__(self, other: "Corelation") -> "Corelation":
        return tensor(self, other)


def make(dom: int, cod: int, blocks: Iterable[Iterable[int]]) -> Corelation:
    if dom < 0 or cod < 0:
        raise CorelationError(f"negative boundary size ({dom}, {cod})")
    n = dom + cod
    seen: set[int] = set()
    clean = []
    for block in blocks:
        block = list(block)
        if not block:
            raise CorelationError("empty block")
        for i in block:
            if not isinstance(i, int) or not 0 <= i < n:
                raise CorelationError(f"index {i!r} out of range 0..{n - 1}")
            if i in seen:
                raise CorelationError(f"index {i} appears in more than one block")
            seen.add(i)
        clean.append(block)
    missing = sorted(set(range(n)) - seen)
    if missing:
        raise CorelationError(f"index {missing[0]} is not covered by any block")
    return Corelation(dom, cod, _canonical(clean))


def identity(n: int) -> Corelation:
    return Corelation(n, n, tuple((i, n + i) for i in range(n)))


def braiding(a: int, b: int) -> Corelation:
    n = a + b
    blocks = [(i, n + b + i) for i in range(a)]
    blocks += [(a + j, n + j) for j in range(b)]
    return Corelation(n, n, _canonical(blocks))


def compose(g: Corelation, f: Corelation) -> Corelation:
    """``g`` after ``f``: glue f's outputs to g's inputs and drop closed-off middle parts."""
    if f.cod != g.dom:
        raise CorelationError(f"cannot compose: f has codomain {f.cod}, g has domain {g.dom}")
    a, b, c = f.dom, f.cod, g.cod
    uf = UnionFind(a + b + c)
    # f lives on A+B at offsets 0..a+b-1, g on B+C at offsets a..a+b+c-1
    for block in f.blocks:
        for i in block[1:]:
            uf.union(block[0], i)
    for block in g.blocks:
        for i in block[1:]:
            uf.union(a + block[0], a + i)
    outer = list(range(a)) + list(range(a + b, a + b + c))
    blocks = []
    for cls in uf.classes(outer):
        blocks.append([i if i < a else i - b for i in cls])
    return Corelation(a, c, _canonical(blocks))


def tensor(f: Corelation, g: Corelation) -> Corelation:
    dom, cod = f.dom + g.dom, f.cod + g.cod

    def shift_f(i: int) -> int:
        return i if i < f.dom else i + g.dom

    def shift_g(i: int) -> int:
        return f.dom + i if i < g.dom else dom + f.cod + (i - g.dom)

    blocks = [[shift_f(i) for i in b] for b in f.blocks]
    blocks += [[shift_g(i) for i in b] for b in g.blocks]
    return Corelation(dom, cod, _canonical(blocks))


def dagger(f: Corelation) -> Corelation:
    def swap(i: int) -> int:
        return f.cod + i if i < f.dom else i - f.dom

    return Corelation(f.cod, f.dom, _canonical([swap(i) for i in b] for b in f.blocks))


def equal(f: Corelation, g: Corelation) -> bool:
    return f == g


def tensor_all(*fs: Corelation) -> Corelation:
    out = identity(0)
    for f in fs:
        out = tensor(out, f)
    return out


def compose_all(*fs: Corelation) -> Corelation:
    """Compose in diagrammatic order: ``compose_all(f, g, h)`` is h after g after f."""
    out = fs[0]
    for f in fs[1:]:
        out = compose(f, out)
    return out


WIRE_GENERATORS = {
    "m": (2, 1, [[0, 1, 2]]),
    "i": (0, 1, [[0]]),
    "d": (1, 2, [[0, 1, 2]]),
    "e": (1, 0, [[0]]),
    "cap": (0, 2, [[0, 1]]),
    "cup": (2, 0, [[0, 1]]),
}


def generator(name: str) -> Corelation:
    try:
        dom, cod, blocks = WIRE_GENERATORS[name]
    except KeyError:
        raise CorelationError(f"unknown wire generator {name!r}") from None
    return make(dom, cod, blocks)


def _port_table() -> dict[str, Corelation]:
    m, i, d, e = (generator(x) for x in "mide")
    id1 = identity(1)
    sigma = braiding(1, 1)
    mid = tensor_all(id1, sigma, id1)
    return {
        "m2": tensor_all(id1, compose(e, m), id1),
        "i2": compose(d, i),
        "d2": tensor_all(id1, compose(d, i), id1),
        "e2": compose(e, m),
        "mu2": compose(tensor(m, m), mid),
        "iota2": tensor(i, i),
        "delta2": compose(mid, tensor(d, d)),
        "eps2": tensor(e, e),
    }


PORT_GENERATORS = _port_table()


def port_generator(name: str) -> Corelation:
    try:
        return PORT_GENERATORS[name]
    except KeyError:
        raise CorelationError(f"unknown port generator {name!r}") from None
