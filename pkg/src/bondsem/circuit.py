"""Ideal-wire circuits: graphs with input and output maps into their nodes.

Circuits are never compared directly; everything observable goes through
:func:`underlying_corelation`, which collapses connected components and
throws away the ones no terminal can reach.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .corelation import Corelation, UnionFind, _canonical


class CircuitError(ValueError):
    pass


@dataclass(frozen=True)
class Circuit:
    node_count: int
    edges: tuple[tuple[int, int], ...]
    input_map: tuple[int, ...]
    output_map: tuple[int, ...]

    @property
    def dom(self) -> int:
        return len(self.input_map)

    @property
    def cod(self) -> int:
        return len(self.output_map)

    def to_json(self) -> dict:
        return {
            "nodes": self.node_count,
            "edges": [list(e) for e in self.edges],
            "inputs": list(self.input_map),
            "outputs": list(self.output_map),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Circuit":
        try:
            return make_circuit(data["nodes"], data["edges"], data["inputs"], data["outputs"])
        except (KeyError, TypeError) as exc:
            raise CircuitError(f"malformed circuit description: {exc}") from None


@dataclass(frozen=True)
class ComponentMap:
    component_count: int
    assignment: tuple[int, ...]


def make_circuit(node_count, edges, input_map, output_map) -> Circuit:
    if node_count < 0:
        raise CircuitError("negative node count")
    edges = tuple((int(s), int(t)) for s, t in edges)
    for where, nodes in (("edge", [v for e in edges for v in e]), ("input", input_map), ("output", output_map)):
        for v in nodes:
            if not 0 <= v < node_count:
                raise CircuitError(f"{where} refers to node {v}, but there are {node_count} nodes")
    return Circuit(node_count, edges, tuple(input_map), tuple(output_map))


def identity_circuit(n: int) -> Circuit:
    return Circuit(n, (), tuple(range(n)), tuple(range(n)))


def compose_circuits(g: Circuit, f: Circuit) -> Circuit:
    """Glue ``f``'s outputs to ``g``'s inputs (pushout over the shared boundary)."""
    if f.cod != g.dom:
        raise CircuitError(f"cannot compose: f has {f.cod} outputs, g has {g.dom} inputs")
    total = f.node_count + g.node_count
    uf = UnionFind(total)
    for y in range(f.cod):
        uf.union(f.output_map[y], f.node_count + g.input_map[y])
    roots = sorted({uf.find(v) for v in range(total)})
    index = {r: k for k, r in enumerate(roots)}

    def node(v: int) -> int:
        return index[uf.find(v)]

    edges = [(node(s), node(t)) for s, t in f.edges]
    edges += [(node(f.node_count + s), node(f.node_count + t)) for s, t in g.edges]
    inputs = [node(v) for v in f.input_map]
    outputs = [node(f.node_count + v) for v in g.output_map]
    return Circuit(len(roots), tuple(edges), tuple(inputs), tuple(outputs))


def tensor_circuits(f: Circuit, g: Circuit) -> Circuit:
    k = f.node_count
    return Circuit(
        k + g.node_count,
        f.edges + tuple((s + k, t + k) for s, t in g.edges),
        f.input_map + tuple(v + k for v in g.input_map),
        f.output_map + tuple(v + k for v in g.output_map),
    )


def connected_components(c: Circuit) -> ComponentMap:
    uf = UnionFind(c.node_count)
    for s, t in c.edges:
        uf.union(s, t)
    labels: dict[int, int] = {}
    assignment = []
    for v in range(c.node_count):
        assignment.append(labels.setdefault(uf.find(v), len(labels)))
    return ComponentMap(len(labels), tuple(assignment))


def underlying_corelation(c: Circuit) -> Corelation:
    comp = connected_components(c).assignment
    terminals = [comp[v] for v in c.input_map] + [comp[v] for v in c.output_map]
    groups: dict[int, list[int]] = {}
    for idx, k in enumerate(terminals):
        groups.setdefault(k, []).append(idx)
    return Corelation(c.dom, c.cod, _canonical(groups.values()))


def to_dot(c: Circuit, name: str = "circuit") -> str:
    lines = [f"graph {name} {{", "  rankdir=LR;"]
    for v in range(c.node_count):
        lines.append(f'  n{v} [shape=point, width=0.12, xlabel="{v}"];')
    for k, v in enumerate(c.input_map):
        lines.append(f'  x{k} [shape=circle, style=filled, fillcolor=plum, label="x{k}"];')
        lines.append(f"  x{k} -- n{v} [style=dashed];")
    for k, v in enumerate(c.output_map):
        lines.append(f'  y{k} [shape=doublecircle, style=filled, fillcolor=plum, label="y{k}"];')
        lines.append(f"  n{v} -- y{k} [style=dashed];")
    for s, t in c.edges:
        lines.append(f"  n{s} -- n{t};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_circuit(path: str | Path) -> Circuit:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise CircuitError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise CircuitError(f"{path}: expected a JSON object")
    return Circuit.from_json(data)


# Sample circuits: nodes A,B,C,D with a doubled A-B edge, then a
# three-node circuit whose inputs match the first one's outputs.
EXAMPLE_XY = make_circuit(4, [(0, 1), (0, 1), (0, 2), (2, 1), (2, 3)], [0], [1, 3])
EXAMPLE_YZ = make_circuit(3, [(0, 1), (2, 1)], [0, 2], [1, 2])
