import json

import pytest
from hypothesis import given, strategies as st

from bondsem import corelation as cr
from bondsem.circuit import (
    EXAMPLE_XY,
    EXAMPLE_YZ,
    Circuit,
    CircuitError,
    compose_circuits,
    connected_components,
    identity_circuit,
    load_circuit,
    make_circuit,
    tensor_circuits,
    to_dot,
    underlying_corelation,
)


@st.composite
def circuits(draw, dom=None, cod=None):
    a = draw(st.integers(0, 3)) if dom is None else dom
    b = draw(st.integers(0, 3)) if cod is None else cod
    n = draw(st.integers(1, 5))
    node = st.integers(0, n - 1)
    edges = draw(st.lists(st.tuples(node, node), max_size=6))
    inputs = draw(st.lists(node, min_size=a, max_size=a))
    outputs = draw(st.lists(node, min_size=b, max_size=b))
    return make_circuit(n, edges, inputs, outputs)


@st.composite
def composable_circuits(draw):
    a, b, c = (draw(st.integers(0, 3)) for _ in range(3))
    return draw(circuits(a, b)), draw(circuits(b, c))


def test_example_circuits():
    assert underlying_corelation(EXAMPLE_XY) == cr.make(1, 2, [[0, 1, 2]])
    both = compose_circuits(EXAMPLE_YZ, EXAMPLE_XY)
    assert underlying_corelation(both) == cr.make(1, 2, [[0, 1, 2]])


def test_edgeless_two_node_circuit():
    c = make_circuit(2, [], [0], [1])
    assert underlying_corelation(c) == cr.make(1, 1, [[0], [1]])


def test_unreachable_component_is_dropped():
    c = make_circuit(4, [(0, 1), (2, 3)], [0], [1])
    assert connected_components(c).component_count == 2
    assert underlying_corelation(c) == cr.identity(1)


def test_shared_node_terminals():
    c = make_circuit(1, [], [0, 0], [0])
    assert underlying_corelation(c) == cr.make(2, 1, [[0, 1, 2]])


def test_bad_node_reference():
    with pytest.raises(CircuitError, match="node 3"):
        make_circuit(3, [(0, 3)], [0], [1])


def test_compose_mismatch():
    with pytest.raises(CircuitError):
        compose_circuits(identity_circuit(2), identity_circuit(1))


def test_load_round_trip(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps(EXAMPLE_XY.to_json()))
    assert load_circuit(path) == EXAMPLE_XY


@pytest.mark.parametrize("text", ["[1, 2]", "{\"nodes\": 2}", "not json"])
def test_load_rejects_malformed(tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    with pytest.raises(CircuitError):
        load_circuit(path)


def test_dot_mentions_every_terminal():
    dot = to_dot(EXAMPLE_XY)
    assert dot.startswith("graph circuit {")
    assert "x0" in dot and "y0" in dot and "y1" in dot
    assert dot.count(" -- n") + dot.count("-- y") >= len(EXAMPLE_XY.edges) + EXAMPLE_XY.cod


@given(composable_circuits())
def test_underlying_corelation_preserves_composition(fg):
    f, g = fg
    lhs = underlying_corelation(compose_circuits(g, f))
    rhs = cr.compose(underlying_corelation(g), underlying_corelation(f))
    assert lhs == rhs


@given(circuits(), circuits())
def test_underlying_corelation_preserves_tensor(f, g):
    lhs = underlying_corelation(tensor_circuits(f, g))
    assert lhs == cr.tensor(underlying_corelation(f), underlying_corelation(g))


@given(st.integers(0, 4))
def test_identity_circuit(n):
    assert underlying_corelation(identity_circuit(n)) == cr.identity(n)


@given(circuits())
def test_json_round_trip(c):
    assert Circuit.from_json(c.to_json()) == c
