"""Circuit language and dependency graph."""

import math

import numpy as np
import pytest

from qcmap.circuit.dependency_graph import build_dependency_graph
from qcmap.circuit.parser import parse_angle, parse_circuit, print_circuit, read_circuit
from qcmap.errors import (
    CircuitSyntaxError,
    MissingQubitsDecl,
    NotSchedulable,
    ParamArityMismatch,
    QubitOutOfRange,
)
from qcmap.schemas.circuit_schema import Circuit, GateKind, NodeStatus, make_gate


def test_parse_bell():
    circuit = parse_circuit("qubits 2\nh q0\ncnot q0, q1\n")
    assert circuit.qubit_count == 2
    assert circuit.gates == (make_gate(GateKind.H, 0), make_gate(GateKind.CNOT, 0, 1))


def test_parse_comments_blank_lines_and_cx_alias():
    circuit = parse_circuit("# header\n\nqubits 3   # three\nCX q2, q0\n")
    assert circuit.gates == (make_gate(GateKind.CNOT, 2, 0),)


def test_parse_angles():
    circuit = parse_circuit("qubits 1\nrz q0, pi/4\nu3 q0, -pi/2, 0.5, 2*pi\n")
    assert circuit.gates[0].params == (math.pi / 4,)
    assert circuit.gates[1].params == (-math.pi / 2, 0.5, 2 * math.pi)


@pytest.mark.parametrize("token,expected", [
    ("pi", math.pi),
    ("-pi", -math.pi),
    ("pi/2", math.pi / 2),
    ("3*pi/4", 3 * math.pi / 4),
    ("0.25", 0.25),
    ("-1e-3", -1e-3),
])
def test_parse_angle(token, expected):
    assert parse_angle(token) == pytest.approx(expected)


def test_empty_circuit():
    circuit = parse_circuit("qubits 0\n")
    assert circuit.qubit_count == 0
    assert circuit.gates == ()


def test_missing_qubits_declaration():
    with pytest.raises(MissingQubitsDecl):
        parse_circuit("h q0\n")
    with pytest.raises(MissingQubitsDecl):
        parse_circuit("# nothing\n")


def test_qubit_out_of_range_reports_line():
    with pytest.raises(QubitOutOfRange) as info:
        parse_circuit("qubits 2\nh q0\ncnot q0, q2\n")
    assert info.value.line == 3


def test_param_arity_mismatch():
    with pytest.raises(ParamArityMismatch) as info:
        parse_circuit("qubits 1\nrx q0\n")
    assert info.value.line == 2
    with pytest.raises(ParamArityMismatch):
        parse_circuit("qubits 1\nh q0, 0.5\n")


@pytest.mark.parametrize("source", [
    "qubits 2\nfoo q0\n",
    "qubits 2\ncnot q0, q0\n",
    "qubits 2\ncnot q0\n",
    "qubits 2\nrx q0, abc\n",
    "qubits two\n",
    "qubits 2\nqubits 3\n",
])
def test_syntax_errors(source):
    with pytest.raises(CircuitSyntaxError):
        parse_circuit(source)


def test_gate_after_measure_is_rejected():
    with pytest.raises(CircuitSyntaxError) as info:
        parse_circuit("qubits 2\nmeasure q0\nh q0\n")
    assert info.value.line == 3


def test_print_reparses_exactly():
    source = "qubits 3\nh q0\nrx q1, 0.1\nu3 q2, pi/3, -0.2, 1e-7\ncz q2, q0\nmeasure q1\n"
    circuit = parse_circuit(source)
    assert parse_circuit(print_circuit(circuit)) == circuit


def test_print_format():
    circuit = Circuit(qubit_count=2, gates=(make_gate(GateKind.CNOT, 0, 1), make_gate(GateKind.RZ, 1, params=(0.5,))))
    assert print_circuit(circuit) == "qubits 2\ncnot q0, q1\nrz q1, 0.5\n"


def test_corpus_files_parse(corpus_dir):
    for name in ("bell.qc", "fig1b.qc", "distance2.qc"):
        assert read_circuit(corpus_dir / name).gate_count > 0


def test_dependency_edges_follow_qubit_lines():
    circuit = parse_circuit("qubits 3\nh q0\ncnot q0, q1\nh q2\ncnot q1, q2\nh q0\n")
    graph = build_dependency_graph(circuit)
    assert graph.edges() == [(0, 1), (1, 3), (1, 4), (2, 3)]
    assert graph.frontier() == frozenset({0, 2})
    assert graph.status(1) is NodeStatus.PENDING


def test_mark_scheduled_promotes_successors():
    circuit = parse_circuit("qubits 2\nh q0\nh q1\ncnot q0, q1\n")
    graph = build_dependency_graph(circuit)
    graph.mark_scheduled(0)
    assert graph.frontier() == frozenset({1})
    graph.mark_scheduled(1)
    assert graph.frontier() == frozenset({2})
    graph.mark_scheduled(2)
    assert graph.is_done()
    assert graph.statuses() == [NodeStatus.SCHEDULED] * 3


def test_mark_scheduled_rejects_non_frontier():
    graph = build_dependency_graph(parse_circuit("qubits 1\nh q0\nx q0\n"))
    with pytest.raises(NotSchedulable):
        graph.mark_scheduled(1)
    graph.mark_scheduled(0)
    with pytest.raises(NotSchedulable):
        graph.mark_scheduled(0)


def test_frontier_order_is_topological(circuit_factory):
    rng = np.random.default_rng(7)
    for _ in range(20):
        circuit = circuit_factory(rng, 4, 25)
        graph = build_dependency_graph(circuit)
        seen = set()
        while not graph.is_done():
            node = int(rng.choice(sorted(graph.frontier())))
            assert all(p in seen for p in graph.predecessors(node))
            graph.mark_scheduled(node)
            seen.add(node)
        assert len(seen) == circuit.gate_count


def test_restore_replays_scheduled_nodes():
    circuit = parse_circuit("qubits 2\nh q0\nh q1\ncnot q0, q1\nx q0\n")
    graph = build_dependency_graph(circuit)
    graph.mark_scheduled(1).mark_scheduled(0).mark_scheduled(2)
    restored = build_dependency_graph(circuit).restore([0, 1, 2])
    assert restored.statuses() == graph.statuses()
