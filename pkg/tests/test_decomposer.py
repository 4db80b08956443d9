"""Rewrite rules, native decomposition and the peephole pass."""

import math

import numpy as np
import pytest

from conftest import random_circuit
from qcmap.decomposer.engine import (
    chosen_rule,
    decompose_gate,
    decompose_swap,
    decompose_to_native,
    is_native,
    orient,
    reverse_cnot,
)
from qcmap.decomposer.rules import PhaseNote, RULE_TABLE, rule_mismatch, validated_rules
from qcmap.decomposer.simplify import simplify, simplify_with_index_map
from qcmap.errors import NoRuleAvailable, NotCoupled
from qcmap.device.loader import load_device
from qcmap.schemas.circuit_schema import Circuit, GateKind, make_gate
from qcmap.verifier.constraints import check_constraints
from qcmap.verifier.unitary import circuit_unitary, gate_unitary, global_phase_distance

PI = math.pi


def _unitary(gates, qubits):
    return circuit_unitary(Circuit(qubit_count=qubits, gates=tuple(gates)))


def _assert_same_up_to_phase(a, b, tol=1e-12):
    assert global_phase_distance(a, b) < tol


def test_every_rule_validates():
    rules = validated_rules()
    assert len(rules) == len(RULE_TABLE)
    for rule in rules:
        params = (0.3, -1.1, 2.2)[: rule.source.param_count]
        phased, _ = rule_mismatch(rule, params)
        assert phased < 1e-12


def test_phase_notes():
    notes = {(r.source, tuple(t.kind for t in r.target)): r.phase_note for r in validated_rules()}
    assert notes[(GateKind.CNOT, (GateKind.RY, GateKind.CZ, GateKind.RY))] is PhaseNote.EXACT
    assert notes[(GateKind.SWAP, (GateKind.CNOT,) * 3)] is PhaseNote.EXACT
    assert notes[(GateKind.H, (GateKind.U3,))] is PhaseNote.GLOBAL_PHASE


def test_h_and_t_on_qx4(qx4):
    assert decompose_gate(make_gate(GateKind.H, 2), qx4) == [make_gate(GateKind.U3, 2, params=(PI / 2, 0.0, PI))]
    assert decompose_gate(make_gate(GateKind.T, 0), qx4) == [make_gate(GateKind.U3, 0, params=(0.0, 0.0, PI / 4))]


def test_native_gates_pass_through(qx4, surface17):
    cnot = make_gate(GateKind.CNOT, 1, 0)
    assert is_native(cnot, qx4)
    assert decompose_gate(cnot, qx4) == [cnot]
    assert decompose_gate(make_gate(GateKind.RX, 4, params=(0.2,)), surface17) == [
        make_gate(GateKind.RX, 4, params=(0.2,))
    ]
    assert chosen_rule(cnot, qx4) is None


def test_cnot_on_surface17(surface17):
    gates = decompose_gate(make_gate(GateKind.CNOT, 1, 5), surface17)
    assert [g.kind for g in gates] == [GateKind.RY, GateKind.CZ, GateKind.RY]
    assert gates[1].operands == (1, 5)
    assert chosen_rule(make_gate(GateKind.CNOT, 1, 5), surface17).source is GateKind.CNOT


@pytest.mark.parametrize("kind", [k for k in GateKind if k is not GateKind.MEASURE])
def test_decompositions_are_native_and_faithful(kind, qx4, surface17):
    params = (0.7, -0.3, 1.9)[: kind.param_count]
    operands = (1, 0) if kind.arity == 2 else (1,)
    gate = make_gate(kind, *operands, params=params)
    for device in (qx4, surface17):
        if kind.arity == 2 and device is surface17:
            gate = make_gate(kind, 1, 4, params=params)
        gates = decompose_gate(gate, device)
        assert all(is_native(g, device) for g in gates)
        width = max(max(g.operands) for g in gates + [gate]) + 1
        _assert_same_up_to_phase(_unitary(gates, width), _unitary([gate], width))


def test_reverse_cnot_is_exact():
    np.testing.assert_allclose(
        _unitary(reverse_cnot(0, 1), 2), _unitary([make_gate(GateKind.CNOT, 0, 1)], 2), atol=1e-12
    )


def test_orient_on_directed_edge(qx4):
    ok, fixed = orient(make_gate(GateKind.CNOT, 4, 3), qx4)
    assert ok == [make_gate(GateKind.CNOT, 4, 3)] and not fixed
    flipped, fixed = orient(make_gate(GateKind.CNOT, 3, 4), qx4)
    assert fixed
    assert len(flipped) == 5
    assert flipped[2] == make_gate(GateKind.CNOT, 4, 3)
    assert not check_constraints(Circuit(qubit_count=5, gates=tuple(flipped)), qx4)
    _assert_same_up_to_phase(_unitary(flipped, 5), _unitary([make_gate(GateKind.CNOT, 3, 4)], 5))


def test_orient_symmetric_kind_swaps_operands():
    device = load_device(
        "name cz_directed\nqubits 2\nedge q0 -> q1\ngate1q rx ry\ngate2q cz directed\n"
    )
    gates, fixed = orient(make_gate(GateKind.CZ, 1, 0), device)
    assert gates == [make_gate(GateKind.CZ, 0, 1)]
    assert not fixed


def test_orient_requires_coupling(qx4):
    with pytest.raises(NotCoupled):
        orient(make_gate(GateKind.CNOT, 0, 3), qx4)


def test_swap_sequences(qx4, surface17):
    for device, (a, b) in ((qx4, (3, 4)), (qx4, (0, 2)), (surface17, (1, 5))):
        gates = decompose_swap(a, b, device)
        width = device.qubit_count if device.qubit_count <= 5 else 6
        assert not check_constraints(Circuit(qubit_count=device.qubit_count, gates=tuple(gates)), device)
        _assert_same_up_to_phase(
            _unitary(gates, width), _unitary([make_gate(GateKind.SWAP, a, b)], width), tol=1e-10
        )


def test_qx4_swap_uses_one_reversal(qx4):
    gates = decompose_swap(3, 4, qx4)
    assert [g for g in gates if g.kind is GateKind.CNOT] == [
        make_gate(GateKind.CNOT, 4, 3), make_gate(GateKind.CNOT, 4, 3), make_gate(GateKind.CNOT, 4, 3)
    ]
    assert len(gates) == 7


def test_swap_on_uncoupled_pair(surface17):
    with pytest.raises(NotCoupled):
        decompose_swap(1, 7, surface17)


def test_no_rule_available():
    device = load_device("name zonly\nqubits 2\nedge q0 -- q1\ngate1q rz\ngate2q cz\n")
    with pytest.raises(NoRuleAvailable):
        decompose_gate(make_gate(GateKind.H, 0), device)


def test_decompose_to_native_keeps_measures(qx4):
    circuit = Circuit(qubit_count=2, gates=(make_gate(GateKind.H, 0), make_gate(GateKind.MEASURE, 0)))
    native = decompose_to_native(circuit, qx4)
    assert native.gates[-1] == make_gate(GateKind.MEASURE, 0)
    assert all(is_native(g, qx4) for g in native.gates)


def test_decompose_to_native_preserves_unitary(surface17):
    rng = np.random.default_rng(3)
    for _ in range(10):
        circuit = random_circuit(rng, 3, 15)
        native = decompose_to_native(circuit, surface17)
        assert all(is_native(g, surface17) for g in native.gates)
        _assert_same_up_to_phase(circuit_unitary(native), circuit_unitary(circuit), tol=1e-9)


def test_simplify_merges_and_cancels():
    circuit = Circuit(qubit_count=2, gates=(
        make_gate(GateKind.RX, 0, params=(0.25,)),
        make_gate(GateKind.RX, 0, params=(0.5,)),
        make_gate(GateKind.CZ, 0, 1),
        make_gate(GateKind.CZ, 1, 0),
        make_gate(GateKind.RY, 1, params=(2 * PI,)),
        make_gate(GateKind.H, 1),
    ))
    simplified, index_map = simplify_with_index_map(circuit)
    assert simplified.gates == (make_gate(GateKind.RX, 0, params=(0.75,)), make_gate(GateKind.H, 1))
    assert index_map == {0: 0, 5: 1}


def test_simplify_respects_intervening_gates():
    circuit = Circuit(qubit_count=2, gates=(
        make_gate(GateKind.H, 0),
        make_gate(GateKind.CNOT, 0, 1),
        make_gate(GateKind.H, 0),
    ))
    assert simplify(circuit) == circuit


def test_simplify_preserves_unitary(surface17):
    rng = np.random.default_rng(11)
    for _ in range(10):
        native = decompose_to_native(random_circuit(rng, 3, 20), surface17)
        _assert_same_up_to_phase(circuit_unitary(simplify(native)), circuit_unitary(native), tol=1e-9)


def test_gate_unitary_reference_matrices():
    h = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    np.testing.assert_allclose(gate_unitary(make_gate(GateKind.H, 0)), h, atol=1e-15)
    np.testing.assert_allclose(
        gate_unitary(make_gate(GateKind.CNOT, 0, 1)),
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
    )
