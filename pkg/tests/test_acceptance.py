"""Corpus-scale property checks for the whole pipeline."""

import itertools
from collections import deque

import networkx as nx
import numpy as np
import pytest

from conftest import complete_device, random_circuit
from qcmap.circuit.parser import print_circuit, read_circuit
from qcmap.decomposer.engine import decompose_swap, decompose_to_native, reverse_cnot
from qcmap.decomposer.rules import validated_rules
from qcmap.device.topology import are_coupled, topology
from qcmap.errors import TooManyQubits
from qcmap.mapper.pipeline import compile_circuit
from qcmap.mapper.router import route
from qcmap.scheduler.dump import dump_schedule
from qcmap.scheduler.engine import schedule_asap
from qcmap.schemas.circuit_schema import Circuit, GateKind, make_gate
from qcmap.schemas.device_schema import CouplingKind
from qcmap.schemas.mapping_schema import FREE, Placement, PlacerStrategy, RouterConfig, RouterStrategy
from qcmap.verifier.constraints import check_constraints
from qcmap.verifier.equivalence import equivalent
from qcmap.verifier.unitary import circuit_unitary, global_phase_distance

pytestmark = pytest.mark.slow

ROUTERS = (RouterConfig(strategy=RouterStrategy.NAIVE), RouterConfig(strategy=RouterStrategy.LOOKAHEAD))


def _corpus(count: int, seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        qubits = int(rng.integers(3, 9))
        gates = int(rng.integers(5, 41))
        yield random_circuit(rng, qubits, gates)


def _targets(circuit, qx4, surface17):
    return [d for d in (qx4, surface17) if circuit.qubit_count <= d.qubit_count]


def test_routed_circuits_satisfy_constraints(qx4, surface17):
    for circuit in _corpus(500, seed=2024):
        for device in _targets(circuit, qx4, surface17):
            for config in ROUTERS:
                compiled = compile_circuit(circuit, device, config)
                assert check_constraints(compiled.result.circuit, device) == []


def test_routed_circuits_are_equivalent(qx4, surface17):
    checked = 0
    for circuit in _corpus(500, seed=2024):
        for device in _targets(circuit, qx4, surface17):
            for config in ROUTERS:
                result = compile_circuit(circuit, device, config).result
                try:
                    ok, deficit = equivalent(circuit, result.circuit, result.final_placement, result.initial_placement)
                except TooManyQubits:
                    # Routed across more physical qubits than the simulator holds.
                    continue
                assert ok and deficit < 1e-10, (print_circuit(circuit), device.name, config.strategy, deficit)
                checked += 1
    assert checked > 0


def _two_qubit_matrix(gates, a, b):
    local = {a: 0, b: 1}
    return circuit_unitary(Circuit(qubit_count=2, gates=tuple(g.on(*(local[q] for q in g.operands)) for g in gates)))


def test_decomposition_soundness(qx4, surface17):
    for rule in validated_rules():
        assert rule.phase_note is not None
    swap = circuit_unitary(Circuit(qubit_count=2, gates=(make_gate(GateKind.SWAP, 0, 1),)))
    for device in (qx4, surface17):
        for a, b in topology(device).skeleton_edges:
            assert global_phase_distance(_two_qubit_matrix(decompose_swap(a, b, device), a, b), swap) < 1e-12
    cnot = circuit_unitary(Circuit(qubit_count=2, gates=(make_gate(GateKind.CNOT, 0, 1),)))
    reversal = circuit_unitary(Circuit(qubit_count=2, gates=tuple(reverse_cnot(0, 1))))
    assert len(reverse_cnot(0, 1)) == 5
    assert global_phase_distance(reversal, cnot) < 1e-12


def _exact_instance(rng, qx4):
    qubits = int(rng.integers(3, 6))
    gates = []
    for _ in range(int(rng.integers(1, 9))):
        for _ in range(int(rng.integers(0, 3))):
            gates.append(make_gate(GateKind.H, int(rng.integers(qubits))))
        a, b = (int(q) for q in rng.choice(qubits, size=2, replace=False))
        gates.append(make_gate(GateKind.CNOT, a, b))
    return decompose_to_native(Circuit(qubit_count=qubits, gates=tuple(gates)), qx4)


def _brute_force_min_swaps(circuit, device, placement, limit):
    """Breadth-first search over SWAP sequences of length <= limit."""
    edges = [(e.source, e.target) for e in device.edges]
    coupled = {frozenset(e) for e in edges}
    pairs = [g.operands for g in circuit.gates if g.is_two_qubit]
    order = {}
    for k, (a, b) in enumerate(pairs):
        order[k] = [j for j in range(k) if set(pairs[j]) & {a, b}]

    def run(pos, done):
        done = set(done)
        progress = True
        while progress:
            progress = False
            for k, (a, b) in enumerate(pairs):
                if k not in done and all(j in done for j in order[k]):
                    if frozenset((pos[a], pos[b])) in coupled:
                        done.add(k)
                        progress = True
        return frozenset(done)

    start_pos = tuple(placement.positions())
    start = (start_pos, run(start_pos, ()))
    queue = deque([(start, 0)])
    seen = {start}
    while queue:
        (pos, done), length = queue.popleft()
        if len(done) == len(pairs):
            return length
        if length == limit:
            continue
        for a, b in edges:
            moved = tuple(b if p == a else a if p == b else p for p in pos)
            state = (moved, run(moved, done))
            if state not in seen:
                seen.add(state)
                queue.append((state, length + 1))
    return None


def test_exact_router_optimality_ordering(qx4):
    rng = np.random.default_rng(99)
    for instance in range(100):
        circuit = _exact_instance(rng, qx4)
        placement = Placement.identity(circuit.qubit_count, qx4.qubit_count)
        swaps = {
            strategy: route(circuit, qx4, placement, RouterConfig(strategy=strategy)).swaps_added
            for strategy in RouterStrategy
        }
        assert swaps[RouterStrategy.EXACT] <= swaps[RouterStrategy.LOOKAHEAD] <= swaps[RouterStrategy.NAIVE]
        if instance < 20:
            assert _brute_force_min_swaps(circuit, qx4, placement, swaps[RouterStrategy.EXACT]) == swaps[
                RouterStrategy.EXACT
            ]


def test_device_facts(qx4, surface17):
    assert are_coupled(surface17, 1, 5) is not CouplingKind.NO
    assert are_coupled(surface17, 1, 7) is CouplingKind.NO
    identity_cnot = Circuit(qubit_count=5, gates=(make_gate(GateKind.CNOT, 3, 4),))
    assert len(check_constraints(identity_cnot, qx4)) >= 1


def _critical_path(circuit):
    graph = nx.DiGraph()
    graph.add_nodes_from(range(circuit.gate_count))
    for i, j in itertools.combinations(range(circuit.gate_count), 2):
        if set(circuit.gates[i].operands) & set(circuit.gates[j].operands):
            graph.add_edge(i, j)
    return nx.dag_longest_path_length(graph) + 1 if circuit.gate_count else 0


def test_scheduler_depth_is_critical_path():
    rng = np.random.default_rng(6)
    device = complete_device(6)
    for _ in range(200):
        circuit = random_circuit(
            rng, int(rng.integers(2, 7)), int(rng.integers(1, 40)),
            one_qubit=(GateKind.RX, GateKind.RY), two_qubit=(GateKind.CZ,),
        )
        assert schedule_asap(circuit, device).depth == _critical_path(circuit)


def test_shared_channel_emits_one_waveform_per_cycle():
    rng = np.random.default_rng(8)
    device = complete_device(5, channels="channel mw 1q: q0 q1 q2 q3 q4")
    for _ in range(100):
        circuit = random_circuit(
            rng, 5, 30, one_qubit=(GateKind.RX, GateKind.RY), two_qubit=(GateKind.CZ,),
        )
        # Reuse a few angles so equal waveforms really occur.
        circuit = Circuit(qubit_count=5, gates=tuple(
            g if g.is_two_qubit else make_gate(g.kind, *g.operands, params=(float(round(g.params[0])),))
            for g in circuit.gates
        ))
        schedule = schedule_asap(circuit, device)
        for cycle in range(schedule.depth):
            waveforms = {e.gate.waveform() for e in schedule.active_at(cycle) if not e.gate.is_two_qubit}
            assert len(waveforms) <= 1


def test_fig1b_added_gates_ordering(qx4, corpus_dir):
    circuit = read_circuit(corpus_dir / "fig1b.qc")
    added = {}
    for strategy in RouterStrategy:
        compiled = compile_circuit(circuit, qx4, RouterConfig(strategy=strategy), PlacerStrategy.IDENTITY)
        added[strategy] = compiled.result.circuit.gate_count - compiled.native.gate_count
    assert added[RouterStrategy.NAIVE] >= added[RouterStrategy.LOOKAHEAD] >= added[RouterStrategy.EXACT]
    assert added[RouterStrategy.NAIVE] > added[RouterStrategy.EXACT]


def test_artifacts_are_deterministic(qx4, surface17):
    def artifacts():
        out = []
        for circuit in _corpus(30, seed=31):
            for device in _targets(circuit, qx4, surface17):
                compiled = compile_circuit(circuit, device, RouterConfig(seed=5))
                routed = compiled.result
                schedule = schedule_asap(routed.circuit, device, routed.initial_placement, compiled.swap_ledger)
                out.append(print_circuit(routed.circuit) + dump_schedule(schedule) + str(routed.final_placement))
        return out

    assert artifacts() == artifacts()


def test_free_slots_survive_routing(qx4):
    circuit = decompose_to_native(Circuit(qubit_count=3, gates=(make_gate(GateKind.CNOT, 0, 2),)), qx4)
    result = route(circuit, qx4, Placement.identity(3, 5), RouterConfig())
    assert result.final_placement.slots.count(FREE) == 2
