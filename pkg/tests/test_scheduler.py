"""ASAP scheduling, schedule dumps and execution snapshots."""

import pytest

from conftest import complete_device
from qcmap.circuit.parser import parse_circuit, read_circuit
from qcmap.device.loader import load_device
from qcmap.errors import ConstraintViolation
from qcmap.mapper.pipeline import compile_circuit
from qcmap.scheduler.dump import dump_schedule
from qcmap.scheduler.engine import Scheduler, compatible_gates, depth, schedule_asap, snapshot
from qcmap.schemas.circuit_schema import GateKind, NodeStatus
from qcmap.schemas.mapping_schema import Placement, PlacerStrategy, RouterConfig, RouterStrategy

TIMED = """
name timed
qubits 3
edge q0 -- q1
edge q1 -- q2
gate1q rx ry
gate2q cz
duration rx 20
duration ry 20
duration cz 40
duration measure 60
"""


def test_parallel_gates_share_a_cycle():
    device = complete_device(3)
    circuit = parse_circuit("qubits 3\nrx q0, 0.1\nry q1, 0.2\ncz q0, q1\nrx q2, 0.3\n")
    schedule = schedule_asap(circuit, device)
    assert [e.start for e in schedule.entries] == [0, 0, 1, 0]
    assert depth(schedule) == 2


def test_durations_use_gcd_cycle_time():
    device = load_device(TIMED)
    circuit = parse_circuit("qubits 3\nrx q0, 0.1\ncz q0, q1\nry q1, 0.2\nmeasure q1\n")
    schedule = schedule_asap(circuit, device)
    assert schedule.cycle_time == 20
    assert [(e.start, e.duration) for e in schedule.entries] == [(0, 1), (1, 2), (3, 1), (4, 3)]
    assert schedule.depth == 7


def test_shared_channel_serializes_different_waveforms():
    device = complete_device(3, channels="channel mw 1q: q0 q1 q2")
    circuit = parse_circuit("qubits 3\nrx q0, 0.5\nrx q1, 0.5\nry q2, 0.5\n")
    schedule = schedule_asap(circuit, device)
    assert [e.start for e in schedule.entries] == [0, 0, 1]


def test_two_qubit_channel_does_not_block_one_qubit_gates():
    device = complete_device(4, channels="channel flux 2q: q0 q1 q2 q3")
    circuit = parse_circuit("qubits 4\ncz q0, q1\nrx q2, 0.1\ncz q2, q3\n")
    schedule = schedule_asap(circuit, device)
    assert [e.start for e in schedule.entries] == [0, 0, 1]


def test_unrouted_circuit_is_rejected(qx4):
    circuit = parse_circuit("qubits 5\ncnot q3, q4\n")
    with pytest.raises(ConstraintViolation):
        schedule_asap(circuit, qx4)
    with pytest.raises(ConstraintViolation):
        schedule_asap(parse_circuit("qubits 5\nh q0\n"), qx4)


def test_dump_format():
    device = complete_device(2)
    circuit = parse_circuit("qubits 2\nrx q1, 0.5\nry q0, 0.25\ncz q0, q1\n")
    assert dump_schedule(schedule_asap(circuit, device)) == (
        "cycle 0: ry(0.25)@0; rx(0.5)@1\n"
        "cycle 1: cz@0,1\n"
    )


def test_dump_lists_idle_cycles():
    device = load_device(TIMED)
    circuit = parse_circuit("qubits 3\ncz q0, q1\n")
    assert dump_schedule(schedule_asap(circuit, device)) == "cycle 0: cz@0,1\ncycle 1:\n"


def test_empty_schedule_dump():
    assert dump_schedule(schedule_asap(parse_circuit("qubits 2\n"), complete_device(2))) == ""


def test_snapshot_tracks_swaps(qx4, corpus_dir):
    circuit = read_circuit(corpus_dir / "distance2.qc")
    config = RouterConfig(strategy=RouterStrategy.NAIVE)
    compiled = compile_circuit(circuit, qx4, config, PlacerStrategy.IDENTITY)
    routed = compiled.result
    (swap_end,) = compiled.swap_ledger

    before = snapshot(routed.circuit, qx4, swap_end, routed.initial_placement, compiled.swap_ledger)
    after = snapshot(routed.circuit, qx4, swap_end + 1, routed.initial_placement, compiled.swap_ledger)
    assert before.current_placement == routed.initial_placement
    assert after.current_placement.slots == (2, 1, 0, 3, -1)
    final = snapshot(routed.circuit, qx4, routed.circuit.gate_count, routed.initial_placement, compiled.swap_ledger)
    assert final.current_placement == routed.final_placement
    assert final.scheduled_count == routed.circuit.gate_count


def test_snapshot_statuses(qx4):
    circuit = parse_circuit("qubits 5\nu3 q0, 0.1, 0.2, 0.3\nu3 q1, 0.1, 0.2, 0.3\ncnot q1, q0\n")
    snap = snapshot(circuit, qx4, 1)
    assert snap.statuses == (NodeStatus.SCHEDULED, NodeStatus.FRONTIER, NodeStatus.PENDING)
    assert snap.steps == 1


def test_literal_swap_updates_placement():
    device = load_device("name swapper\nqubits 2\nedge q0 -- q1\ngate1q rx\ngate2q swap\n")
    circuit = parse_circuit("qubits 2\nswap q0, q1\n")
    snap = snapshot(circuit, device, 1, Placement.identity(2, 2))
    assert snap.current_placement.slots == (1, 0)


def test_resume_matches_uninterrupted_run():
    device = complete_device(4, channels="channel mw 1q: q0 q1")
    circuit = parse_circuit(
        "qubits 4\nrx q0, 0.1\nrx q1, 0.2\ncz q0, q2\nry q3, 0.3\ncz q1, q3\nrx q0, 0.1\nry q1, 0.5\n"
    )
    full = Scheduler(circuit, device).run().schedule()
    for cut in range(circuit.gate_count + 1):
        snap = Scheduler(circuit, device).run(cut).snapshot()
        resumed = Scheduler.resume(snap, circuit, device).run().schedule()
        assert resumed == full


def test_compatible_gates():
    device = complete_device(3, channels="channel mw 1q: q0 q1")
    circuit = parse_circuit("qubits 3\nrx q0, 0.5\ncz q1, q2\n")
    snap = snapshot(circuit, device, 1)
    options = compatible_gates(snap, 0, device)
    assert options[0] == frozenset()
    assert options[1] == frozenset({GateKind.RX, GateKind.CZ})
    assert options[2] == frozenset({GateKind.RX, GateKind.RY, GateKind.CZ})
