"""Device constraint checker. Violations are returned as data."""

from typing import List, Set

from qcmap.device.topology import topology
from qcmap.schemas.circuit_schema import Circuit, GateKind
from qcmap.schemas.device_schema import Device
from qcmap.schemas.metrics_schema import Violation, ViolationKind


def check_constraints(circuit: Circuit, device: Device) -> List[Violation]:
    """
    List every device constraint the circuit breaks, in gate order.

    A gate can yield several violations (e.g. a non-native SWAP on an
    uncoupled pair reports both).
    """
    topo = topology(device)
    violations: List[Violation] = []
    measured: Set[int] = set()

    def report(kind: ViolationKind, index: int, qubits, detail: str = "") -> None:
        violations.append(Violation(kind=kind, gate_index=index, qubits=tuple(qubits), detail=detail))

    for index, gate in enumerate(circuit.gates):
        ops = gate.operands
        outside = [q for q in ops if q >= device.qubit_count]
        if outside:
            report(ViolationKind.NON_NATIVE, index, ops, f"q{outside[0]} is not on {device.name}")
            continue

        reused = [q for q in ops if q in measured]
        if reused:
            report(ViolationKind.MEASURED_REUSE, index, ops, f"q{reused[0]} was already measured")

        if gate.kind is GateKind.MEASURE:
            if not device.measurable[ops[0]]:
                report(ViolationKind.UNMEASURABLE, index, ops)
            measured.add(ops[0])
            continue

        if not gate.is_two_qubit:
            if gate.kind not in device.native_1q_for(ops[0]):
                report(ViolationKind.NON_NATIVE, index, ops, f"{gate.kind.value} not native on q{ops[0]}")
            continue

        if gate.kind is not device.native_2q:
            report(ViolationKind.NON_NATIVE, index, ops, f"{gate.kind.value} is not {device.native_2q.value}")
        if not topo.is_adjacent(*ops):
            report(ViolationKind.COUPLING, index, ops)
        elif not topo.allows(*ops):
            report(ViolationKind.ORIENTATION, index, ops, f"q{ops[0]} -> q{ops[1]} not allowed")
    return violations
