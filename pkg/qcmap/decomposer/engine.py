"""Gate decomposition into a device's native gate set."""

import logging
from functools import lru_cache
from typing import FrozenSet, List, Optional, Tuple

from qcmap.device.topology import topology
from qcmap.errors import NoRuleAvailable, NotCoupled
from qcmap.schemas.circuit_schema import Circuit, Gate, GateKind, make_gate
from qcmap.schemas.device_schema import Device
from qcmap.decomposer.rules import RewriteRule, rules_for

logger = logging.getLogger(__name__)


def is_native(gate: Gate, device: Device) -> bool:
    """Kind check only; coupling and orientation are the router's concern."""
    if gate.kind is GateKind.MEASURE:
        return True
    if gate.is_two_qubit:
        return gate.kind is device.native_2q
    return gate.kind in device.native_1q_for(gate.operands[0])


def decompose_gate(gate: Gate, device: Device) -> List[Gate]:
    """
    Rewrite one gate into native gates for its operands.

    Among the rule chains that reach the native set the shortest wins,
    then the earliest rule in the table.

    Raises:
        NoRuleAvailable: no chain of rules reaches the device's native set
    """
    return list(_best(gate, device)[0])


def chosen_rule(gate: Gate, device: Device) -> Optional[RewriteRule]:
    """Rule :func:`decompose_gate` applies first to ``gate``; None when it is native."""
    return _best(gate, device)[1]


@lru_cache(maxsize=8192)
def _best(gate: Gate, device: Device) -> Tuple[Tuple[Gate, ...], Optional[RewriteRule]]:
    resolved = _resolve(gate, device, frozenset())
    if resolved is None:
        raise NoRuleAvailable(gate.kind.value, device.name)
    return tuple(resolved[0]), resolved[1]


def _resolve(
    gate: Gate, device: Device, expanding: FrozenSet[GateKind]
) -> Optional[Tuple[List[Gate], Optional[RewriteRule]]]:
    if is_native(gate, device):
        return [gate], None
    if gate.kind in expanding:
        return None
    best: Optional[Tuple[List[Gate], Optional[RewriteRule]]] = None
    for rule in rules_for(gate.kind):
        out: List[Gate] = []
        for part in rule.expand(gate):
            resolved = _resolve(part, device, expanding | {gate.kind})
            if resolved is None:
                break
            out.extend(resolved[0])
        else:
            if best is None or len(out) < len(best[0]):
                best = (out, rule)
    return best


def reverse_cnot(control: int, target: int) -> List[Gate]:
    """CNOT(control, target) built from the opposite orientation; exact."""
    return [
        make_gate(GateKind.H, control),
        make_gate(GateKind.H, target),
        make_gate(GateKind.CNOT, target, control),
        make_gate(GateKind.H, control),
        make_gate(GateKind.H, target),
    ]


def orient(gate: Gate, device: Device) -> Tuple[List[Gate], bool]:
    """
    Make a native two-qubit gate run in an allowed orientation.

    Symmetric kinds just exchange operands. A CNOT is replaced by its
    H-conjugated reversal with the H gates made native.

    Returns:
        (gates, True if the CNOT reversal was used)

    Raises:
        NotCoupled: operands are not coupled
    """
    topo = topology(device)
    a, b = gate.operands
    if not topo.is_adjacent(a, b):
        raise NotCoupled(f"q{a} and q{b} are not coupled on {device.name}")
    if topo.allows(a, b):
        return [gate], False
    if gate.kind.symmetric:
        return [gate.on(b, a)], False
    out: List[Gate] = []
    for part in reverse_cnot(a, b):
        out.extend(decompose_gate(part, device))
    return out, True


def decompose_swap(a: int, b: int, device: Device) -> List[Gate]:
    """
    Native gate sequence exchanging physical qubits a and b.

    Uses three CNOTs (rewritten further when CNOT is not native). On a
    directed device the outer CNOTs follow the allowed direction and the
    middle one is reversed.

    Raises:
        NotCoupled: a and b are not coupled
    """
    topo = topology(device)
    if not topo.is_adjacent(a, b):
        raise NotCoupled(f"cannot swap q{a} and q{b}: not coupled on {device.name}")
    if device.native_2q is GateKind.SWAP:
        gates, _ = orient(make_gate(GateKind.SWAP, a, b), device)
        return gates
    if not topo.allows(a, b):
        a, b = b, a
    out: List[Gate] = []
    for cnot in (make_gate(GateKind.CNOT, a, b), make_gate(GateKind.CNOT, b, a), make_gate(GateKind.CNOT, a, b)):
        for part in decompose_gate(cnot, device):
            if part.is_two_qubit:
                oriented, _ = orient(part, device)
                out.extend(oriented)
            else:
                out.append(part)
    return out


def decompose_to_native(circuit: Circuit, device: Device, physical: bool = False) -> Circuit:
    """
    Rewrite every gate into the device's native set.

    With ``physical`` the circuit is taken to act on physical qubits: SWAPs
    become :func:`decompose_swap` sequences and native two-qubit gates are
    oriented. Measurements pass through unchanged.
    """
    out: List[Gate] = []
    for gate in circuit.gates:
        if gate.kind is GateKind.MEASURE:
            out.append(gate)
        elif physical and gate.kind is GateKind.SWAP:
            out.extend(decompose_swap(*gate.operands, device))
        elif physical and gate.is_two_qubit:
            for part in decompose_gate(gate, device):
                out.extend(orient(part, device)[0] if part.is_two_qubit else [part])
        else:
            out.extend(decompose_gate(gate, device))
    logger.debug("decomposed %d gates into %d native gates for %s", circuit.gate_count, len(out), device.name)
    return Circuit(qubit_count=circuit.qubit_count, gates=tuple(out))
