"""Peephole pass over native circuits.

Merges consecutive same-axis rotations, drops rotations by multiples of
2*pi and cancels adjacent identical self-inverse gates. The result is equal
to the input up to global phase and uses no new gate kinds.
"""

import math
from typing import Dict, List, Optional, Tuple

from qcmap.schemas.circuit_schema import Circuit, Gate, GateKind, make_gate

_ROTATIONS = frozenset({GateKind.RX, GateKind.RY, GateKind.RZ})
_SELF_INVERSE = frozenset({
    GateKind.H, GateKind.X, GateKind.Y, GateKind.Z,
    GateKind.CNOT, GateKind.CZ, GateKind.SWAP,
})
_ANGLE_EPS = 1e-12


def simplify(circuit: Circuit) -> Circuit:
    return simplify_with_index_map(circuit)[0]


def simplify_with_index_map(circuit: Circuit) -> Tuple[Circuit, Dict[int, int]]:
    """
    Simplify and report where each kept gate went.

    Returns:
        (circuit, {old index: new index}) for gates that survive; a merged
        pair survives at the position of its first gate.
    """
    gates: List[Optional[Gate]] = list(circuit.gates)
    changed = True
    while changed:
        changed = False
        for i, gate in enumerate(gates):
            if gate is None:
                continue
            if gate.kind in _ROTATIONS and _is_full_turn(gate.params[0]):
                gates[i] = None
                changed = True
                continue
            j = _next_on_same_qubits(gates, i)
            if j is None:
                continue
            other = gates[j]
            if gate.kind in _ROTATIONS and other.kind is gate.kind:
                angle = math.remainder(gate.params[0] + other.params[0], 2 * math.pi)
                gates[i] = make_gate(gate.kind, *gate.operands, params=(angle,))
                gates[j] = None
                changed = True
            elif gate.kind in _SELF_INVERSE and _same_action(gate, other):
                gates[i] = None
                gates[j] = None
                changed = True

    index_map: Dict[int, int] = {}
    kept: List[Gate] = []
    for old, gate in enumerate(gates):
        if gate is not None:
            index_map[old] = len(kept)
            kept.append(gate)
    return Circuit(qubit_count=circuit.qubit_count, gates=tuple(kept)), index_map


def _is_full_turn(angle: float) -> bool:
    return abs(math.remainder(angle, 2 * math.pi)) < _ANGLE_EPS


def _same_action(a: Gate, b: Gate) -> bool:
    if a.kind is not b.kind:
        return False
    if a.kind.symmetric:
        return set(a.operands) == set(b.operands)
    return a.operands == b.operands


def _next_on_same_qubits(gates: List[Optional[Gate]], i: int) -> Optional[int]:
    """Index of the next gate touching i's qubits, if it touches exactly those first."""
    qubits = set(gates[i].operands)
    for j in range(i + 1, len(gates)):
        other = gates[j]
        if other is None:
            continue
        touched = qubits & set(other.operands)
        if not touched:
            continue
        if other.kind is GateKind.MEASURE or set(other.operands) != qubits:
            return None
        return j
    return None
