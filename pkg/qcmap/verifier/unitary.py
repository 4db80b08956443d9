"""Gate unitaries.

Qubit 0 is the least significant bit of a basis index. Inside a two-qubit
gate matrix operand 0 is the most significant bit, so CNOT(control, target)
has the textbook block form.
"""

from functools import lru_cache
from typing import Tuple

import numpy as np

from qcmap.errors import MeasureHasNoUnitary
from qcmap.schemas.circuit_schema import Circuit, Gate, GateKind

_SQRT1_2 = 1.0 / np.sqrt(2.0)

_FIXED = {
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT1_2,
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=complex),
    GateKind.S: np.diag([1, 1j]).astype(complex),
    GateKind.SDG: np.diag([1, -1j]).astype(complex),
    GateKind.T: np.diag([1, np.exp(1j * np.pi / 4)]),
    GateKind.TDG: np.diag([1, np.exp(-1j * np.pi / 4)]),
    GateKind.CNOT: np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    GateKind.CZ: np.diag([1, 1, 1, -1]).astype(complex),
    GateKind.SWAP: np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
}


def rx(theta: float) -> np.ndarray:
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


def ry(theta: float) -> np.ndarray:
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rz(theta: float) -> np.ndarray:
    return np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])


def u3(theta: float, phi: float, lam: float) -> np.ndarray:
    """Euler form RZ(phi) RY(theta) RZ(lam)."""
    return rz(phi) @ ry(theta) @ rz(lam)


def gate_unitary(gate: Gate) -> np.ndarray:
    """
    Unitary matrix of a gate (2x2 or 4x4).

    Raises:
        MeasureHasNoUnitary: gate is a MEASURE
    """
    return _unitary(gate.kind, gate.params).copy()


@lru_cache(maxsize=4096)
def _unitary(kind: GateKind, params: Tuple[float, ...]) -> np.ndarray:
    if kind is GateKind.MEASURE:
        raise MeasureHasNoUnitary("measure is not a unitary operation")
    if kind in _FIXED:
        return _FIXED[kind]
    if kind is GateKind.RX:
        return rx(*params)
    if kind is GateKind.RY:
        return ry(*params)
    if kind is GateKind.RZ:
        return rz(*params)
    return u3(*params)


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Full 2^n x 2^n unitary; column k is the image of basis state k."""
    from qcmap.verifier.simulator import simulate_batch

    dim = 2 ** circuit.qubit_count
    return simulate_batch(circuit, np.eye(dim, dtype=complex))


def global_phase_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Max-norm of ``a - e^{i phi} b`` with phi aligned on b's largest entry."""
    flat_b = b.ravel()
    k = int(np.argmax(np.abs(flat_b)))
    if abs(flat_b[k]) == 0.0:
        return float(np.max(np.abs(a)))
    ratio = a.ravel()[k] / flat_b[k]
    phase = ratio / abs(ratio) if abs(ratio) > 0 else 1.0
    return float(np.max(np.abs(a - phase * b)))
