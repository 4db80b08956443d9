"""State-vector simulation."""

import logging
from typing import List, Sequence, Union

import numpy as np

from qcmap.errors import TooManyQubits
from qcmap.schemas.circuit_schema import Circuit, Gate, GateKind
from qcmap.verifier.unitary import gate_unitary

logger = logging.getLogger(__name__)

MAX_SIM_QUBITS = 16

StateInput = Union[str, int, np.ndarray]


def basis_index(label: str) -> int:
    """Index of a basis label written qubit 0 first (``"10"`` is q0=1, q1=0)."""
    if any(ch not in "01" for ch in label):
        raise ValueError(f"basis label must be a bit string, got '{label}'")
    return sum(1 << k for k, ch in enumerate(label) if ch == "1")


def basis_label(index: int, qubit_count: int) -> str:
    return "".join("1" if (index >> k) & 1 else "0" for k in range(qubit_count))


def basis_state(qubit_count: int, index: int = 0) -> np.ndarray:
    state = np.zeros(2 ** qubit_count, dtype=complex)
    state[index] = 1.0
    return state


def _initial_state(qubit_count: int, initial: StateInput) -> np.ndarray:
    dim = 2 ** qubit_count
    if isinstance(initial, str):
        if len(initial) != qubit_count:
            raise ValueError(f"basis label '{initial}' has {len(initial)} bits, circuit has {qubit_count} qubits")
        return basis_state(qubit_count, basis_index(initial))
    if isinstance(initial, (int, np.integer)):
        if not 0 <= initial < dim:
            raise ValueError(f"basis index {initial} outside 0..{dim - 1}")
        return basis_state(qubit_count, int(initial))
    state = np.asarray(initial, dtype=complex)
    if state.shape != (dim,):
        raise ValueError(f"state vector must have {dim} amplitudes")
    return state.copy()


def apply_gate(tensor: np.ndarray, gate: Gate, qubit_count: int) -> np.ndarray:
    """Apply one gate to a state tensor of shape ``[2]*n`` plus optional batch axes."""
    k = gate.kind.arity
    axes = [qubit_count - 1 - q for q in gate.operands]
    u = gate_unitary(gate).reshape([2] * (2 * k))
    out = np.tensordot(u, tensor, axes=(list(range(k, 2 * k)), axes))
    return np.moveaxis(out, list(range(k)), axes)


def run_gates(tensor: np.ndarray, gates: Sequence[Gate], qubit_count: int) -> np.ndarray:
    for gate in gates:
        if gate.kind is GateKind.MEASURE:
            continue
        tensor = apply_gate(tensor, gate, qubit_count)
    return tensor


def simulate(circuit: Circuit, initial: StateInput = 0) -> np.ndarray:
    """
    Run a circuit on a basis label, basis index or state vector.

    MEASURE gates are skipped: the pre-measurement state is returned.

    Raises:
        TooManyQubits: circuit wider than MAX_SIM_QUBITS
    """
    n = _check_width(circuit)
    state = _initial_state(n, initial)
    tensor = run_gates(state.reshape([2] * n) if n else state, circuit.gates, n)
    return tensor.reshape(2 ** n)


def simulate_batch(circuit: Circuit, states: np.ndarray) -> np.ndarray:
    """Run a circuit on the columns of ``states`` (shape ``(2**n, batch)``)."""
    n = _check_width(circuit)
    batch = states.shape[1]
    tensor = run_gates(states.reshape([2] * n + [batch]), circuit.gates, n)
    return tensor.reshape(2 ** n, batch)


def nonzero_amplitudes(state: np.ndarray, threshold: float = 1e-12) -> List[tuple]:
    """(index, amplitude) pairs with ``|amplitude| > threshold``, by index."""
    return [(int(k), complex(a)) for k, a in enumerate(state) if abs(a) > threshold]


def _check_width(circuit: Circuit) -> int:
    if circuit.qubit_count > MAX_SIM_QUBITS:
        raise TooManyQubits(
            f"simulation is capped at {MAX_SIM_QUBITS} qubits, circuit has {circuit.qubit_count}"
        )
    return circuit.qubit_count
