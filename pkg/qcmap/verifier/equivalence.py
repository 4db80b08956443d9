"""Equivalence oracle: compares an original circuit with its mapped form."""

import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from qcmap.errors import TooManyQubits
from qcmap.schemas.circuit_schema import Circuit
from qcmap.schemas.mapping_schema import Placement
from qcmap.verifier.simulator import MAX_SIM_QUBITS, simulate_batch

logger = logging.getLogger(__name__)

MAX_ORIGINAL_QUBITS = 12
BASIS_INPUTS = 20
RANDOM_INPUTS = 5
TOLERANCE = 1e-10


def equivalent(
    original: Circuit,
    mapped: Circuit,
    final: Placement,
    initial: Optional[Placement] = None,
    seed: int = 0,
) -> Tuple[bool, float]:
    """
    Check that ``mapped`` realizes ``original`` up to global phase.

    Program qubit k enters the mapped circuit on ``initial.physical_of(k)``
    (identity when omitted) and is read back from ``final.physical_of(k)``.
    Unused physical qubits start in |0> and must end in |0>.

    Returns:
        (equivalent, fidelity deficit) where the deficit is 1 - min |<a|b>|
        over 20 basis inputs and 5 seeded random states.

    Raises:
        TooManyQubits: original wider than 12 qubits, or the mapped circuit
            touches more than 16 physical qubits
    """
    n = original.qubit_count
    if n > MAX_ORIGINAL_QUBITS:
        raise TooManyQubits(f"equivalence checking is capped at {MAX_ORIGINAL_QUBITS} program qubits")
    if initial is None:
        initial = Placement.identity(n, mapped.qubit_count)
    if initial.program_count != n or final.program_count != n:
        raise ValueError("placements must hold exactly the original circuit's program qubits")

    # Simulate only the physical qubits that matter.
    active = sorted(
        {q for g in mapped.gates for q in g.operands}
        | set(initial.positions())
        | set(final.positions())
    )
    if len(active) > MAX_SIM_QUBITS:
        raise TooManyQubits(f"mapped circuit touches {len(active)} physical qubits")
    compact: Dict[int, int] = {q: k for k, q in enumerate(active)}
    m = len(active)
    compacted = Circuit(
        qubit_count=m,
        gates=tuple(g.on(*(compact[q] for q in g.operands)) for g in mapped.gates),
    )

    inputs = _test_inputs(n, seed)
    expected = simulate_batch(original, inputs)
    start = _embed(inputs, [compact[p] for p in initial.positions()], m)
    want = _embed(expected, [compact[p] for p in final.positions()], m)
    got = simulate_batch(compacted, start)

    fidelities = np.abs(np.sum(np.conj(want) * got, axis=0))
    deficit = max(0.0, float(1.0 - np.min(fidelities)))
    logger.debug("equivalence: %d inputs, fidelity deficit %.3e", inputs.shape[1], deficit)
    return deficit < TOLERANCE, deficit


def _test_inputs(n: int, seed: int) -> np.ndarray:
    """20 basis states (all of them when fewer exist) plus 5 random states, as columns."""
    dim = 2 ** n
    rng = np.random.default_rng(seed)
    if dim <= BASIS_INPUTS:
        indices = list(range(dim))
    else:
        rest = rng.choice(np.arange(1, dim), size=BASIS_INPUTS - 1, replace=False)
        indices = [0] + sorted(int(k) for k in rest)
    columns: List[np.ndarray] = []
    for k in indices:
        column = np.zeros(dim, dtype=complex)
        column[k] = 1.0
        columns.append(column)
    for _ in range(RANDOM_INPUTS):
        column = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        columns.append(column / np.linalg.norm(column))
    return np.stack(columns, axis=1)


def _embed(states: np.ndarray, positions: List[int], m: int) -> np.ndarray:
    """Place program qubit k of each column on compact qubit ``positions[k]``; others |0>."""
    n = len(positions)
    batch = states.shape[1]
    tensor = states.reshape([2] * n + [batch])
    # Axis a of the tensor holds qubit labels[a]; qubit q lives on axis m-1-q when done.
    labels = [n - 1 - a for a in range(n)]
    spare = [q for q in range(m) if q not in positions]
    for _ in spare:
        tensor = np.stack([tensor, np.zeros_like(tensor)], axis=0)
    owners = list(reversed(spare)) + [positions[label] for label in labels]
    perm = [owners.index(m - 1 - axis) for axis in range(m)] + [m]
    return tensor.transpose(perm).reshape(2 ** m, batch)
