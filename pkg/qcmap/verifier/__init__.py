"""Ground truth: unitaries, simulation, constraint checking, equivalence, metrics."""

from qcmap.verifier.unitary import circuit_unitary, gate_unitary, global_phase_distance
from qcmap.verifier.simulator import (
    basis_index,
    basis_label,
    nonzero_amplitudes,
    simulate,
    simulate_batch,
)
from qcmap.verifier.constraints import check_constraints
from qcmap.verifier.equivalence import equivalent
from qcmap.verifier.metrics import metrics, reliability

__all__ = [
    'circuit_unitary',
    'gate_unitary',
    'global_phase_distance',
    'basis_index',
    'basis_label',
    'nonzero_amplitudes',
    'simulate',
    'simulate_batch',
    'check_constraints',
    'equivalent',
    'metrics',
    'reliability',
]
