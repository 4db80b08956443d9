"""Orientation fixes for two-qubit gates on directed couplings."""

from typing import List, Tuple

from qcmap.decomposer.engine import orient
from qcmap.schemas.circuit_schema import Gate
from qcmap.schemas.device_schema import Device


def fix_direction(gate: Gate, device: Device) -> Tuple[List[Gate], bool]:
    """
    Return ``gate`` in an allowed orientation.

    A CNOT against the coupling direction becomes its five-gate H-conjugated
    reversal (with native H gates) and the flag is True. Symmetric kinds
    swap operands and the flag stays False.

    Raises:
        NotCoupled: operands are not coupled
    """
    return orient(gate, device)
