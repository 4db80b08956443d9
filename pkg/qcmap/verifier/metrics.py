"""Mapping cost metrics."""

from typing import Optional

from qcmap.schemas.circuit_schema import Circuit
from qcmap.schemas.device_schema import Device
from qcmap.schemas.mapping_schema import RoutedResult
from qcmap.schemas.metrics_schema import MetricsReport
from qcmap.schemas.schedule_schema import Schedule


def reliability(circuit: Circuit, device: Device) -> Optional[float]:
    """Product of per-gate success probabilities, None without error data.

    Two-qubit gates use the rate of their edge when the device gives one.
    Gates without a rate count as error-free.
    """
    if not device.has_error_data:
        return None
    value = 1.0
    for gate in circuit.gates:
        if gate.is_two_qubit:
            rate = device.edge_error(gate.kind, *gate.operands)
        else:
            rate = device.error_rates.get(gate.kind)
        if rate:
            value *= 1.0 - rate
    return value


def metrics(before: Circuit, routed: RoutedResult, schedule: Schedule, device: Device) -> MetricsReport:
    """
    Cost figures of one mapping run.

    Args:
        before: Native circuit before routing
        routed: Routing result holding the final native circuit
        schedule: Schedule of ``routed.circuit``
        device: Target device
    """
    return MetricsReport(
        gates_before=before.gate_count,
        gates_after=routed.circuit.gate_count,
        swaps_added=routed.swaps_added,
        direction_fixes=routed.direction_fixes,
        depth_cycles=schedule.depth,
        reliability=reliability(routed.circuit, device),
    )
