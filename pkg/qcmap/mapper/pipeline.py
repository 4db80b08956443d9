"""End-to-end compilation: decompose, place, route, lower SWAPs."""

import logging
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from qcmap.decomposer.engine import decompose_swap, decompose_to_native
from qcmap.decomposer.simplify import simplify_with_index_map
from qcmap.mapper.placement import initial_placement
from qcmap.mapper.router import route
from qcmap.schemas.circuit_schema import Circuit, Gate, GateKind
from qcmap.schemas.device_schema import Device
from qcmap.schemas.mapping_schema import PlacerStrategy, RoutedResult, RouterConfig

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
SwapLedger = Dict[int, Tuple[Edge, ...]]


class CompiledCircuit(BaseModel):
    """Everything a mapping run produces before scheduling."""

    model_config = ConfigDict(frozen=True)

    source: Circuit = Field(description="Input circuit over program qubits")
    native: Circuit = Field(description="Input rewritten into native gates, before routing")
    result: RoutedResult = Field(description="Routing result holding the final native circuit")
    swap_ledger: SwapLedger = Field(
        default_factory=dict,
        description="Gate index -> SWAP edges completed by that gate, in order",
    )


def compile_circuit(
    circuit: Circuit,
    device: Device,
    config: Optional[RouterConfig] = None,
    placer: PlacerStrategy = PlacerStrategy.INTERACTION_GREEDY,
    simplify: bool = False,
) -> CompiledCircuit:
    """
    Map a circuit onto a device.

    Raises:
        NoRuleAvailable: a gate has no native form on the device
        TooManyQubits: circuit wider than the device
        ExactLimitExceeded: EXACT requested outside its limits
    """
    config = config or RouterConfig()
    native = decompose_to_native(circuit, device)
    placement = initial_placement(native, device, placer)
    routed = route(native, device, placement, config)
    lowered, ledger = lower_swaps(routed.circuit, device)
    if simplify:
        lowered, index_map = simplify_with_index_map(lowered)
        ledger = _remap_ledger(ledger, index_map)
    logger.info(
        "mapped %d gates to %d on %s (%d swaps, %d direction fixes)",
        native.gate_count, lowered.gate_count, device.name, routed.swaps_added, routed.direction_fixes,
    )
    return CompiledCircuit(
        source=circuit,
        native=native,
        result=routed.model_copy(update={"circuit": lowered}),
        swap_ledger=ledger,
    )


def lower_swaps(circuit: Circuit, device: Device) -> Tuple[Circuit, SwapLedger]:
    """Replace SWAP gates by native sequences, recording where each one ends."""
    if device.native_2q is GateKind.SWAP:
        return decompose_to_native(circuit, device, physical=True), {}
    out: List[Gate] = []
    ledger: SwapLedger = {}
    for gate in circuit.gates:
        if gate.kind is GateKind.SWAP:
            out.extend(decompose_swap(*gate.operands, device))
            ledger[len(out) - 1] = ((gate.operands[0], gate.operands[1]),)
        else:
            # Routed gates are already native and oriented.
            out.append(gate)
    return Circuit(qubit_count=circuit.qubit_count, gates=tuple(out)), ledger


def _remap_ledger(ledger: SwapLedger, index_map: Dict[int, int]) -> SwapLedger:
    """Move each marker to the closest surviving gate at or before it, else after it."""
    survivors = sorted(index_map)
    remapped: SwapLedger = {}
    for old, edges in sorted(ledger.items()):
        earlier = [k for k in survivors if k <= old]
        later = [k for k in survivors if k > old]
        if earlier:
            anchor = earlier[-1]
        elif later:
            anchor = later[0]
        else:
            continue
        target = index_map[anchor]
        remapped[target] = remapped.get(target, ()) + edges
    return remapped
