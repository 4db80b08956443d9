"""Initial placement, SWAP routing and the compilation pipeline."""

from qcmap.mapper.placement import InteractionGreedyPlacer, apply_swap, initial_placement
from qcmap.mapper.direction import fix_direction
from qcmap.mapper.router import (
    RoutingState,
    route,
    route_exact,
    route_lookahead,
    route_naive,
)
from qcmap.mapper.pipeline import CompiledCircuit, SwapLedger, compile_circuit, lower_swaps

__all__ = [
    'InteractionGreedyPlacer',
    'apply_swap',
    'initial_placement',
    'fix_direction',
    'RoutingState',
    'route',
    'route_exact',
    'route_lookahead',
    'route_naive',
    'CompiledCircuit',
    'SwapLedger',
    'compile_circuit',
    'lower_swaps',
]
