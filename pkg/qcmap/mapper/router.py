"""SWAP routing.

All routers take a native circuit over program qubits and produce a circuit
over physical qubits in which every two-qubit gate acts on a coupled pair
in an allowed orientation. SWAPs are emitted as SWAP gates; the pipeline
decomposes them afterwards. Measurements are deferred to the end of the
routed circuit in their original order.
"""

import heapq
import itertools
import logging
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import numpy as np

from qcmap.circuit.dependency_graph import DependencyGraph, build_dependency_graph
from qcmap.device.topology import Topology, topology
from qcmap.errors import ExactLimitExceeded, InfeasibleDevice, RoutingError
from qcmap.mapper.direction import fix_direction
from qcmap.schemas.circuit_schema import Circuit, Gate, GateKind, make_gate
from qcmap.schemas.device_schema import Device
from qcmap.schemas.mapping_schema import (
    FREE,
    CostMode,
    Placement,
    RoutedResult,
    RouterConfig,
    RouterStrategy,
)

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]

_COST_TIE = 1e-12


def route(
    circuit: Circuit,
    device: Device,
    placement: Placement,
    config: Optional[RouterConfig] = None,
) -> RoutedResult:
    """
    Route a native circuit onto a device from an initial placement.

    Raises:
        ExactLimitExceeded: EXACT requested outside its limits
        InfeasibleDevice: two-qubit gates on a device without couplings
        RoutingError: a measurement cannot reach a measurable qubit
    """
    config = config or RouterConfig()
    if len(placement.slots) != device.qubit_count:
        raise ValueError(f"placement has {len(placement.slots)} slots, {device.name} has {device.qubit_count} qubits")
    if placement.program_count != circuit.qubit_count:
        raise ValueError(f"placement holds {placement.program_count} program qubits, circuit has {circuit.qubit_count}")
    if not device.edges and circuit.two_qubit_gates():
        raise InfeasibleDevice(f"{device.name} has no couplings for two-qubit gates")

    logger.debug("routing %d gates on %s with %s", circuit.gate_count, device.name, config.strategy.value)
    if config.strategy is RouterStrategy.NAIVE:
        return route_naive(circuit, device, placement)
    if config.strategy is RouterStrategy.EXACT:
        return route_exact(circuit, device, placement, config)
    return route_lookahead(circuit, device, placement, config)


class RoutingState:
    """Placement being rewritten plus the physical gates emitted so far."""

    def __init__(self, device: Device, placement: Placement):
        self.device = device
        self.topo: Topology = topology(device)
        self.initial = placement
        self.slots: List[int] = list(placement.slots)
        self.pos: List[int] = placement.positions()
        self.gates: List[Gate] = []
        self.swaps = 0
        self.fixes = 0

    def physical(self, gate: Gate) -> Tuple[int, ...]:
        return tuple(self.pos[q] for q in gate.operands)

    def adjacent(self, gate: Gate) -> bool:
        return self.topo.is_adjacent(*self.physical(gate))

    def swap(self, a: int, b: int) -> None:
        pa, pb = self.slots[a], self.slots[b]
        self.slots[a], self.slots[b] = pb, pa
        if pa != FREE:
            self.pos[pa] = b
        if pb != FREE:
            self.pos[pb] = a
        self.gates.append(make_gate(GateKind.SWAP, min(a, b), max(a, b)))
        self.swaps += 1

    def emit(self, gate: Gate) -> None:
        physical = gate.on(*self.physical(gate))
        if not physical.is_two_qubit:
            self.gates.append(physical)
            return
        gates, fixed = fix_direction(physical, self.device)
        self.gates.extend(gates)
        self.fixes += int(fixed)

    def bring_together(self, gate: Gate) -> None:
        """Walk the first operand along a shortest path until it neighbours the second."""
        a, b = self.physical(gate)
        path = self.topo.shortest_path(a, b)
        for k in range(len(path) - 2):
            self.swap(path[k], path[k + 1])

    def drain(self, graph: DependencyGraph) -> int:
        """Execute frontier gates until none is executable; returns two-qubit gates run."""
        executed = 0
        while True:
            ready = [
                k for k in sorted(graph.frontier())
                if not graph.gates[k].is_two_qubit or self.adjacent(graph.gates[k])
            ]
            if not ready:
                return executed
            for k in ready:
                self.emit(graph.gates[k])
                graph.mark_scheduled(k)
                executed += int(graph.gates[k].is_two_qubit)

    def measure_all(self, measures: Sequence[Gate]) -> None:
        """Emit deferred measurements, moving qubits to measurable sites first."""
        reserved: Set[int] = set()
        for gate in measures:
            program = gate.operands[0]
            here = self.pos[program]
            if not self.device.measurable[here]:
                path = self._path_to_measurable(here, reserved)
                for k in range(len(path) - 1):
                    self.swap(path[k], path[k + 1])
            reserved.add(self.pos[program])
            self.emit(gate)

    def _path_to_measurable(self, here: int, reserved: Set[int]) -> List[int]:
        sites = [
            q for q in range(self.device.qubit_count)
            if self.device.measurable[q] and q not in reserved
        ]
        for site in sorted(sites, key=lambda q: (self.topo.distance(here, q), q)):
            path = self.topo.shortest_path(here, site, avoid=frozenset(reserved))
            if path:
                return path
        raise RoutingError(f"no free measurable qubit reachable from q{here} on {self.device.name}")

    def result(self, strategy: RouterStrategy) -> RoutedResult:
        return RoutedResult(
            circuit=Circuit(qubit_count=self.device.qubit_count, gates=tuple(self.gates)),
            initial_placement=self.initial,
            final_placement=Placement(slots=tuple(self.slots)),
            swaps_added=self.swaps,
            direction_fixes=self.fixes,
            strategy=strategy,
        )


def _split_measures(circuit: Circuit) -> Tuple[Circuit, List[Gate]]:
    body = tuple(g for g in circuit.gates if g.kind is not GateKind.MEASURE)
    measures = [g for g in circuit.gates if g.kind is GateKind.MEASURE]
    return Circuit(qubit_count=circuit.qubit_count, gates=body), measures


def route_naive(circuit: Circuit, device: Device, placement: Placement) -> RoutedResult:
    """Circuit order; each blocked gate pulls its first operand to its second."""
    body, measures = _split_measures(circuit)
    state = RoutingState(device, placement)
    for gate in body.gates:
        if gate.is_two_qubit and not state.adjacent(gate):
            state.bring_together(gate)
        state.emit(gate)
    state.measure_all(measures)
    return state.result(RouterStrategy.NAIVE)


def route_lookahead(
    circuit: Circuit,
    device: Device,
    placement: Placement,
    config: RouterConfig,
) -> RoutedResult:
    """
    Greedy SWAP selection over the dependency-graph frontier.

    Each candidate SWAP touches a qubit of a blocked frontier gate and is
    scored by ``w0 * sum(frontier distances) + w1 * sum(window distances)``
    after the swap. Ties go to the smallest edge, or to a seeded random
    pick when ``config.seed`` is set. When SWAPs stop making progress the
    lowest-index blocked gate is routed naively. If NAIVE needs fewer SWAPs
    on the same input, its routing is returned instead.
    """
    body, measures = _split_measures(circuit)
    graph = build_dependency_graph(body)
    state = RoutingState(device, placement)
    topo = state.topo
    dist: Callable[[int, int], float] = (
        topo.weighted_distance if config.cost is CostMode.RELIABILITY else topo.distance
    )
    rng = np.random.default_rng(config.seed) if config.seed is not None else None
    stall_limit = max(3, device.qubit_count)
    stalled = 0

    while True:
        if state.drain(graph):
            stalled = 0
        if graph.is_done():
            break
        front = sorted(graph.frontier())
        if stalled >= stall_limit:
            gate = body.gates[front[0]]
            state.bring_together(gate)
            state.emit(gate)
            graph.mark_scheduled(front[0])
            stalled = 0
            continue
        front_set = set(front)
        window = [
            k for k in graph.pending()
            if k not in front_set and body.gates[k].is_two_qubit
        ][: config.window]
        edge = _choose_swap(state, [body.gates[k] for k in front], [body.gates[k] for k in window], dist, config, rng)
        state.swap(*edge)
        stalled += 1

    state.measure_all(measures)
    result = state.result(RouterStrategy.LOOKAHEAD)

    baseline = route_naive(circuit, device, placement)
    if baseline.swaps_added < result.swaps_added:
        logger.debug("look-ahead used %d swaps, naive %d; keeping naive routing", result.swaps_added, baseline.swaps_added)
        return baseline.model_copy(update={"strategy": RouterStrategy.LOOKAHEAD})
    return result


def _choose_swap(
    state: RoutingState,
    front: List[Gate],
    window: List[Gate],
    dist: Callable[[int, int], float],
    config: RouterConfig,
    rng: Optional[np.random.Generator],
) -> Edge:
    touched = sorted({p for gate in front for p in state.physical(gate)})
    candidates = sorted({
        (min(p, nb), max(p, nb)) for p in touched for nb in state.topo.neighbors[p]
    })

    def after(edge: Edge, p: int) -> int:
        if p == edge[0]:
            return edge[1]
        if p == edge[1]:
            return edge[0]
        return p

    def cost(edge: Edge) -> float:
        total = 0.0
        for weight, gates in ((config.w0, front), (config.w1, window)):
            if not weight:
                continue
            for gate in gates:
                a, b = state.physical(gate)
                total += weight * dist(after(edge, a), after(edge, b))
        return total

    scored = [(cost(edge), edge) for edge in candidates]
    best = min(c for c, _ in scored)
    ties = [edge for c, edge in scored if c <= best + _COST_TIE]
    if rng is not None and len(ties) > 1:
        return ties[int(rng.integers(len(ties)))]
    return ties[0]


def route_exact(
    circuit: Circuit,
    device: Device,
    placement: Placement,
    config: RouterConfig,
) -> RoutedResult:
    """
    Minimum-SWAP routing by uniform-cost search.

    States are (placement, set of executed two-qubit gates). After every
    SWAP all two-qubit gates whose predecessors ran and whose operands are
    coupled execute for free, so the search covers every execution order
    compatible with the dependency graph.

    Raises:
        ExactLimitExceeded: too many program qubits or two-qubit gates
    """
    body, measures = _split_measures(circuit)
    two = [k for k, g in enumerate(body.gates) if g.is_two_qubit]
    if circuit.qubit_count > config.exact_max_qubits or len(two) > config.exact_max_two_qubit_gates:
        raise ExactLimitExceeded(
            f"exact routing handles at most {config.exact_max_qubits} qubits and "
            f"{config.exact_max_two_qubit_gates} two-qubit gates; got {circuit.qubit_count} and {len(two)}"
        )

    swaps = _search_min_swaps(body, two, device, placement)
    logger.debug("exact routing found %d swaps", len(swaps))

    graph = build_dependency_graph(body)
    state = RoutingState(device, placement)
    state.drain(graph)
    for edge in swaps:
        state.swap(*edge)
        state.drain(graph)
    if not graph.is_done():
        raise RoutingError("exact routing replay left gates unexecuted")
    state.measure_all(measures)
    return state.result(RouterStrategy.EXACT)


_State = Tuple[Tuple[int, ...], FrozenSet[int]]


def _search_min_swaps(body: Circuit, two: List[int], device: Device, placement: Placement) -> List[Edge]:
    topo = topology(device)
    gates = body.gates
    preds: Dict[int, FrozenSet[int]] = {}
    last: Dict[int, int] = {}
    for k in two:
        preds[k] = frozenset(last[q] for q in gates[k].operands if q in last)
        for q in gates[k].operands:
            last[q] = k
    goal = frozenset(two)

    def positions(slots: Tuple[int, ...]) -> Dict[int, int]:
        return {program: physical for physical, program in enumerate(slots) if program != FREE}

    def closure(slots: Tuple[int, ...], done: FrozenSet[int]) -> FrozenSet[int]:
        pos = positions(slots)
        executed = set(done)
        changed = True
        while changed:
            changed = False
            for k in two:
                if k in executed or not preds[k] <= executed:
                    continue
                a, b = gates[k].operands
                if topo.is_adjacent(pos[a], pos[b]):
                    executed.add(k)
                    changed = True
        return frozenset(executed)

    start: _State = (placement.slots, closure(placement.slots, frozenset()))
    best: Dict[_State, int] = {start: 0}
    parent: Dict[_State, Tuple[Optional[_State], Optional[Edge]]] = {start: (None, None)}
    order = itertools.count()
    heap = [(0, next(order), start)]

    while heap:
        cost, _, current = heapq.heappop(heap)
        if cost > best[current]:
            continue
        slots, done = current
        if done == goal:
            edges: List[Edge] = []
            node: Optional[_State] = current
            while node is not None:
                prev, edge = parent[node]
                if edge is not None:
                    edges.append(edge)
                node = prev
            return edges[::-1]
        busy = {q for k in two if k not in done for q in gates[k].operands}
        for a, b in topo.skeleton_edges:
            # A swap that moves no qubit with pending gates cannot help.
            if slots[a] not in busy and slots[b] not in busy:
                continue
            moved = list(slots)
            moved[a], moved[b] = moved[b], moved[a]
            new_slots = tuple(moved)
            nxt: _State = (new_slots, closure(new_slots, done))
            if nxt not in best or cost + 1 < best[nxt]:
                best[nxt] = cost + 1
                parent[nxt] = (current, (a, b))
                heapq.heappush(heap, (cost + 1, next(order), nxt))
    raise RoutingError(f"no swap sequence executes the circuit on {device.name}")
