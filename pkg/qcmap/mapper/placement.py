"""Initial placement of program qubits onto physical qubits."""

import logging
from collections import Counter
from typing import Dict, List, Optional, Tuple

from qcmap.device.topology import Topology, topology
from qcmap.errors import NotCoupled, TooManyQubits
from qcmap.schemas.circuit_schema import Circuit
from qcmap.schemas.device_schema import Device
from qcmap.schemas.mapping_schema import Placement, PlacerStrategy

logger = logging.getLogger(__name__)


def initial_placement(circuit: Circuit, device: Device, strategy: PlacerStrategy) -> Placement:
    """
    Choose where each program qubit starts.

    IDENTITY puts program k on physical k. INTERACTION_GREEDY walks the
    program-qubit pairs from most to least interacting and puts each pair
    on the free coupled physical pair of highest total degree, or next to
    an already placed partner. Ties go to the lowest index.

    Raises:
        TooManyQubits: circuit wider than the device
    """
    if circuit.qubit_count > device.qubit_count:
        raise TooManyQubits(
            f"circuit needs {circuit.qubit_count} qubits, {device.name} has {device.qubit_count}"
        )
    if strategy is PlacerStrategy.IDENTITY:
        return Placement.identity(circuit.qubit_count, device.qubit_count)
    return InteractionGreedyPlacer(circuit, device).place()


class InteractionGreedyPlacer:
    def __init__(self, circuit: Circuit, device: Device):
        self.circuit = circuit
        self.device = device
        self.topo: Topology = topology(device)
        self.degree = {q: len(self.topo.neighbors[q]) for q in range(device.qubit_count)}
        self.positions: Dict[int, int] = {}
        self.used: set = set()

    def place(self) -> Placement:
        pair_counts: Counter = Counter()
        directed: Counter = Counter()
        for gate in self.circuit.two_qubit_gates():
            a, b = gate.operands
            pair_counts[(min(a, b), max(a, b))] += 1
            directed[(a, b)] += 1
        if not pair_counts:
            return Placement.identity(self.circuit.qubit_count, self.device.qubit_count)

        for (p, q), _ in sorted(pair_counts.items(), key=lambda item: (-item[1], item[0])):
            if p in self.positions and q in self.positions:
                continue
            if p in self.positions:
                self._assign(q, self._near(self.positions[p]))
            elif q in self.positions:
                self._assign(p, self._near(self.positions[q]))
            else:
                self._place_pair(p, q, directed[(p, q)] >= directed[(q, p)])

        for program in range(self.circuit.qubit_count):
            if program not in self.positions:
                self._assign(program, min(q for q in range(self.device.qubit_count) if q not in self.used))

        positions = [self.positions[k] for k in range(self.circuit.qubit_count)]
        placement = Placement.from_positions(positions, self.device.qubit_count)
        logger.debug("greedy placement on %s: %s", self.device.name, placement)
        return placement

    def _assign(self, program: int, physical: int) -> None:
        self.positions[program] = physical
        self.used.add(physical)

    def _place_pair(self, p: int, q: int, p_is_control: bool) -> None:
        free_edges = [
            (a, b) for a, b in self.topo.skeleton_edges if a not in self.used and b not in self.used
        ]
        if not free_edges:
            anchor = self._best_free()
            self._assign(p, anchor)
            self._assign(q, self._near(anchor))
            return
        u, v = min(free_edges, key=lambda e: (-(self.degree[e[0]] + self.degree[e[1]]), e))
        # On directed devices the usual control goes where it may act as control.
        if p_is_control and not self.topo.allows(u, v) and self.topo.allows(v, u):
            u, v = v, u
        self._assign(p, u)
        self._assign(q, v)

    def _best_free(self) -> int:
        free = [q for q in range(self.device.qubit_count) if q not in self.used]
        return min(free, key=lambda q: (-self.degree[q], q))

    def _near(self, anchor: int) -> int:
        free = [q for q in range(self.device.qubit_count) if q not in self.used]
        return min(free, key=lambda q: (self.topo.distance(anchor, q), -self.degree[q], q))


def apply_swap(placement: Placement, edge: Tuple[int, int], device: Optional[Device] = None) -> Placement:
    """
    Exchange the entries of two physical qubits.

    Raises:
        NotCoupled: ``device`` given and the qubits are not coupled on it
    """
    i, j = edge
    if device is not None and not topology(device).is_adjacent(i, j):
        raise NotCoupled(f"q{i} and q{j} are not coupled on {device.name}")
    slots: List[int] = list(placement.slots)
    slots[i], slots[j] = slots[j], slots[i]
    return Placement(slots=tuple(slots))
