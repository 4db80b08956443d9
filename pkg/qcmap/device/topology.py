"""Coupling-graph queries: coupling direction, hop distance, shortest paths."""

import math
from collections import deque
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from qcmap.errors import IndexOutOfRange
from qcmap.schemas.circuit_schema import GateKind
from qcmap.schemas.device_schema import CouplingKind, Device

MIN_EDGE_WEIGHT = 1e-9
"""Weight of an edge with no error data, so weighted distances stay a metric."""


class Topology:
    """Precomputed view of a device's coupling graph.

    Build through :func:`topology` so one instance is shared per device.
    """

    def __init__(self, device: Device):
        self.device = device
        self.qubit_count = device.qubit_count
        self.graph = nx.Graph()
        self.graph.add_nodes_from(range(device.qubit_count))
        self._allowed: Dict[Tuple[int, int], bool] = {}
        for edge in device.edges:
            self.graph.add_edge(*edge.pair)
            self._allowed[(edge.source, edge.target)] = True
            if not edge.directed:
                self._allowed[(edge.target, edge.source)] = True
        self.neighbors: Dict[int, Tuple[int, ...]] = {
            q: tuple(sorted(self.graph.neighbors(q))) for q in range(device.qubit_count)
        }
        self.skeleton_edges: Tuple[Tuple[int, int], ...] = tuple(sorted(e.pair for e in device.edges))
        lengths = dict(nx.all_pairs_shortest_path_length(self.graph))
        self._hops = [[lengths[i][j] for j in range(self.qubit_count)] for i in range(self.qubit_count)]
        self._weighted: Optional[List[List[float]]] = None

    def _check(self, *qubits: int) -> None:
        for q in qubits:
            if not 0 <= q < self.qubit_count:
                raise IndexOutOfRange(f"q{q} outside 0..{self.qubit_count - 1} on {self.device.name}")

    def coupling(self, i: int, j: int) -> CouplingKind:
        self._check(i, j)
        forward = self._allowed.get((i, j), False)
        backward = self._allowed.get((j, i), False)
        if forward and backward:
            return CouplingKind.YES_SYMMETRIC
        if forward:
            return CouplingKind.YES_I_TO_J_ONLY
        if backward:
            return CouplingKind.YES_J_TO_I_ONLY
        return CouplingKind.NO

    def is_adjacent(self, i: int, j: int) -> bool:
        return self.coupling(i, j) is not CouplingKind.NO

    def allows(self, control: int, target: int) -> bool:
        """True when the native two-qubit gate may run with this operand order."""
        if self.device.native_2q_symmetric:
            return self.is_adjacent(control, target)
        return self._allowed.get((control, target), False)

    def distance(self, i: int, j: int) -> int:
        self._check(i, j)
        return self._hops[i][j]

    def shortest_path(self, i: int, j: int, avoid: FrozenSet[int] = frozenset()) -> List[int]:
        """BFS path from i to j; each node keeps its lowest-index predecessor.

        Qubits in ``avoid`` are never used as intermediate hops. Returns an
        empty list when ``avoid`` disconnects i from j.
        """
        self._check(i, j)
        if i == j:
            return [i]
        parent = {i: i}
        layer = [i]
        while layer and j not in parent:
            found: Dict[int, int] = {}
            for node in sorted(layer):
                for nb in self.neighbors[node]:
                    if nb in parent or nb in found:
                        continue
                    if nb in avoid and nb != j:
                        continue
                    found[nb] = node
            parent.update(found)
            layer = list(found)
        if j not in parent:
            return []
        path = [j]
        while path[-1] != i:
            path.append(parent[path[-1]])
        return path[::-1]

    def nearest(self, source: int, candidates) -> Optional[int]:
        """Closest qubit in ``candidates`` by hops, lowest index on ties."""
        ranked = sorted(candidates, key=lambda q: (self.distance(source, q), q))
        return ranked[0] if ranked else None

    def edge_weight(self, a: int, b: int) -> float:
        """Reliability weight ``-log(1 - error)`` of the coupling (a, b)."""
        rate = self.device.edge_error(self.device.native_2q, a, b)
        if not rate:
            return MIN_EDGE_WEIGHT
        return max(-math.log1p(-rate), MIN_EDGE_WEIGHT)

    def weighted_distance(self, i: int, j: int) -> float:
        self._check(i, j)
        if self._weighted is None:
            weighted = nx.Graph()
            weighted.add_nodes_from(range(self.qubit_count))
            for a, b in self.skeleton_edges:
                weighted.add_edge(a, b, weight=self.edge_weight(a, b))
            lengths = dict(nx.all_pairs_dijkstra_path_length(weighted))
            self._weighted = [[lengths[a][b] for b in range(self.qubit_count)] for a in range(self.qubit_count)]
        return self._weighted[i][j]


@lru_cache(maxsize=32)
def topology(device: Device) -> Topology:
    return Topology(device)


def are_coupled(device: Device, i: int, j: int) -> CouplingKind:
    """Coupling answer for the ordered pair (i, j); (i, i) is never coupled.

    Raises:
        IndexOutOfRange: i or j not a physical qubit of ``device``
    """
    return topology(device).coupling(i, j)


def distance(device: Device, i: int, j: int) -> int:
    """Hop count between i and j in the undirected skeleton."""
    return topology(device).distance(i, j)


def shortest_path(device: Device, i: int, j: int) -> List[int]:
    return topology(device).shortest_path(i, j)


def native_allows(device: Device, kind: GateKind, qubit: int) -> bool:
    """True when a one-qubit ``kind`` is native on physical ``qubit``."""
    if kind is GateKind.MEASURE:
        return True
    return kind in device.native_1q_for(qubit)
