"""Dependency graph over the gates of a circuit."""

from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence

import networkx as nx

from qcmap.errors import NotSchedulable
from qcmap.schemas.circuit_schema import Circuit, Gate, NodeStatus


class DependencyGraph:
    """
    DAG whose nodes are gate positions in a circuit.

    An edge ``i -> j`` means gate ``j`` is the next gate after ``i`` on some
    shared qubit. Nodes are PENDING, FRONTIER or SCHEDULED; only
    ``mark_scheduled`` mutates the graph.
    """

    def __init__(self, gates: Sequence[Gate], graph: nx.DiGraph):
        self.gates = tuple(gates)
        self.graph = graph
        self._scheduled = [False] * len(self.gates)
        self._waiting = [graph.in_degree(i) for i in range(len(self.gates))]
        self._frontier = {i for i, count in enumerate(self._waiting) if count == 0}

    def __len__(self) -> int:
        return len(self.gates)

    def status(self, node: int) -> NodeStatus:
        if self._scheduled[node]:
            return NodeStatus.SCHEDULED
        if node in self._frontier:
            return NodeStatus.FRONTIER
        return NodeStatus.PENDING

    def statuses(self) -> List[NodeStatus]:
        return [self.status(i) for i in range(len(self.gates))]

    def frontier(self) -> FrozenSet[int]:
        return frozenset(self._frontier)

    def predecessors(self, node: int) -> List[int]:
        return sorted(self.graph.predecessors(node))

    def successors(self, node: int) -> List[int]:
        return sorted(self.graph.successors(node))

    def edges(self) -> List[tuple]:
        return sorted(self.graph.edges())

    def is_done(self) -> bool:
        return not self._frontier

    def pending(self) -> List[int]:
        return [i for i, done in enumerate(self._scheduled) if not done]

    def mark_scheduled(self, node: int) -> "DependencyGraph":
        """
        Mark a FRONTIER node SCHEDULED and promote successors that became ready.

        Raises:
            NotSchedulable: Node is not in the frontier
        """
        if node not in self._frontier:
            raise NotSchedulable(f"gate #{node} is {self.status(node).value}, not frontier")
        self._frontier.discard(node)
        self._scheduled[node] = True
        for succ in self.graph.successors(node):
            self._waiting[succ] -= 1
            if self._waiting[succ] == 0:
                self._frontier.add(succ)
        return self

    def copy(self) -> "DependencyGraph":
        clone = DependencyGraph(self.gates, self.graph)
        clone._scheduled = list(self._scheduled)
        clone._waiting = list(self._waiting)
        clone._frontier = set(self._frontier)
        return clone

    def restore(self, scheduled: Iterable[int]) -> "DependencyGraph":
        """Replay a set of scheduled nodes onto a fresh graph, in topological order."""
        wanted = set(scheduled)
        for node in nx.lexicographical_topological_sort(self.graph):
            if node in wanted:
                self.mark_scheduled(node)
        return self


class DependencyGraphBuilder:
    """Builds the strict qubit-line dependency graph of a circuit"""

    def __init__(self, circuit: Circuit):
        """
        Initialize graph builder

        Args:
            circuit: Circuit to analyse
        """
        self.circuit = circuit

    def build(self) -> DependencyGraph:
        """
        Build the dependency graph.

        Each gate depends on the most recent earlier gate touching each of
        its qubits.

        Returns:
            DependencyGraph with every node PENDING or FRONTIER
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.circuit.gates)))
        last_on_qubit: Dict[int, int] = {}

        for index, gate in enumerate(self.circuit.gates):
            for q in gate.operands:
                previous: Optional[int] = last_on_qubit.get(q)
                if previous is not None:
                    graph.add_edge(previous, index)
                last_on_qubit[q] = index

        return DependencyGraph(self.circuit.gates, graph)


def build_dependency_graph(circuit: Circuit) -> DependencyGraph:
    return DependencyGraphBuilder(circuit).build()


def frontier(graph: DependencyGraph) -> FrozenSet[int]:
    return graph.frontier()


def mark_scheduled(graph: DependencyGraph, node: int) -> DependencyGraph:
    return graph.mark_scheduled(node)
