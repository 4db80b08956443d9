"""Circuit representation, circuit language and dependency graphs."""

from qcmap.circuit.parser import parse_circuit, print_circuit, read_circuit, write_circuit
from qcmap.circuit.dependency_graph import (
    DependencyGraph,
    DependencyGraphBuilder,
    build_dependency_graph,
    frontier,
    mark_scheduled,
)

__all__ = [
    'parse_circuit',
    'print_circuit',
    'read_circuit',
    'write_circuit',
    'DependencyGraph',
    'DependencyGraphBuilder',
    'build_dependency_graph',
    'frontier',
    'mark_scheduled',
]
