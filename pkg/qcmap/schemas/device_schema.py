"""Hardware description schemas: coupling graph, native gates, timing, channels."""

from enum import Enum
from typing import Dict, FrozenSet, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from qcmap.errors import DisconnectedGraph, MissingDuration
from qcmap.schemas.circuit_schema import GateKind


class CouplingKind(str, Enum):
    """Answer of a coupling query for an ordered pair (i, j)."""

    NO = "no"
    YES_SYMMETRIC = "yes_symmetric"
    YES_I_TO_J_ONLY = "yes_i_to_j_only"
    YES_J_TO_I_ONLY = "yes_j_to_i_only"


class ChannelScope(str, Enum):
    """Which gates a shared control channel drives."""

    ONE_QUBIT = "1q"
    TWO_QUBIT = "2q"


class Coupling(BaseModel):
    """One coupling-graph edge. Directed edges point control -> target."""

    model_config = ConfigDict(frozen=True)

    source: int = Field(ge=0)
    target: int = Field(ge=0)
    directed: bool = False

    @property
    def pair(self) -> Tuple[int, int]:
        return (min(self.source, self.target), max(self.source, self.target))


class ControlChannel(BaseModel):
    """Control instrument shared by a group of qubits."""

    model_config = ConfigDict(frozen=True)

    id: str = Field(description="Channel identifier")
    qubits: FrozenSet[int] = Field(description="Physical qubits driven by this channel")
    scope: ChannelScope = Field(description="Gate arity the channel drives")

    @model_validator(mode="after")
    def _non_empty(self) -> "ControlChannel":
        if not self.qubits:
            raise ValueError(f"channel {self.id} drives no qubits")
        return self


class EdgeErrorRate(BaseModel):
    """Error rate of a two-qubit gate kind on one specific edge."""

    model_config = ConfigDict(frozen=True)

    kind: GateKind
    pair: Tuple[int, int]
    rate: float = Field(ge=0.0, lt=1.0)


class Device(BaseModel):
    """Immutable description of a quantum processor."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(description="Device name")
    qubit_count: int = Field(gt=0, description="Number of physical qubits")
    edges: Tuple[Coupling, ...] = Field(default=(), description="Coupling graph edges")
    native_1q: FrozenSet[GateKind] = Field(description="Device-wide native one-qubit gates")
    native_1q_overrides: Dict[int, FrozenSet[GateKind]] = Field(
        default_factory=dict,
        description="Per-qubit replacement of the device-wide one-qubit set",
    )
    native_2q: GateKind = Field(description="Native two-qubit gate kind")
    native_2q_symmetric: bool = Field(
        True, description="False when the coupling direction fixes control and target"
    )
    durations: Dict[GateKind, int] = Field(default_factory=dict, description="Gate durations")
    error_rates: Dict[GateKind, float] = Field(default_factory=dict, description="Per-kind error rates")
    edge_error_rates: Tuple[EdgeErrorRate, ...] = Field(default=(), description="Per-edge error rates")
    channels: Tuple[ControlChannel, ...] = Field(default=(), description="Shared control channels")
    measurable: Tuple[bool, ...] = Field(description="Per-qubit measurability")

    @model_validator(mode="after")
    def _check_invariants(self) -> "Device":
        n = self.qubit_count
        seen = set()
        for edge in self.edges:
            if edge.source == edge.target:
                raise ValueError(f"self-loop on q{edge.source}")
            if edge.source >= n or edge.target >= n:
                raise ValueError(f"edge q{edge.source}-q{edge.target} outside 0..{n - 1}")
            if edge.pair in seen:
                raise ValueError(f"duplicate edge q{edge.pair[0]}-q{edge.pair[1]}")
            seen.add(edge.pair)

        graph = nx.Graph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from(edge.pair for edge in self.edges)
        if not nx.is_connected(graph):
            raise DisconnectedGraph(f"coupling graph of {self.name} is not connected")

        for q in self.native_1q_overrides:
            if not 0 <= q < n:
                raise ValueError(f"gate1q override for q{q} outside 0..{n - 1}")
        if self.native_2q.arity != 2:
            raise ValueError(f"gate2q {self.native_2q.value} is not a two-qubit gate")

        for kind in self.native_kinds():
            if kind not in self.durations:
                raise MissingDuration(f"no duration for native gate {kind.value}")
        if any(d <= 0 for d in self.durations.values()):
            raise ValueError("durations must be positive")
        if any(not 0.0 <= p < 1.0 for p in self.error_rates.values()):
            raise ValueError("error rates must lie in [0, 1)")
        for entry in self.edge_error_rates:
            if entry.pair not in seen:
                raise ValueError(f"error rate given for uncoupled pair {entry.pair}")

        for channel in self.channels:
            if any(not 0 <= q < n for q in channel.qubits):
                raise ValueError(f"channel {channel.id} drives qubits outside 0..{n - 1}")
        if len(self.measurable) != n:
            raise ValueError("measurable must list one flag per qubit")
        return self

    def __hash__(self) -> int:
        return hash((self.name, self.qubit_count, self.edges, self.native_2q))

    def native_1q_for(self, qubit: int) -> FrozenSet[GateKind]:
        return self.native_1q_overrides.get(qubit, self.native_1q)

    def native_kinds(self) -> FrozenSet[GateKind]:
        """Every kind native on at least one qubit (MEASURE excluded)."""
        kinds = set(self.native_1q) | {self.native_2q}
        for override in self.native_1q_overrides.values():
            kinds |= override
        return frozenset(kinds)

    def duration_of(self, kind: GateKind) -> int:
        return self.durations.get(kind, 1)

    def edge_error(self, kind: GateKind, a: int, b: int) -> Optional[float]:
        """Error rate for ``kind`` on edge (a, b), falling back to the per-kind rate."""
        pair = (min(a, b), max(a, b))
        for entry in self.edge_error_rates:
            if entry.kind is kind and entry.pair == pair:
                return entry.rate
        return self.error_rates.get(kind)

    @property
    def has_error_data(self) -> bool:
        return bool(self.error_rates) or bool(self.edge_error_rates)
