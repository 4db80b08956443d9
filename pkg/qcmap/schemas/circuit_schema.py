"""Circuit intermediate representation: gate kinds, gates, circuits."""

from enum import Enum
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class GateKind(str, Enum):
    """Gate kinds understood by every qcmap module.

    The value is the lower-case mnemonic used by the circuit and device
    languages.
    """

    H = "h"
    X = "x"
    Y = "y"
    Z = "z"
    S = "s"
    SDG = "sdg"
    T = "t"
    TDG = "tdg"
    RX = "rx"
    RY = "ry"
    RZ = "rz"
    U3 = "u3"
    CNOT = "cnot"
    CZ = "cz"
    SWAP = "swap"
    MEASURE = "measure"

    @property
    def arity(self) -> int:
        return 2 if self in _TWO_QUBIT else 1

    @property
    def param_count(self) -> int:
        if self in (GateKind.RX, GateKind.RY, GateKind.RZ):
            return 1
        if self is GateKind.U3:
            return 3
        return 0

    @property
    def symmetric(self) -> bool:
        """True when exchanging the two operands leaves the unitary unchanged."""
        return self in (GateKind.CZ, GateKind.SWAP)

    @classmethod
    def parse(cls, text: str) -> "GateKind":
        """Look up a kind by mnemonic (case-insensitive, `cx` accepted for `cnot`)."""
        key = text.strip().lower()
        key = _ALIASES.get(key, key)
        return cls(key)


_TWO_QUBIT = frozenset({GateKind.CNOT, GateKind.CZ, GateKind.SWAP})
_ALIASES = {"cx": "cnot"}


class Gate(BaseModel):
    """One gate application.

    Operand order is significant: for CNOT operand 0 is the control and
    operand 1 the target. Angles are radians.
    """

    model_config = ConfigDict(frozen=True)

    kind: GateKind = Field(description="Gate kind")
    operands: Tuple[int, ...] = Field(description="Qubit indices, in gate operand order")
    params: Tuple[float, ...] = Field(default=(), description="Angles in radians")

    @model_validator(mode="after")
    def _check_shape(self) -> "Gate":
        if len(self.operands) != self.kind.arity:
            raise ValueError(
                f"{self.kind.value} takes {self.kind.arity} operand(s), got {len(self.operands)}"
            )
        if len(set(self.operands)) != len(self.operands):
            raise ValueError(f"{self.kind.value} operands must be distinct")
        if any(q < 0 for q in self.operands):
            raise ValueError("qubit indices must be non-negative")
        if len(self.params) != self.kind.param_count:
            raise ValueError(
                f"{self.kind.value} takes {self.kind.param_count} parameter(s), got {len(self.params)}"
            )
        return self

    @property
    def is_two_qubit(self) -> bool:
        return self.kind.arity == 2

    def on(self, *operands: int) -> "Gate":
        """Same kind and params on other operands."""
        return Gate(kind=self.kind, operands=tuple(operands), params=self.params)

    def waveform(self) -> Tuple[GateKind, Tuple[float, ...]]:
        """Control-electronics waveform tag: kind plus params."""
        return (self.kind, self.params)

    def __str__(self) -> str:
        parts = [f"q{q}" for q in self.operands] + [repr(float(p)) for p in self.params]
        return f"{self.kind.value} {', '.join(parts)}"


def make_gate(kind: GateKind, *operands: int, params: Tuple[float, ...] = ()) -> Gate:
    """Shorthand constructor: ``make_gate(GateKind.CNOT, 0, 1)``."""
    return Gate(kind=kind, operands=tuple(operands), params=tuple(float(p) for p in params))


class Circuit(BaseModel):
    """Ordered gate sequence over qubits ``0..qubit_count-1``."""

    model_config = ConfigDict(frozen=True)

    qubit_count: int = Field(ge=0, description="Number of qubits")
    gates: Tuple[Gate, ...] = Field(default=(), description="Gates in execution order")

    @model_validator(mode="after")
    def _check_operands(self) -> "Circuit":
        # Measurement terminality is a parse-time rule; check_constraints
        # reports it for circuits built programmatically.
        for index, gate in enumerate(self.gates):
            for q in gate.operands:
                if q >= self.qubit_count:
                    raise ValueError(f"gate #{index} uses q{q} but circuit has {self.qubit_count} qubits")
        return self

    @property
    def gate_count(self) -> int:
        return len(self.gates)

    def two_qubit_gates(self) -> Tuple[Gate, ...]:
        return tuple(g for g in self.gates if g.is_two_qubit)

    def count(self, kind: GateKind) -> int:
        return sum(1 for g in self.gates if g.kind is kind)

    def extended(self, gates) -> "Circuit":
        """New circuit with ``gates`` appended."""
        return Circuit(qubit_count=self.qubit_count, gates=self.gates + tuple(gates))


class NodeStatus(str, Enum):
    """Scheduling status of a dependency-graph node.

    FRONTIER is a PENDING node whose predecessors are all SCHEDULED.
    """

    SCHEDULED = "scheduled"
    PENDING = "pending"
    FRONTIER = "frontier"
