"""Constraint violations and mapping metrics."""

from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class ViolationKind(str, Enum):
    """Categories reported by the constraint checker."""

    COUPLING = "coupling"
    ORIENTATION = "orientation"
    NON_NATIVE = "non-native"
    MEASURED_REUSE = "measured-reuse"
    UNMEASURABLE = "unmeasurable"


class Violation(BaseModel):
    """One device constraint broken by one gate."""

    model_config = ConfigDict(frozen=True)

    kind: ViolationKind
    gate_index: int = Field(ge=0)
    qubits: Tuple[int, ...]
    detail: str = ""

    def __str__(self) -> str:
        qubits = ",".join(str(q) for q in self.qubits)
        return f"violation {self.kind.value} gate#{self.gate_index} qubits {qubits}"


class MetricsReport(BaseModel):
    """Cost figures of a mapping run."""

    model_config = ConfigDict(frozen=True)

    gates_before: int = Field(ge=0, description="Native gates before routing")
    gates_after: int = Field(ge=0, description="Native gates after routing and SWAP decomposition")
    swaps_added: int = Field(ge=0)
    direction_fixes: int = Field(ge=0)
    depth_cycles: int = Field(ge=0)
    reliability: Optional[float] = Field(
        None, ge=0.0, le=1.0, description="Product of (1 - error) over gates; None means no-data"
    )

    @property
    def reliability_text(self) -> str:
        return "no-data" if self.reliability is None else repr(self.reliability)

    def sidecar_items(self) -> Tuple[Tuple[str, str], ...]:
        """Stable key order for the key=value sidecar."""
        return (
            ("gates_before", str(self.gates_before)),
            ("gates_after", str(self.gates_after)),
            ("swaps_added", str(self.swaps_added)),
            ("direction_fixes", str(self.direction_fixes)),
            ("depth_cycles", str(self.depth_cycles)),
            ("reliability", self.reliability_text),
        )
