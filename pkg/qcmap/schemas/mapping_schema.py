"""Placement, router configuration and routing results."""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from qcmap.schemas.circuit_schema import Circuit

FREE = -1
"""Placement entry of a physical qubit that holds no program qubit."""


class PlacerStrategy(str, Enum):
    """Initial placement strategies."""

    IDENTITY = "identity"
    INTERACTION_GREEDY = "greedy"


class RouterStrategy(str, Enum):
    """SWAP routing strategies."""

    NAIVE = "naive"
    LOOKAHEAD = "lookahead"
    EXACT = "exact"


class CostMode(str, Enum):
    """Distance measure the look-ahead router minimizes."""

    HOPS = "hops"
    RELIABILITY = "reliability"


class Placement(BaseModel):
    """Physical -> program qubit array.

    ``slots[k]`` is the program qubit on physical qubit ``k`` or ``FREE``.
    """

    model_config = ConfigDict(frozen=True)

    slots: Tuple[int, ...] = Field(description="Program qubit per physical qubit, FREE if unused")

    @model_validator(mode="after")
    def _check_slots(self) -> "Placement":
        used = [s for s in self.slots if s != FREE]
        if any(s < FREE for s in self.slots):
            raise ValueError("placement entries must be program indices or FREE")
        if len(used) != len(set(used)):
            raise ValueError("a program qubit appears twice in the placement")
        if used and sorted(used) != list(range(len(used))):
            raise ValueError("program qubits must be dense 0..n-1")
        return self

    @classmethod
    def identity(cls, program_qubits: int, physical_qubits: int) -> "Placement":
        slots = [k if k < program_qubits else FREE for k in range(physical_qubits)]
        return cls(slots=tuple(slots))

    @classmethod
    def from_positions(cls, positions: List[int], physical_qubits: int) -> "Placement":
        """Build from ``positions[program] = physical``."""
        slots = [FREE] * physical_qubits
        for program, physical in enumerate(positions):
            slots[physical] = program
        return cls(slots=tuple(slots))

    @property
    def program_count(self) -> int:
        return sum(1 for s in self.slots if s != FREE)

    def positions(self) -> List[int]:
        """Inverse map: ``positions()[program] = physical``."""
        result = [FREE] * self.program_count
        for physical, program in enumerate(self.slots):
            if program != FREE:
                result[program] = physical
        return result

    def physical_of(self, program: int) -> int:
        return self.slots.index(program)

    def __str__(self) -> str:
        return "[" + ",".join("FREE" if s == FREE else str(s) for s in self.slots) + "]"


class RouterConfig(BaseModel):
    """Router knobs. Defaults are engineering choices."""

    model_config = ConfigDict(frozen=True)

    strategy: RouterStrategy = RouterStrategy.LOOKAHEAD
    w0: float = Field(1.0, gt=0.0, description="Weight of frontier gates in the look-ahead cost")
    w1: float = Field(0.5, ge=0.0, description="Weight of window gates in the look-ahead cost")
    window: int = Field(20, gt=0, description="Number of upcoming two-qubit gates in the window")
    exact_max_qubits: int = Field(5, gt=0, description="Exact router: max program qubits")
    exact_max_two_qubit_gates: int = Field(8, gt=0, description="Exact router: max two-qubit gates")
    cost: CostMode = CostMode.HOPS
    seed: Optional[int] = Field(None, description="Seed for randomized tie-breaks; None keeps ties lexicographic")


class RoutedResult(BaseModel):
    """Output of a routing pass over physical qubits."""

    model_config = ConfigDict(frozen=True)

    circuit: Circuit
    initial_placement: Placement
    final_placement: Placement
    swaps_added: int = Field(ge=0)
    direction_fixes: int = Field(ge=0)
    strategy: RouterStrategy
