"""Schedule table and execution snapshot."""

from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from qcmap.schemas.circuit_schema import Gate, GateKind, NodeStatus
from qcmap.schemas.mapping_schema import Placement


class ScheduledGate(BaseModel):
    """A gate placed on the clock: occupies cycles ``[start, start + duration)``."""

    model_config = ConfigDict(frozen=True)

    index: int = Field(ge=0, description="Position of the gate in the scheduled circuit")
    gate: Gate
    start: int = Field(ge=0)
    duration: int = Field(gt=0)

    @property
    def end(self) -> int:
        return self.start + self.duration

    def overlaps(self, cycle: int) -> bool:
        return self.start <= cycle < self.end


class Schedule(BaseModel):
    """Clock-cycle table of a circuit."""

    model_config = ConfigDict(frozen=True)

    qubit_count: int = Field(ge=0)
    cycle_time: int = Field(1, gt=0, description="Device time units per clock cycle")
    entries: Tuple[ScheduledGate, ...] = Field(default=(), description="Scheduled gates in circuit order")

    @property
    def depth(self) -> int:
        """Cycles occupied: latest gate end, 0 when empty."""
        return max((e.end for e in self.entries), default=0)

    def cycle_table(self) -> Dict[int, Tuple[ScheduledGate, ...]]:
        """Start cycle -> gates starting there, ordered by lowest operand."""
        table: Dict[int, list] = {}
        for entry in self.entries:
            table.setdefault(entry.start, []).append(entry)
        return {
            cycle: tuple(sorted(items, key=lambda e: (min(e.gate.operands), e.index)))
            for cycle, items in sorted(table.items())
        }

    def active_at(self, cycle: int) -> Tuple[ScheduledGate, ...]:
        return tuple(e for e in self.entries if e.overlaps(cycle))


Waveform = Tuple[GateKind, Tuple[float, ...]]


class ExecutionSnapshot(BaseModel):
    """Complete mapping state: dependency statuses, placements, partial schedule, control settings."""

    model_config = ConfigDict(frozen=True)

    statuses: Tuple[NodeStatus, ...] = Field(description="Status per gate, in circuit order")
    initial_placement: Placement
    current_placement: Placement
    schedule: Schedule
    control_settings: Dict[int, Dict[str, Waveform]] = Field(
        default_factory=dict,
        description="cycle -> channel id -> waveform emitted on that channel",
    )
    steps: int = Field(ge=0, description="Number of gates scheduled so far")
    qubit_free_at: Tuple[int, ...] = Field(description="First cycle each physical qubit is idle again")

    @property
    def scheduled_count(self) -> int:
        return sum(1 for s in self.statuses if s is NodeStatus.SCHEDULED)

    def waveform_on(self, channel_id: str, cycle: int) -> Optional[Waveform]:
        return self.control_settings.get(cycle, {}).get(channel_id)
