"""ASAP list scheduling and execution snapshots."""

import logging
from functools import reduce
from math import gcd
from typing import Dict, FrozenSet, List, Optional

from qcmap.circuit.dependency_graph import build_dependency_graph
from qcmap.device.channels import drives
from qcmap.device.topology import topology
from qcmap.errors import ConstraintViolation
from qcmap.mapper.pipeline import SwapLedger
from qcmap.mapper.placement import apply_swap
from qcmap.schemas.circuit_schema import Circuit, Gate, GateKind, NodeStatus
from qcmap.schemas.device_schema import ChannelScope, ControlChannel, Device
from qcmap.schemas.mapping_schema import Placement
from qcmap.schemas.schedule_schema import ExecutionSnapshot, Schedule, ScheduledGate, Waveform
from qcmap.verifier.constraints import check_constraints

logger = logging.getLogger(__name__)


class Scheduler:
    """
    Places gates on the clock one at a time, in circuit order.

    Each gate starts at the first cycle where its qubits are idle and no
    shared channel is emitting a different waveform. The state can be
    captured with :meth:`snapshot` and continued with :meth:`resume`.
    """

    def __init__(
        self,
        circuit: Circuit,
        device: Device,
        initial_placement: Optional[Placement] = None,
        swap_ledger: Optional[SwapLedger] = None,
        check: bool = True,
    ):
        if check:
            violations = check_constraints(circuit, device)
            if violations:
                raise ConstraintViolation(
                    f"circuit is not routed for {device.name}: {len(violations)} violation(s), first: {violations[0]}"
                )
        self.circuit = circuit
        self.device = device
        self.swap_ledger: SwapLedger = dict(swap_ledger or {})
        self.cycle_time = reduce(gcd, device.durations.values(), 0) or 1
        self.graph = build_dependency_graph(circuit)
        self.initial = initial_placement or Placement.identity(circuit.qubit_count, device.qubit_count)
        self.placement = self.initial
        self.entries: List[ScheduledGate] = []
        self.free_at: List[int] = [0] * circuit.qubit_count
        self.settings: Dict[int, Dict[str, Waveform]] = {}
        self.steps = 0

    @property
    def done(self) -> bool:
        return self.steps >= self.circuit.gate_count

    def cycles_of(self, gate: Gate) -> int:
        return max(1, self.device.duration_of(gate.kind) // self.cycle_time)

    def _channels(self, gate: Gate) -> List[ControlChannel]:
        return [channel for channel in self.device.channels if drives(channel, gate)]

    def _blocked(self, channels: List[ControlChannel], waveform: Waveform, start: int, duration: int) -> bool:
        for cycle in range(start, start + duration):
            emitted = self.settings.get(cycle, {})
            if any(emitted.get(c.id, waveform) != waveform for c in channels):
                return True
        return False

    def step(self) -> ScheduledGate:
        """Schedule the next gate in circuit order."""
        index = self.steps
        gate = self.circuit.gates[index]
        duration = self.cycles_of(gate)
        channels = self._channels(gate)
        waveform = gate.waveform()
        start = max(self.free_at[q] for q in gate.operands)
        while self._blocked(channels, waveform, start, duration):
            start += 1

        entry = ScheduledGate(index=index, gate=gate, start=start, duration=duration)
        self.entries.append(entry)
        for q in gate.operands:
            self.free_at[q] = entry.end
        for cycle in range(start, entry.end):
            for channel in channels:
                self.settings.setdefault(cycle, {})[channel.id] = waveform
        self.graph.mark_scheduled(index)

        if gate.kind is GateKind.SWAP:
            self.placement = apply_swap(self.placement, gate.operands)
        for edge in self.swap_ledger.get(index, ()):
            self.placement = apply_swap(self.placement, edge)
        self.steps += 1
        return entry

    def run(self, steps: Optional[int] = None) -> "Scheduler":
        """Schedule ``steps`` more gates, or all remaining ones."""
        target = self.circuit.gate_count if steps is None else min(self.steps + steps, self.circuit.gate_count)
        while self.steps < target:
            self.step()
        return self

    def schedule(self) -> Schedule:
        return Schedule(qubit_count=self.circuit.qubit_count, cycle_time=self.cycle_time, entries=tuple(self.entries))

    def snapshot(self) -> ExecutionSnapshot:
        return ExecutionSnapshot(
            statuses=tuple(self.graph.statuses()),
            initial_placement=self.initial,
            current_placement=self.placement,
            schedule=self.schedule(),
            control_settings={cycle: dict(emitted) for cycle, emitted in self.settings.items()},
            steps=self.steps,
            qubit_free_at=tuple(self.free_at),
        )

    @classmethod
    def resume(
        cls,
        snap: ExecutionSnapshot,
        circuit: Circuit,
        device: Device,
        swap_ledger: Optional[SwapLedger] = None,
    ) -> "Scheduler":
        """Rebuild a scheduler that continues exactly where ``snap`` stopped."""
        scheduler = cls(circuit, device, snap.initial_placement, swap_ledger, check=False)
        scheduled = [k for k, status in enumerate(snap.statuses) if status is NodeStatus.SCHEDULED]
        if scheduled != list(range(snap.steps)):
            raise ValueError("snapshot does not come from circuit-order scheduling of this circuit")
        scheduler.graph.restore(scheduled)
        scheduler.entries = list(snap.schedule.entries)
        scheduler.free_at = list(snap.qubit_free_at)
        scheduler.settings = {cycle: dict(emitted) for cycle, emitted in snap.control_settings.items()}
        scheduler.placement = snap.current_placement
        scheduler.steps = snap.steps
        return scheduler


def schedule_asap(
    circuit: Circuit,
    device: Device,
    initial_placement: Optional[Placement] = None,
    swap_ledger: Optional[SwapLedger] = None,
) -> Schedule:
    """
    Schedule a routed native circuit as early as possible.

    Raises:
        ConstraintViolation: circuit is not native or not routed for the device
    """
    schedule = Scheduler(circuit, device, initial_placement, swap_ledger).run().schedule()
    logger.debug("scheduled %d gates in %d cycles", len(schedule.entries), schedule.depth)
    return schedule


def depth(schedule: Schedule) -> int:
    return schedule.depth


def snapshot(
    circuit: Circuit,
    device: Device,
    steps: int,
    initial_placement: Optional[Placement] = None,
    swap_ledger: Optional[SwapLedger] = None,
) -> ExecutionSnapshot:
    """Execution snapshot after scheduling the first ``steps`` gates."""
    if not 0 <= steps <= circuit.gate_count:
        raise ValueError(f"steps must lie in 0..{circuit.gate_count}")
    return Scheduler(circuit, device, initial_placement, swap_ledger).run(steps).snapshot()


def compatible_gates(snap: ExecutionSnapshot, cycle: int, device: Device) -> Dict[int, FrozenSet[GateKind]]:
    """
    Native gate kinds each physical qubit could still start at ``cycle``.

    Busy qubits get an empty set. A one-qubit channel already emitting at
    that cycle narrows its qubits to the emitted kind. The two-qubit kind
    is offered while some coupled neighbour is idle.
    """
    topo = topology(device)
    width = snap.schedule.qubit_count
    busy = {q for entry in snap.schedule.entries if entry.overlaps(cycle) for q in entry.gate.operands}
    emitted = snap.control_settings.get(cycle, {})
    result: Dict[int, FrozenSet[GateKind]] = {}
    for q in range(width):
        if q in busy:
            result[q] = frozenset()
            continue
        kinds = set(device.native_1q_for(q))
        for channel in device.channels:
            if channel.scope is ChannelScope.ONE_QUBIT and q in channel.qubits and channel.id in emitted:
                kinds &= {emitted[channel.id][0]}
        if any(nb < width and nb not in busy for nb in topo.neighbors[q]):
            kinds.add(device.native_2q)
        result[q] = frozenset(kinds)
    return result
