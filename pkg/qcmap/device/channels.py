"""Shared control-channel constraints."""

from typing import Optional

from qcmap.schemas.circuit_schema import Gate, GateKind
from qcmap.schemas.device_schema import ChannelScope, ControlChannel, Device


def channel_scope(gate: Gate) -> Optional[ChannelScope]:
    """Scope of the channel a gate would use; None for MEASURE."""
    if gate.kind is GateKind.MEASURE:
        return None
    return ChannelScope.TWO_QUBIT if gate.is_two_qubit else ChannelScope.ONE_QUBIT


def drives(channel: ControlChannel, gate: Gate) -> bool:
    return channel_scope(gate) is channel.scope and any(q in channel.qubits for q in gate.operands)


def channel_conflict(device: Device, a: Gate, b: Gate) -> bool:
    """True when a and b cannot share a cycle because of a shared channel.

    Gates on one channel may only overlap when they emit the same waveform
    (same kind and params).
    """
    if a.waveform() == b.waveform():
        return False
    return any(drives(channel, a) and drives(channel, b) for channel in device.channels)
