"""Shared fixtures: shipped devices and a seeded random-circuit generator."""

from pathlib import Path
from typing import Callable, Sequence

import numpy as np
import pytest

from qcmap.device.loader import load_device, load_device_file, shipped_device_dir
from qcmap.schemas.circuit_schema import Circuit, GateKind, make_gate
from qcmap.schemas.device_schema import Device

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"

MIXED_1Q = (
    GateKind.H, GateKind.X, GateKind.Y, GateKind.Z, GateKind.S,
    GateKind.SDG, GateKind.T, GateKind.TDG, GateKind.RX, GateKind.RY,
    GateKind.RZ, GateKind.U3,
)
MIXED_2Q = (GateKind.CNOT, GateKind.CZ, GateKind.SWAP)


@pytest.fixture(scope="session")
def qx4() -> Device:
    return load_device_file(shipped_device_dir() / "ibm_qx4.dev")


@pytest.fixture(scope="session")
def surface17() -> Device:
    return load_device_file(shipped_device_dir() / "surface17.dev")


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS_DIR


def complete_device(qubits: int, channels: str = "") -> Device:
    """All-to-all CZ device with unit durations and optional channel lines."""
    lines = [f"name complete{qubits}", f"qubits {qubits}"]
    for a in range(qubits):
        for b in range(a + 1, qubits):
            lines.append(f"edge q{a} -- q{b}")
    lines += ["gate1q rx ry", "gate2q cz", channels, "measurable all"]
    return load_device("\n".join(lines))


def random_circuit(
    rng: np.random.Generator,
    qubits: int,
    gates: int,
    one_qubit: Sequence[GateKind] = MIXED_1Q,
    two_qubit: Sequence[GateKind] = MIXED_2Q,
    two_qubit_share: float = 0.4,
) -> Circuit:
    """Random circuit with uniformly drawn kinds, operands and angles."""
    out = []
    for _ in range(gates):
        if qubits > 1 and two_qubit and rng.random() < two_qubit_share:
            kind = two_qubit[int(rng.integers(len(two_qubit)))]
            a, b = (int(q) for q in rng.choice(qubits, size=2, replace=False))
            out.append(make_gate(kind, a, b))
        else:
            kind = one_qubit[int(rng.integers(len(one_qubit)))]
            params = tuple(float(p) for p in rng.uniform(-np.pi, np.pi, size=kind.param_count))
            out.append(make_gate(kind, int(rng.integers(qubits)), params=params))
    return Circuit(qubit_count=qubits, gates=tuple(out))


@pytest.fixture
def circuit_factory() -> Callable[..., Circuit]:
    return random_circuit
