"""Line-based circuit language: parsing and printing.

Grammar (one statement per line, ``#`` starts a comment)::

    qubits <N>                 # required first statement
    <mnemonic> q<i>[, q<j>][, <angle>...]

Angles are floats in radians or ``[-][k*]pi[/n]``.
"""

import math
import re
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import ValidationError

from qcmap.errors import (
    CircuitSyntaxError,
    MissingQubitsDecl,
    ParamArityMismatch,
    QubitOutOfRange,
)
from qcmap.schemas.circuit_schema import Circuit, Gate, GateKind

_QUBIT_RE = re.compile(r"^q(\d+)$", re.IGNORECASE)
_PI_RE = re.compile(r"^(-)?(?:(\d+(?:\.\d*)?)\s*\*\s*)?pi(?:\s*/\s*(\d+))?$", re.IGNORECASE)
_HEAD_RE = re.compile(r"^(\S+)(?:\s+(.*))?$")


def parse_circuit(text: str) -> Circuit:
    """
    Parse circuit-language source.

    Args:
        text: Source text

    Returns:
        Circuit with gates in source line order

    Raises:
        MissingQubitsDecl: No leading ``qubits`` statement
        CircuitSyntaxError: Malformed statement or mid-circuit measurement
        QubitOutOfRange: Operand index >= declared qubit count
        ParamArityMismatch: Wrong number of angles
    """
    qubit_count: Optional[int] = None
    gates: List[Gate] = []
    measured = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        match = _HEAD_RE.match(line)
        mnemonic = match.group(1).lower()
        rest = (match.group(2) or "").strip()

        if qubit_count is None:
            if mnemonic != "qubits":
                raise MissingQubitsDecl()
            qubit_count = _parse_qubit_count(rest, lineno)
            continue

        if mnemonic == "qubits":
            raise CircuitSyntaxError(lineno, "duplicate 'qubits' declaration")

        gate = _parse_gate(mnemonic, rest, lineno, qubit_count)
        for q in gate.operands:
            if q in measured:
                raise CircuitSyntaxError(lineno, f"q{q} is used after its measurement")
        if gate.kind is GateKind.MEASURE:
            measured.add(gate.operands[0])
        gates.append(gate)

    if qubit_count is None:
        raise MissingQubitsDecl()

    return Circuit(qubit_count=qubit_count, gates=tuple(gates))


def print_circuit(circuit: Circuit) -> str:
    """Render a circuit in the circuit language; angles use ``repr`` so they re-parse exactly."""
    lines = [f"qubits {circuit.qubit_count}"]
    lines.extend(str(gate) for gate in circuit.gates)
    return "\n".join(lines) + "\n"


def read_circuit(path: Path) -> Circuit:
    """Load a ``.qc`` file."""
    with open(path, "r", encoding="utf-8") as f:
        return parse_circuit(f.read())


def write_circuit(circuit: Circuit, path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(print_circuit(circuit))


def _parse_qubit_count(rest: str, lineno: int) -> int:
    if not rest.isdigit():
        raise CircuitSyntaxError(lineno, f"'qubits' expects a non-negative integer, got '{rest}'")
    return int(rest)


def _parse_gate(mnemonic: str, rest: str, lineno: int, qubit_count: int) -> Gate:
    try:
        kind = GateKind.parse(mnemonic)
    except ValueError:
        raise CircuitSyntaxError(lineno, f"unknown gate '{mnemonic}'")

    args = [a.strip() for a in rest.split(",")] if rest else []
    if any(not a for a in args):
        raise CircuitSyntaxError(lineno, "empty operand")

    qubit_args, param_args = args[:kind.arity], args[kind.arity:]
    if len(qubit_args) < kind.arity or not all(_QUBIT_RE.match(a) for a in qubit_args):
        raise CircuitSyntaxError(lineno, f"{kind.value} expects {kind.arity} qubit operand(s)")
    if any(_QUBIT_RE.match(a) for a in param_args):
        raise CircuitSyntaxError(lineno, f"{kind.value} expects {kind.arity} qubit operand(s)")
    if len(param_args) != kind.param_count:
        raise ParamArityMismatch(lineno, kind.param_count, len(param_args))

    operands = tuple(int(_QUBIT_RE.match(a).group(1)) for a in qubit_args)
    for q in operands:
        if q >= qubit_count:
            raise QubitOutOfRange(lineno, q)
    if len(set(operands)) != len(operands):
        raise CircuitSyntaxError(lineno, "operands must be distinct qubits")

    params = tuple(parse_angle(a, lineno) for a in param_args)
    try:
        return Gate(kind=kind, operands=operands, params=params)
    except ValidationError as e:
        raise CircuitSyntaxError(lineno, str(e.errors()[0]["msg"]))


def parse_angle(token: str, lineno: int = 0) -> float:
    """Parse a float literal or a ``[-][k*]pi[/n]`` constant."""
    match = _PI_RE.match(token.replace(" ", ""))
    if match:
        sign, factor, divisor = match.groups()
        value = math.pi * (float(factor) if factor else 1.0)
        if divisor:
            if int(divisor) == 0:
                raise CircuitSyntaxError(lineno, "division by zero in angle")
            value /= int(divisor)
        return -value if sign else value
    try:
        value = float(token)
    except ValueError:
        raise CircuitSyntaxError(lineno, f"invalid angle '{token}'")
    if not math.isfinite(value):
        raise CircuitSyntaxError(lineno, f"angle must be finite, got '{token}'")
    return value


def format_params(params: Tuple[float, ...]) -> str:
    """Compact ``(a, b)`` rendering used by dumps."""
    if not params:
        return ""
    return "(" + ", ".join(repr(float(p)) for p in params) + ")"
