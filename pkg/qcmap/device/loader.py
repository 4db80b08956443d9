"""Device language: loading, dumping and discovery of device files.

Statements (one per line, ``#`` starts a comment)::

    name <id>
    qubits <N>
    edge q<i> -> q<j>            # directed: control -> target
    edge q<i> -- q<j>            # undirected
    gate1q <kinds...>            # device-wide one-qubit set
    gate1q q<k>: <kinds...>      # per-qubit override
    gate2q <kind> [directed|symmetric]
    duration <kind> <cycles>
    error <kind> <p>
    error <kind> q<i> q<j> <p>   # per-edge rate
    channel <id> 1q|2q: q<i> ...
    measurable all | q<i> ...
"""

import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import ValidationError

from qcmap.errors import DeviceSyntaxError, UnknownGateKind
from qcmap.schemas.circuit_schema import GateKind
from qcmap.schemas.device_schema import (
    ChannelScope,
    ControlChannel,
    Coupling,
    Device,
    EdgeErrorRate,
)

DEVICE_SUFFIX = ".dev"

_QUBIT_RE = re.compile(r"^q?(\d+)$", re.IGNORECASE)
_EDGE_RE = re.compile(r"^q?(\d+)\s*(->|--|\s)\s*q?(\d+)$", re.IGNORECASE)
_OVERRIDE_RE = re.compile(r"^q(\d+)\s*:\s*(.*)$", re.IGNORECASE)
_CHANNEL_RE = re.compile(r"^(\S+)\s+(1q|2q)\s*:\s*(.*)$", re.IGNORECASE)


def shipped_device_dir() -> Path:
    """Directory holding the device files distributed with qcmap."""
    return Path(__file__).parent / "data"


def load_device(text: str) -> Device:
    """
    Parse device-language source.

    Args:
        text: Source text

    Returns:
        Validated Device

    Raises:
        DeviceSyntaxError: Malformed statement, self-loop, duplicate edge
        UnknownGateKind: Unknown gate mnemonic
        DisconnectedGraph: Coupling graph skeleton not connected
        MissingDuration: Durations given but a native kind lacks one
    """
    parser = _DeviceParser()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            parser.feed(line, lineno)
    return parser.finish()


def load_device_file(path: Path) -> Device:
    with open(path, "r", encoding="utf-8") as f:
        return load_device(f.read())


def dump_device(device: Device) -> str:
    """Serialize a Device back to the device language."""
    lines = [f"name {device.name}", f"qubits {device.qubit_count}"]
    for edge in device.edges:
        arrow = "->" if edge.directed else "--"
        lines.append(f"edge q{edge.source} {arrow} q{edge.target}")
    lines.append("gate1q " + _kinds_text(device.native_1q))
    for q in sorted(device.native_1q_overrides):
        lines.append(f"gate1q q{q}: " + _kinds_text(device.native_1q_overrides[q]))
    direction = "symmetric" if device.native_2q_symmetric else "directed"
    lines.append(f"gate2q {device.native_2q.value} {direction}")
    for kind in GateKind:
        if kind in device.durations:
            lines.append(f"duration {kind.value} {device.durations[kind]}")
    for kind in GateKind:
        if kind in device.error_rates:
            lines.append(f"error {kind.value} {device.error_rates[kind]!r}")
    for entry in device.edge_error_rates:
        a, b = entry.pair
        lines.append(f"error {entry.kind.value} q{a} q{b} {entry.rate!r}")
    for channel in device.channels:
        qubits = " ".join(f"q{q}" for q in sorted(channel.qubits))
        lines.append(f"channel {channel.id} {channel.scope.value}: {qubits}")
    if all(device.measurable):
        lines.append("measurable all")
    else:
        lines.append("measurable " + " ".join(f"q{q}" for q, ok in enumerate(device.measurable) if ok))
    return "\n".join(lines) + "\n"


def list_devices(directory: Path) -> List[Tuple[Path, Device]]:
    """Load every ``*.dev`` file in a directory, sorted by file name."""
    return [(path, load_device_file(path)) for path in sorted(directory.glob(f"*{DEVICE_SUFFIX}"))]


def _kinds_text(kinds) -> str:
    return " ".join(kind.value for kind in GateKind if kind in kinds)


def _parse_kind(token: str) -> GateKind:
    try:
        return GateKind.parse(token)
    except ValueError:
        raise UnknownGateKind(f"unknown gate kind '{token}'")


class _DeviceParser:
    """Accumulates statements, then validates them into a Device."""

    def __init__(self):
        self.name: Optional[str] = None
        self.qubit_count: Optional[int] = None
        self.edges: List[Tuple[int, Coupling]] = []
        self.native_1q: Optional[frozenset] = None
        self.overrides: Dict[int, frozenset] = {}
        self.native_2q: Optional[GateKind] = None
        self.directed_2q = False
        self.durations: Dict[GateKind, int] = {}
        self.error_rates: Dict[GateKind, float] = {}
        self.edge_errors: List[Tuple[int, EdgeErrorRate]] = []
        self.channels: List[ControlChannel] = []
        self.measurable: Optional[List[int]] = None
        self.measurable_all = True

    def feed(self, line: str, lineno: int) -> None:
        keyword, _, rest = line.partition(" ")
        keyword = keyword.lower()
        rest = rest.strip()
        handler = getattr(self, f"_stmt_{keyword}", None)
        if handler is None:
            raise DeviceSyntaxError(lineno, f"unknown statement '{keyword}'")
        handler(rest, lineno)

    def _stmt_name(self, rest: str, lineno: int) -> None:
        if not rest or " " in rest:
            raise DeviceSyntaxError(lineno, "name expects a single identifier")
        self.name = rest

    def _stmt_qubits(self, rest: str, lineno: int) -> None:
        if not rest.isdigit() or int(rest) == 0:
            raise DeviceSyntaxError(lineno, "qubits expects a positive integer")
        self.qubit_count = int(rest)

    def _stmt_edge(self, rest: str, lineno: int) -> None:
        match = _EDGE_RE.match(rest)
        if not match:
            raise DeviceSyntaxError(lineno, "edge expects 'q<i> -> q<j>' or 'q<i> -- q<j>'")
        a, arrow, b = int(match.group(1)), match.group(2), int(match.group(3))
        if a == b:
            raise DeviceSyntaxError(lineno, f"self-loop on q{a}")
        pair = (min(a, b), max(a, b))
        if any(edge.pair == pair for _, edge in self.edges):
            raise DeviceSyntaxError(lineno, f"duplicate edge q{pair[0]}-q{pair[1]}")
        self.edges.append((lineno, Coupling(source=a, target=b, directed=(arrow == "->"))))

    def _stmt_gate1q(self, rest: str, lineno: int) -> None:
        match = _OVERRIDE_RE.match(rest)
        if match:
            kinds = self._one_qubit_kinds(match.group(2), lineno)
            self.overrides[int(match.group(1))] = kinds
        else:
            self.native_1q = self._one_qubit_kinds(rest, lineno)

    def _stmt_gate2q(self, rest: str, lineno: int) -> None:
        tokens = rest.split()
        if not tokens or len(tokens) > 2:
            raise DeviceSyntaxError(lineno, "gate2q expects '<kind> [directed|symmetric]'")
        kind = _parse_kind(tokens[0])
        if kind.arity != 2:
            raise DeviceSyntaxError(lineno, f"{kind.value} is not a two-qubit gate")
        flag = tokens[1].lower() if len(tokens) == 2 else "symmetric"
        if flag not in ("directed", "symmetric"):
            raise DeviceSyntaxError(lineno, f"unknown gate2q flag '{flag}'")
        self.native_2q = kind
        self.directed_2q = flag == "directed"

    def _stmt_duration(self, rest: str, lineno: int) -> None:
        tokens = rest.split()
        if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) == 0:
            raise DeviceSyntaxError(lineno, "duration expects '<kind> <positive integer>'")
        self.durations[_parse_kind(tokens[0])] = int(tokens[1])

    def _stmt_error(self, rest: str, lineno: int) -> None:
        tokens = rest.split()
        if len(tokens) == 2:
            kind, rate = _parse_kind(tokens[0]), self._rate(tokens[1], lineno)
            self.error_rates[kind] = rate
        elif len(tokens) == 4:
            kind = _parse_kind(tokens[0])
            a, b = self._qubit(tokens[1], lineno), self._qubit(tokens[2], lineno)
            entry = EdgeErrorRate(kind=kind, pair=(min(a, b), max(a, b)), rate=self._rate(tokens[3], lineno))
            self.edge_errors.append((lineno, entry))
        else:
            raise DeviceSyntaxError(lineno, "error expects '<kind> <p>' or '<kind> q<i> q<j> <p>'")

    def _stmt_channel(self, rest: str, lineno: int) -> None:
        match = _CHANNEL_RE.match(rest)
        if not match:
            raise DeviceSyntaxError(lineno, "channel expects '<id> 1q|2q: q<i> ...'")
        qubits = frozenset(self._qubit(t, lineno) for t in match.group(3).split())
        if not qubits:
            raise DeviceSyntaxError(lineno, f"channel {match.group(1)} drives no qubits")
        if any(c.id == match.group(1) for c in self.channels):
            raise DeviceSyntaxError(lineno, f"duplicate channel '{match.group(1)}'")
        self.channels.append(ControlChannel(
            id=match.group(1),
            qubits=qubits,
            scope=ChannelScope(match.group(2).lower()),
        ))

    def _stmt_measurable(self, rest: str, lineno: int) -> None:
        if rest.lower() == "all":
            self.measurable_all = True
            self.measurable = None
            return
        self.measurable_all = False
        self.measurable = [self._qubit(t, lineno) for t in rest.split()]

    def _one_qubit_kinds(self, text: str, lineno: int) -> frozenset:
        kinds = frozenset(_parse_kind(t) for t in text.split())
        if not kinds:
            raise DeviceSyntaxError(lineno, "gate1q expects at least one gate kind")
        if any(k.arity != 1 or k is GateKind.MEASURE for k in kinds):
            raise DeviceSyntaxError(lineno, "gate1q lists one-qubit unitary gates only")
        return kinds

    @staticmethod
    def _qubit(token: str, lineno: int) -> int:
        match = _QUBIT_RE.match(token)
        if not match:
            raise DeviceSyntaxError(lineno, f"expected a qubit like q3, got '{token}'")
        return int(match.group(1))

    @staticmethod
    def _rate(token: str, lineno: int) -> float:
        try:
            rate = float(token)
        except ValueError:
            raise DeviceSyntaxError(lineno, f"invalid error rate '{token}'")
        if not 0.0 <= rate < 1.0:
            raise DeviceSyntaxError(lineno, f"error rate {token} outside [0, 1)")
        return rate

    def finish(self) -> Device:
        if self.name is None:
            raise DeviceSyntaxError(0, "missing 'name' statement")
        if self.qubit_count is None:
            raise DeviceSyntaxError(0, "missing 'qubits' statement")
        if self.native_1q is None:
            raise DeviceSyntaxError(0, "missing 'gate1q' statement")
        if self.native_2q is None:
            raise DeviceSyntaxError(0, "missing 'gate2q' statement")

        n = self.qubit_count
        for lineno, edge in self.edges:
            if edge.source >= n or edge.target >= n:
                raise DeviceSyntaxError(lineno, f"edge q{edge.source}-q{edge.target} outside 0..{n - 1}")
            if edge.directed and not self.directed_2q:
                raise DeviceSyntaxError(lineno, "directed edge requires 'gate2q <kind> directed'")
        for lineno, entry in self.edge_errors:
            if not any(edge.pair == entry.pair for _, edge in self.edges):
                raise DeviceSyntaxError(lineno, f"error rate for uncoupled pair q{entry.pair[0]}-q{entry.pair[1]}")

        durations = dict(self.durations)
        if not durations:
            # No timing data: every gate takes one cycle.
            durations = {kind: 1 for kind in self._all_native()}
        durations.setdefault(GateKind.MEASURE, 1)

        if self.measurable_all:
            measurable = tuple(True for _ in range(n))
        else:
            wanted = set(self.measurable or [])
            measurable = tuple(q in wanted for q in range(n))

        try:
            return Device(
                name=self.name,
                qubit_count=n,
                edges=tuple(edge for _, edge in self.edges),
                native_1q=self.native_1q,
                native_1q_overrides=self.overrides,
                native_2q=self.native_2q,
                native_2q_symmetric=not self.directed_2q,
                durations=durations,
                error_rates=self.error_rates,
                edge_error_rates=tuple(entry for _, entry in self.edge_errors),
                channels=tuple(self.channels),
                measurable=measurable,
            )
        except ValidationError as e:
            raise DeviceSyntaxError(0, str(e.errors()[0]["msg"]))

    def _all_native(self):
        kinds = set(self.native_1q) | {self.native_2q}
        for override in self.overrides.values():
            kinds |= override
        return kinds
