"""Exception hierarchy shared by every qcmap module.

Each error carries the CLI exit code it maps to:
1 for parse/device/config errors, 2 for routing errors, 3 for verification.
"""

from typing import Optional


class QcmapError(Exception):
    """Base class for all qcmap errors."""

    exit_code = 1


# ---------------------------------------------------------------------------
# Circuit language
# ---------------------------------------------------------------------------

class CircuitSyntaxError(QcmapError):
    """Malformed circuit source."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class QubitOutOfRange(QcmapError):
    """Qubit operand not below the declared qubit count."""

    def __init__(self, line: int, qubit: Optional[int] = None):
        self.line = line
        self.qubit = qubit
        detail = f" (q{qubit})" if qubit is not None else ""
        super().__init__(f"line {line}: qubit index out of range{detail}")


class ParamArityMismatch(QcmapError):
    """Wrong number of angle parameters for a gate."""

    def __init__(self, line: int, expected: int = 0, got: int = 0):
        self.line = line
        self.expected = expected
        self.got = got
        super().__init__(f"line {line}: expected {expected} parameter(s), got {got}")


class MissingQubitsDecl(QcmapError):
    """Circuit source has no leading `qubits <N>` statement."""

    def __init__(self):
        super().__init__("missing 'qubits <N>' declaration")


class NotSchedulable(QcmapError):
    """Gate is not in the dependency-graph frontier."""


# ---------------------------------------------------------------------------
# Device language and queries
# ---------------------------------------------------------------------------

class DeviceSyntaxError(QcmapError):
    """Malformed device source."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class DisconnectedGraph(QcmapError):
    """Undirected skeleton of the coupling graph is not connected."""


class UnknownGateKind(QcmapError):
    """Gate mnemonic not known to qcmap."""


class MissingDuration(QcmapError):
    """A native gate kind has no duration while others do."""


class IndexOutOfRange(QcmapError):
    """Physical qubit index outside the device."""


class NotCoupled(QcmapError):
    """Operation requires a coupled pair of physical qubits."""

    exit_code = 2


# ---------------------------------------------------------------------------
# Decomposition
# ---------------------------------------------------------------------------

class NoRuleAvailable(QcmapError):
    """Rule table cannot express a gate in the device's native set."""

    def __init__(self, kind: str, device: str):
        self.kind = kind
        self.device = device
        super().__init__(f"no rewrite rule expresses {kind} on device {device}")


class RuleValidationError(QcmapError):
    """A rewrite rule does not reproduce its source unitary."""


# ---------------------------------------------------------------------------
# Mapping and scheduling
# ---------------------------------------------------------------------------

class TooManyQubits(QcmapError):
    """Circuit needs more qubits than the device or simulator allows."""


class ExactLimitExceeded(QcmapError):
    """Instance is outside the limits of the exact router."""

    exit_code = 2


class InfeasibleDevice(QcmapError):
    """Routing cannot proceed on this device."""

    exit_code = 2


class RoutingError(QcmapError):
    """Router could not produce a constraint-satisfying circuit."""

    exit_code = 2


class ConstraintViolation(QcmapError):
    """Scheduler input is not native or not routed."""

    exit_code = 2


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

class MeasureHasNoUnitary(QcmapError):
    """MEASURE has no unitary matrix."""


class VerificationFailed(QcmapError):
    """Equivalence oracle reported a mismatch."""

    exit_code = 3


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------

class ConfigError(QcmapError):
    """Run configuration file missing, unreadable or invalid."""
