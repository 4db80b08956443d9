"""Rewrite-rule table.

Each rule rewrites one gate kind into a short sequence of other gates on
the same operands. Rules are checked against the unitary oracle the first
time the table is requested.
"""

import logging
import math
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from qcmap.errors import RuleValidationError
from qcmap.schemas.circuit_schema import Circuit, Gate, GateKind, make_gate
from qcmap.verifier.unitary import circuit_unitary, global_phase_distance

logger = logging.getLogger(__name__)

PI = math.pi
RULE_TOLERANCE = 1e-12

# Parameter sets the oracle checks parameterized rules with.
_SAMPLE_PARAMS = ((0.37, 1.21, -0.58), (2.9, -0.4, 1.7), (PI, 0.0, -PI / 2))


class PhaseNote(str, Enum):
    EXACT = "exact"
    GLOBAL_PHASE = "up-to-global-phase"


class ParamExpr(BaseModel):
    """Angle of a target gate: ``scale * source_params[index] + offset``."""

    model_config = ConfigDict(frozen=True)

    index: Optional[int] = Field(None, description="Source parameter index; None for a constant")
    scale: float = 1.0
    offset: float = 0.0

    def evaluate(self, source: Tuple[float, ...]) -> float:
        if self.index is None:
            return self.offset
        return self.scale * source[self.index] + self.offset

    def __str__(self) -> str:
        if self.index is None:
            return _angle_text(self.offset)
        name = "theta" if self.index == 0 else ("phi" if self.index == 1 else "lambda")
        text = name if self.scale == 1.0 else f"{self.scale!r}*{name}"
        if self.offset:
            text += f"+{_angle_text(self.offset)}"
        return text


class GateTemplate(BaseModel):
    """Target gate with operands given as source operand slots."""

    model_config = ConfigDict(frozen=True)

    kind: GateKind
    slots: Tuple[int, ...]
    params: Tuple[ParamExpr, ...] = ()

    def instantiate(self, operands: Tuple[int, ...], params: Tuple[float, ...]) -> Gate:
        return make_gate(
            self.kind,
            *(operands[s] for s in self.slots),
            params=tuple(p.evaluate(params) for p in self.params),
        )

    def __str__(self) -> str:
        parts = [f"q{s}" for s in self.slots] + [str(p) for p in self.params]
        return f"{self.kind.value} {', '.join(parts)}"


class RewriteRule(BaseModel):
    """``source`` on operands (q0[, q1]) equals ``target`` up to global phase."""

    model_config = ConfigDict(frozen=True)

    source: GateKind
    target: Tuple[GateTemplate, ...]
    phase_note: PhaseNote = PhaseNote.GLOBAL_PHASE

    def expand(self, gate: Gate) -> List[Gate]:
        return [t.instantiate(gate.operands, gate.params) for t in self.target]

    def __str__(self) -> str:
        head = f"{self.source.value} " + ", ".join(f"q{k}" for k in range(self.source.arity))
        if self.source.param_count:
            head += ", " + ", ".join(["theta", "phi", "lambda"][: self.source.param_count])
        body = "; ".join(str(t) for t in self.target)
        return f"{head} -> {body}  [{self.phase_note.value}]"


def _const(value: float) -> ParamExpr:
    return ParamExpr(offset=value)


def _param(index: int, scale: float = 1.0) -> ParamExpr:
    return ParamExpr(index=index, scale=scale)


def _t(kind: GateKind, *slots: int, params=()) -> GateTemplate:
    return GateTemplate(kind=kind, slots=slots, params=tuple(params))


def _rule(source: GateKind, *target: GateTemplate) -> RewriteRule:
    return RewriteRule(source=source, target=target)


def _u3(*params) -> GateTemplate:
    return _t(GateKind.U3, 0, params=params)


K = GateKind

RULE_TABLE: Tuple[RewriteRule, ...] = (
    # Euler family: everything one-qubit as a single U3.
    _rule(K.H, _u3(_const(PI / 2), _const(0.0), _const(PI))),
    _rule(K.X, _u3(_const(PI), _const(0.0), _const(PI))),
    _rule(K.Y, _u3(_const(PI), _const(PI / 2), _const(PI / 2))),
    _rule(K.Z, _u3(_const(0.0), _const(0.0), _const(PI))),
    _rule(K.S, _u3(_const(0.0), _const(0.0), _const(PI / 2))),
    _rule(K.SDG, _u3(_const(0.0), _const(0.0), _const(-PI / 2))),
    _rule(K.T, _u3(_const(0.0), _const(0.0), _const(PI / 4))),
    _rule(K.TDG, _u3(_const(0.0), _const(0.0), _const(-PI / 4))),
    _rule(K.RX, _u3(_param(0), _const(-PI / 2), _const(PI / 2))),
    _rule(K.RY, _u3(_param(0), _const(0.0), _const(0.0))),
    _rule(K.RZ, _u3(_const(0.0), _const(0.0), _param(0))),
    # X/Y rotation family.
    _rule(K.X, _t(K.RX, 0, params=[_const(PI)])),
    _rule(K.Y, _t(K.RY, 0, params=[_const(PI)])),
    _rule(K.Z, _t(K.RY, 0, params=[_const(PI)]), _t(K.RX, 0, params=[_const(PI)])),
    _rule(K.H, _t(K.RY, 0, params=[_const(PI / 2)]), _t(K.RX, 0, params=[_const(PI)])),
    _rule(K.S, _t(K.RZ, 0, params=[_const(PI / 2)])),
    _rule(K.SDG, _t(K.RZ, 0, params=[_const(-PI / 2)])),
    _rule(K.T, _t(K.RZ, 0, params=[_const(PI / 4)])),
    _rule(K.TDG, _t(K.RZ, 0, params=[_const(-PI / 4)])),
    _rule(
        K.RZ,
        _t(K.RX, 0, params=[_const(-PI / 2)]),
        _t(K.RY, 0, params=[_param(0)]),
        _t(K.RX, 0, params=[_const(PI / 2)]),
    ),
    _rule(
        K.U3,
        _t(K.RZ, 0, params=[_param(2)]),
        _t(K.RY, 0, params=[_param(0)]),
        _t(K.RZ, 0, params=[_param(1)]),
    ),
    # Two-qubit gates.
    _rule(
        K.CNOT,
        _t(K.RY, 1, params=[_const(-PI / 2)]),
        _t(K.CZ, 0, 1),
        _t(K.RY, 1, params=[_const(PI / 2)]),
    ),
    _rule(K.CZ, _t(K.H, 1), _t(K.CNOT, 0, 1), _t(K.H, 1)),
    _rule(K.SWAP, _t(K.CNOT, 0, 1), _t(K.CNOT, 1, 0), _t(K.CNOT, 0, 1)),
)


def rule_mismatch(rule: RewriteRule, params: Tuple[float, ...] = ()) -> Tuple[float, float]:
    """(distance up to global phase, exact distance) between target and source."""
    arity = rule.source.arity
    operands = tuple(range(arity))
    source = make_gate(rule.source, *operands, params=params)
    u_source = circuit_unitary(Circuit(qubit_count=arity, gates=(source,)))
    u_target = circuit_unitary(Circuit(qubit_count=arity, gates=tuple(rule.expand(source))))
    return global_phase_distance(u_target, u_source), float(np.max(np.abs(u_target - u_source)))


def validate_rule(rule: RewriteRule) -> RewriteRule:
    """
    Check a rule against the unitary oracle and stamp its phase note.

    Raises:
        RuleValidationError: target differs from source by more than 1e-12
    """
    samples = [s[: rule.source.param_count] for s in _SAMPLE_PARAMS] if rule.source.param_count else [()]
    exact = True
    for params in samples:
        phased, raw = rule_mismatch(rule, params)
        if phased >= RULE_TOLERANCE:
            raise RuleValidationError(f"rule {rule} is off by {phased:.3e} for params {params}")
        exact = exact and raw < RULE_TOLERANCE
    note = PhaseNote.EXACT if exact else PhaseNote.GLOBAL_PHASE
    return rule.model_copy(update={"phase_note": note})


@lru_cache(maxsize=1)
def validated_rules() -> Tuple[RewriteRule, ...]:
    """The rule table, each rule checked once per process."""
    rules = tuple(validate_rule(rule) for rule in RULE_TABLE)
    logger.debug("validated %d rewrite rules", len(rules))
    return rules


def rules_for(kind: GateKind) -> List[RewriteRule]:
    return [rule for rule in validated_rules() if rule.source is kind]


def rules_by_source() -> Dict[GateKind, List[RewriteRule]]:
    table: Dict[GateKind, List[RewriteRule]] = {}
    for rule in validated_rules():
        table.setdefault(rule.source, []).append(rule)
    return table


def _angle_text(value: float) -> str:
    if value == 0.0:
        return "0"
    for denom in (1, 2, 4):
        if math.isclose(abs(value), PI / denom):
            sign = "-" if value < 0 else ""
            return f"{sign}pi" if denom == 1 else f"{sign}pi/{denom}"
    return repr(value)
