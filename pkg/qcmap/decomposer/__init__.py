"""Gate decomposition into device-native gate sets."""

from qcmap.decomposer.rules import (
    PhaseNote,
    RewriteRule,
    rules_by_source,
    rules_for,
    validate_rule,
    validated_rules,
)
from qcmap.decomposer.engine import (
    chosen_rule,
    decompose_gate,
    decompose_swap,
    decompose_to_native,
    is_native,
    orient,
    reverse_cnot,
)
from qcmap.decomposer.simplify import simplify, simplify_with_index_map

__all__ = [
    'PhaseNote',
    'RewriteRule',
    'rules_by_source',
    'rules_for',
    'validate_rule',
    'validated_rules',
    'chosen_rule',
    'decompose_gate',
    'decompose_swap',
    'decompose_to_native',
    'is_native',
    'orient',
    'reverse_cnot',
    'simplify',
    'simplify_with_index_map',
]
