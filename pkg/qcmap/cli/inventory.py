"""Devices and rules command implementations"""

from pathlib import Path
from typing import List

import typer

from qcmap.decomposer.engine import chosen_rule, decompose_swap
from qcmap.decomposer.rules import RewriteRule, validated_rules
from qcmap.device.loader import list_devices, load_device_file
from qcmap.device.topology import topology
from qcmap.errors import NoRuleAvailable, QcmapError
from qcmap.schemas.circuit_schema import GateKind, make_gate
from qcmap.schemas.device_schema import Device

_PROBE_PARAMS = (0.5, 0.25, 0.125)


def devices_command(directory: Path) -> int:
    """
    List the device files in a directory.

    Returns:
        Exit code: 0 success (also for an empty directory), 1 unreadable directory or device file
    """
    if not directory.is_dir():
        typer.echo(f"Error: '{directory}' is not a readable directory.", err=True)
        return 1
    try:
        found = list_devices(directory)
    except OSError as e:
        typer.echo(f"Error: {e}", err=True)
        return 1
    except QcmapError as e:
        typer.echo(f"Error: {e}", err=True)
        return e.exit_code

    for path, device in found:
        typer.echo(
            f"{device.name}  {device.qubit_count} qubits  "
            f"1q: {_kinds(device.native_1q)}  2q: {_two_qubit_text(device)}  {path.name}"
        )
    return 0


def rules_command(device_path: Path) -> int:
    """
    Print the validated rewrite rules usable on a device.

    Returns:
        Exit code: 0 success, 1 device or rule-table errors
    """
    try:
        device = load_device_file(device_path)
        rules = _chosen_rules(device)
    except OSError as e:
        typer.echo(f"Error: {e}", err=True)
        return 1
    except QcmapError as e:
        typer.echo(f"Error: {e}", err=True)
        return e.exit_code

    typer.echo(f"device {device.name}")
    typer.echo(f"native 1q: {_kinds(device.native_1q)}")
    typer.echo(f"native 2q: {_two_qubit_text(device)}")
    for rule in rules:
        typer.echo(str(rule))
    a, b = topology(device).skeleton_edges[0] if device.edges else (None, None)
    if a is not None:
        sequence = decompose_swap(a, b, device)
        typer.echo(f"swap q{a}, q{b} on device -> " + "; ".join(str(g) for g in sequence))
    return 0


def _chosen_rules(device: Device) -> List[RewriteRule]:
    """The rule chosen for each non-native gate kind, in kind order."""
    validated_rules()
    edge = topology(device).skeleton_edges[0] if device.edges else None
    rules: List[RewriteRule] = []
    for kind in GateKind:
        if kind is GateKind.MEASURE or (kind.arity == 2 and edge is None):
            continue
        operands = edge if kind.arity == 2 else (0,)
        probe = make_gate(kind, *operands, params=_PROBE_PARAMS[: kind.param_count])
        try:
            rule = chosen_rule(probe, device)
        except NoRuleAvailable:
            continue
        if rule is not None:
            rules.append(rule)
    return rules


def _kinds(kinds) -> str:
    return " ".join(kind.value for kind in GateKind if kind in kinds)


def _two_qubit_text(device: Device) -> str:
    direction = "symmetric" if device.native_2q_symmetric else "directed"
    return f"{device.native_2q.value} ({direction})"
