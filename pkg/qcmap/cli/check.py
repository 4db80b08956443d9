"""Check command implementation"""

from pathlib import Path

import typer

from qcmap.circuit.parser import read_circuit
from qcmap.device.loader import load_device_file
from qcmap.errors import QcmapError
from qcmap.reporting import format_violations
from qcmap.verifier.constraints import check_constraints


def check_command(device_path: Path, circuit_path: Path) -> int:
    """
    Print the constraint violations of a physical circuit.

    Returns:
        Exit code: 0 no violations, 1 input errors, 2 violations found
    """
    try:
        device = load_device_file(device_path)
        circuit = read_circuit(circuit_path)
    except OSError as e:
        typer.echo(f"Error: {e}", err=True)
        return 1
    except QcmapError as e:
        typer.echo(f"Error: {e}", err=True)
        return e.exit_code

    violations = check_constraints(circuit, device)
    if violations:
        typer.echo(format_violations(violations), nl=False)
        return 2
    return 0
