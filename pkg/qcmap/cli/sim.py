"""Sim command implementation"""

from pathlib import Path
from typing import Optional

import typer

from qcmap.circuit.parser import read_circuit
from qcmap.errors import QcmapError
from qcmap.verifier.simulator import basis_label, nonzero_amplitudes, simulate

_IMAG_EPS = 1e-12


def format_amplitude(amplitude: complex) -> str:
    """15 significant digits; the imaginary part only when it is non-negligible."""
    re = amplitude.real if abs(amplitude.real) > _IMAG_EPS else 0.0
    if abs(amplitude.imag) <= _IMAG_EPS:
        return f"{re:.15g}"
    return f"{re:.15g}{amplitude.imag:+.15g}j"


def sim_command(circuit_path: Path, state: Optional[str]) -> int:
    """
    Print the nonzero amplitudes of a circuit's output state.

    One line per amplitude above 1e-12: basis index, basis label (qubit 0
    first) and amplitude.

    Returns:
        Exit code: 0 success, 1 input errors
    """
    try:
        circuit = read_circuit(circuit_path)
        label = state if state is not None else "0" * circuit.qubit_count
        result = simulate(circuit, label)
    except OSError as e:
        typer.echo(f"Error: {e}", err=True)
        return 1
    except ValueError as e:
        typer.echo(f"Error: {e}", err=True)
        return 1
    except QcmapError as e:
        typer.echo(f"Error: {e}", err=True)
        return e.exit_code

    for index, amplitude in nonzero_amplitudes(result):
        typer.echo(f"{index} {basis_label(index, circuit.qubit_count)} {format_amplitude(amplitude)}")
    return 0
