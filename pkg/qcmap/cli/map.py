"""Map command implementation"""

import logging
from pathlib import Path
from typing import Optional, Tuple

import typer
from rich.console import Console

from qcmap.circuit.parser import read_circuit, write_circuit
from qcmap.device.loader import load_device_file
from qcmap.errors import QcmapError, VerificationFailed
from qcmap.mapper.pipeline import CompiledCircuit, compile_circuit
from qcmap.reporting import export_json, generate_report, write_schedule_file, write_sidecar_file
from qcmap.scheduler.engine import schedule_asap
from qcmap.schemas.config_schema import RunConfig
from qcmap.schemas.metrics_schema import MetricsReport
from qcmap.verifier.constraints import check_constraints
from qcmap.verifier.equivalence import equivalent
from qcmap.verifier.metrics import metrics

logger = logging.getLogger(__name__)

console = Console()


def map_command(cfg: RunConfig) -> int:
    """
    Run parse -> decompose -> place -> route -> lower SWAPs -> schedule -> metrics.

    Artifacts are written before verification so a failing run can be
    inspected.

    Args:
        cfg: Validated run configuration

    Returns:
        Exit code: 0 success, 1 input errors, 2 routing errors, 3 verification failure
    """
    try:
        device = load_device_file(Path(cfg.device))
        circuit = read_circuit(Path(cfg.input))
    except OSError as e:
        typer.echo(f"Error: {e}", err=True)
        return 1
    except QcmapError as e:
        typer.echo(f"Error: {e}", err=True)
        return e.exit_code

    router = cfg.router_config()
    try:
        compiled = compile_circuit(circuit, device, router, cfg.placer, cfg.simplify)
        schedule = schedule_asap(
            compiled.result.circuit,
            device,
            compiled.result.initial_placement,
            compiled.swap_ledger,
        )
    except QcmapError as e:
        typer.echo(f"Error: {e}", err=True)
        return e.exit_code

    report = metrics(compiled.native, compiled.result, schedule, device)
    violations = check_constraints(compiled.result.circuit, device)

    verdict: Optional[Tuple[bool, float]] = None
    if cfg.verify:
        try:
            verdict = equivalent(
                circuit,
                compiled.result.circuit,
                compiled.result.final_placement,
                compiled.result.initial_placement,
            )
        except QcmapError as e:
            typer.echo(f"Error: {e}", err=True)
            return e.exit_code

    try:
        if cfg.out:
            write_circuit(compiled.result.circuit, Path(cfg.out))
        if cfg.schedule:
            write_schedule_file(schedule, Path(cfg.schedule))
        if cfg.metrics:
            write_sidecar_file(report, Path(cfg.metrics))
        if cfg.report:
            export_json(
                generate_report(
                    compiled=compiled,
                    device_name=device.name,
                    input_path=cfg.input,
                    placer=cfg.placer,
                    router=router,
                    metrics=report,
                    violations=violations,
                    verified=verdict[0] if verdict else None,
                    fidelity_deficit=verdict[1] if verdict else None,
                ),
                Path(cfg.report),
            )
    except OSError as e:
        typer.echo(f"Error writing output: {e}", err=True)
        return 1

    _display_summary(cfg, device.name, compiled, report)

    if verdict is not None:
        ok, deficit = verdict
        if not ok:
            error = VerificationFailed(f"mapped circuit is not equivalent (fidelity deficit {deficit:.3e})")
            typer.echo(f"Error: {error}", err=True)
            return error.exit_code
        console.print(f"  ✔ [green]equivalent[/green] [dim](fidelity deficit {deficit:.1e})[/dim]")
    return 0


def _display_summary(cfg: RunConfig, device_name: str, compiled: CompiledCircuit, report: MetricsReport) -> None:
    """Display the mapping summary"""
    console.print(
        f"✔ [bold]{Path(cfg.input).name}[/bold] on [cyan]{device_name}[/cyan] "
        f"[dim]({cfg.placer.value} placement, {cfg.router.value} routing)[/dim]"
    )
    console.print(f"  placement {compiled.result.initial_placement} -> {compiled.result.final_placement}")
    for key, value in report.sidecar_items():
        console.print(f"  {key}: {value}")
