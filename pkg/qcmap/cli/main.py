"""qcmap CLI - Quantum circuit mapping toolkit"""

# Load environment variables from .env file before anything reads them
from dotenv import load_dotenv
load_dotenv()

import logging
import os
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from rich.logging import RichHandler

from qcmap.cli.check import check_command
from qcmap.cli.inventory import devices_command, rules_command
from qcmap.cli.map import map_command
from qcmap.cli.sim import sim_command
from qcmap.config import build_run_config, load_run_config
from qcmap.device.loader import shipped_device_dir
from qcmap.errors import ConfigError
from qcmap.schemas.mapping_schema import CostMode, PlacerStrategy, RouterStrategy

app = typer.Typer(
    name="qcmap",
    help="qcmap - map quantum circuits onto described quantum processors",
    add_completion=False,
)

_LEVELS = ("WARNING", "INFO", "DEBUG")


@app.callback()
def main(
    verbose: int = typer.Option(
        0,
        "--verbose",
        "-v",
        count=True,
        help="Increase log verbosity (-v info, -vv debug); overrides QCMAP_LOG_LEVEL",
    ),
):
    """
    Map hardware-agnostic circuits onto devices, check and simulate them.
    """
    if verbose:
        name = _LEVELS[min(verbose, len(_LEVELS) - 1)]
    else:
        name = os.environ.get("QCMAP_LOG_LEVEL", "WARNING").upper()
    level = getattr(logging, name, None)
    logging.basicConfig(
        level=level if isinstance(level, int) else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


@app.command("map")
def map_(
    device: Optional[str] = typer.Option(None, "--device", "-d", help="Device description file"),
    input_path: Optional[str] = typer.Option(None, "--in", "-i", help="Input circuit (.qc)"),
    placer: Optional[PlacerStrategy] = typer.Option(None, "--placer", help="Initial placement strategy"),
    router: Optional[RouterStrategy] = typer.Option(None, "--router", help="Routing strategy"),
    cost: Optional[CostMode] = typer.Option(None, "--cost", help="Look-ahead distance measure"),
    w0: Optional[float] = typer.Option(None, "--w0", help="Frontier weight"),
    w1: Optional[float] = typer.Option(None, "--w1", help="Window weight"),
    window: Optional[int] = typer.Option(None, "--window", help="Look-ahead window in two-qubit gates"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for randomized tie-breaks"),
    out: Optional[str] = typer.Option(None, "--out", "-o", help="Write the mapped circuit here"),
    schedule: Optional[str] = typer.Option(None, "--schedule", help="Write the schedule dump here"),
    metrics: Optional[str] = typer.Option(None, "--metrics", help="Write the metrics sidecar here"),
    report: Optional[str] = typer.Option(None, "--report", help="Write a JSON report here"),
    verify: Optional[bool] = typer.Option(
        None, "--verify/--no-verify", help="Check the mapped circuit against the input by simulation"
    ),
    simplify: Optional[bool] = typer.Option(
        None, "--simplify/--no-simplify", help="Run the peephole pass after routing"
    ),
    config: Optional[str] = typer.Option(
        None, "--config", "-c", help="Run configuration file (.yml, .yaml, .json or .toml)"
    ),
):
    """
    Map a circuit onto a device: decompose, place, route, schedule.

    Exit codes:
    - 0: success
    - 1: parse, device or configuration errors
    - 2: routing errors
    - 3: verification failure

    Example:
      qcmap map --device qcmap/device/data/ibm_qx4.dev --in corpus/fig1b.qc --router exact --verify
    """
    overrides = {
        "device": device,
        "input": input_path,
        "placer": placer,
        "router": router,
        "cost": cost,
        "w0": w0,
        "w1": w1,
        "window": window,
        "seed": seed,
        "out": out,
        "schedule": schedule,
        "metrics": metrics,
        "report": report,
        "verify": verify,
        "simplify": simplify,
    }
    try:
        file_values = load_run_config(Path(config)) if config else {}
        cfg = build_run_config(file_values, overrides)
    except ConfigError as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(e.exit_code)

    raise typer.Exit(map_command(cfg))


@app.command()
def check(
    device: str = typer.Option(..., "--device", "-d", help="Device description file"),
    input_path: str = typer.Option(..., "--in", "-i", help="Physical circuit (.qc) to check"),
):
    """
    List the device constraints a physical circuit violates.

    Exit codes: 0 no violations, 1 input errors, 2 violations found.
    """
    raise typer.Exit(check_command(Path(device), Path(input_path)))


@app.command()
def sim(
    input_path: str = typer.Option(..., "--in", "-i", help="Circuit (.qc) to simulate"),
    state: Optional[str] = typer.Option(
        None, "--state", "-s", help="Input basis state, qubit 0 first (defaults to all zeros)"
    ),
):
    """
    Simulate a circuit and print its nonzero output amplitudes.
    """
    raise typer.Exit(sim_command(Path(input_path), state))


@app.command()
def devices(
    directory: Optional[str] = typer.Argument(
        None,
        help="Directory of .dev files (defaults to QCMAP_DEVICE_DIR, then the shipped devices)",
    ),
):
    """
    List the device files in a directory.
    """
    chosen = directory or os.environ.get("QCMAP_DEVICE_DIR")
    raise typer.Exit(devices_command(Path(chosen) if chosen else shipped_device_dir()))


@app.command()
def rules(
    device: str = typer.Option(..., "--device", "-d", help="Device description file"),
):
    """
    Dump the validated rewrite rules the decomposer uses on a device.
    """
    raise typer.Exit(rules_command(Path(device)))


if __name__ == "__main__":
    app()
