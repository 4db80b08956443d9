"""
Deterministic artifact writers.

This module accepts already-computed results and serializes them. No
additional computation is performed.
"""

import json
from pathlib import Path
from typing import Optional, Sequence

from qcmap import __version__
from qcmap.mapper.pipeline import CompiledCircuit
from qcmap.scheduler.dump import dump_schedule
from qcmap.schemas.mapping_schema import PlacerStrategy, RouterConfig
from qcmap.schemas.metrics_schema import MetricsReport, Violation
from qcmap.schemas.report_schema import MappingReport
from qcmap.schemas.schedule_schema import Schedule


def generate_report(
    *,
    compiled: CompiledCircuit,
    device_name: str,
    input_path: str,
    placer: PlacerStrategy,
    router: RouterConfig,
    metrics: MetricsReport,
    violations: Sequence[Violation],
    verified: Optional[bool] = None,
    fidelity_deficit: Optional[float] = None,
) -> MappingReport:
    """
    Compose a MappingReport from already-computed results.

    Args:
        compiled: Pipeline output
        device_name: Target device name
        input_path: Input circuit path as given on the command line
        placer: Placement strategy used
        router: Router configuration used
        metrics: Metrics of the run
        violations: Constraint violations of the output
        verified: Equivalence verdict, if the oracle ran
        fidelity_deficit: Oracle deficit, if the oracle ran

    Returns:
        MappingReport with all data serialized
    """
    return MappingReport(
        tool_version=__version__,
        device=device_name,
        input_path=input_path,
        placer=placer,
        router=router,
        initial_placement=str(compiled.result.initial_placement),
        final_placement=str(compiled.result.final_placement),
        metrics=metrics,
        violations=[str(v) for v in violations],
        verified=verified,
        fidelity_deficit=fidelity_deficit,
    )


def export_json(report: MappingReport, output_path: Path) -> None:
    """
    Export report as JSON.

    Args:
        report: Mapping report to export
        output_path: Path to write JSON file
    """
    report_dict = report.model_dump(mode='json')
    with open(output_path, 'w', encoding='utf-8') as f:
        json.dump(report_dict, f, indent=2, sort_keys=True, ensure_ascii=False)
        f.write("\n")


def format_sidecar(metrics: MetricsReport) -> str:
    """``key=value`` lines in the fixed sidecar key order."""
    return "".join(f"{key}={value}\n" for key, value in metrics.sidecar_items())


def format_violations(violations: Sequence[Violation]) -> str:
    return "".join(f"{v}\n" for v in violations)


def write_schedule_file(schedule: Schedule, output_path: Path) -> None:
    _write_text(output_path, dump_schedule(schedule))


def write_sidecar_file(metrics: MetricsReport, output_path: Path) -> None:
    _write_text(output_path, format_sidecar(metrics))


def _write_text(output_path: Path, text: str) -> None:
    # newline='' keeps '\n' on every platform so files compare byte for byte
    with open(output_path, 'w', encoding='utf-8', newline='') as f:
        f.write(text)
