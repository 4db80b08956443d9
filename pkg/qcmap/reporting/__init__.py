"""Artifact writers for mapping runs"""

from qcmap.reporting.generator import (
    export_json,
    format_sidecar,
    format_violations,
    generate_report,
    write_schedule_file,
    write_sidecar_file,
)

__all__ = [
    'export_json',
    'format_sidecar',
    'format_violations',
    'generate_report',
    'write_schedule_file',
    'write_sidecar_file',
]
