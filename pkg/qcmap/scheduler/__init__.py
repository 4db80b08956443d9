"""Clock-cycle scheduling of routed native circuits."""

from qcmap.scheduler.engine import (
    Scheduler,
    compatible_gates,
    depth,
    schedule_asap,
    snapshot,
)
from qcmap.scheduler.dump import dump_schedule, gate_label

__all__ = [
    'Scheduler',
    'compatible_gates',
    'depth',
    'schedule_asap',
    'snapshot',
    'dump_schedule',
    'gate_label',
]
