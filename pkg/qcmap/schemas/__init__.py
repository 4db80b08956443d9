from qcmap.schemas.circuit_schema import Circuit, Gate, GateKind, NodeStatus, make_gate
from qcmap.schemas.device_schema import (
    ChannelScope,
    ControlChannel,
    Coupling,
    CouplingKind,
    Device,
    EdgeErrorRate,
)
from qcmap.schemas.mapping_schema import (
    FREE,
    CostMode,
    Placement,
    PlacerStrategy,
    RoutedResult,
    RouterConfig,
    RouterStrategy,
)
from qcmap.schemas.schedule_schema import ExecutionSnapshot, Schedule, ScheduledGate
from qcmap.schemas.metrics_schema import MetricsReport, Violation, ViolationKind
from qcmap.schemas.config_schema import RunConfig
from qcmap.schemas.report_schema import MappingReport

__all__ = [
    'Circuit', 'Gate', 'GateKind', 'NodeStatus', 'make_gate',
    'ChannelScope', 'ControlChannel', 'Coupling', 'CouplingKind', 'Device', 'EdgeErrorRate',
    'FREE', 'CostMode', 'Placement', 'PlacerStrategy', 'RoutedResult', 'RouterConfig', 'RouterStrategy',
    'ExecutionSnapshot', 'Schedule', 'ScheduledGate',
    'MetricsReport', 'Violation', 'ViolationKind',
    'RunConfig',
    'MappingReport',
]
