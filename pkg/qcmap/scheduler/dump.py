"""Text form of a schedule: one ``cycle <n>: <gate>@<qubits>; ...`` line per cycle."""

from qcmap.schemas.circuit_schema import Gate
from qcmap.schemas.schedule_schema import Schedule


def gate_label(gate: Gate) -> str:
    label = gate.kind.value
    if gate.params:
        label += "(" + ",".join(repr(float(p)) for p in gate.params) + ")"
    return label + "@" + ",".join(str(q) for q in gate.operands)


def dump_schedule(schedule: Schedule) -> str:
    """Every cycle from 0 to depth-1, listing the gates that start in it by lowest qubit."""
    table = schedule.cycle_table()
    lines = []
    for cycle in range(schedule.depth):
        entries = table.get(cycle, ())
        body = "; ".join(gate_label(e.gate) for e in entries)
        lines.append(f"cycle {cycle}: {body}" if body else f"cycle {cycle}:")
    return "\n".join(lines) + ("\n" if lines else "")
