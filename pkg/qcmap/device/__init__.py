"""Device descriptions and coupling-graph queries."""

from qcmap.device.loader import (
    dump_device,
    list_devices,
    load_device,
    load_device_file,
    shipped_device_dir,
)
from qcmap.device.topology import Topology, are_coupled, distance, shortest_path, topology
from qcmap.device.channels import channel_conflict

__all__ = [
    'dump_device',
    'list_devices',
    'load_device',
    'load_device_file',
    'shipped_device_dir',
    'Topology',
    'are_coupled',
    'distance',
    'shortest_path',
    'topology',
    'channel_conflict',
]
