"""Noncrossing partitions of [n] under rotation and reflection."""

from .partitions import (
    PartitionStats,
    SetPartition,
    enumerate_all,
    enumerate_nc,
    format_partition,
    is_noncrossing,
    parse_partition,
    stats,
)
from .symmetry import complement, kreweras, rotate, rotation_orbit, transpose

__version__ = "0.1.0"
