"""
ExpSumLab High-Performance Computing (HPC) Module

Provides utilities for chunked, data-parallel execution.
"""

from .hpc import (
    linear_partitions,
    chunk_bounds,
    report_progress,
    expand_call,
    process_jobs,
)

__all__ = [
    "linear_partitions",
    "chunk_bounds",
    "report_progress",
    "expand_call",
    "process_jobs",
]
