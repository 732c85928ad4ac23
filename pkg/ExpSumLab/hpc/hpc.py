"""
High-Performance Computing (HPC) utilities for parallel processing.

Provides chunked, data-parallel execution with joblib. Every helper
returns results in job order, so exact reductions over the outputs do
not depend on the number of workers.
"""

import logging
import time
from typing import Any, Dict, List, Optional, Tuple

import joblib
import numpy as np

logger = logging.getLogger(__name__)


def linear_partitions(num_atoms: int, num_threads: int) -> np.ndarray:
    """
    Generate linear partitions (indices) for parallel computation.

    Splits `num_atoms` into `num_threads` (or fewer) roughly equal parts.

    Parameters
    ----------
    num_atoms : int
        The total number of items to split.
    num_threads : int
        The desired number of partitions (threads).

    Returns
    -------
    np.ndarray
        An array of partition boundary indices.
    """
    n_parts = max(1, min(num_threads, num_atoms))
    partitions = np.linspace(0, num_atoms, n_parts + 1)
    partitions = np.ceil(partitions).astype(np.int64)
    return partitions


def chunk_bounds(
    num_atoms: int, num_threads: int, max_chunk: Optional[int] = None
) -> List[Tuple[int, int]]:
    """
    Turn `linear_partitions` boundaries into (start, stop) pairs.

    Parameters
    ----------
    num_atoms : int
        Size of the index range [0, num_atoms).
    num_threads : int
        Number of workers; at least this many chunks are produced.
    max_chunk : int, optional
        Upper bound on the length of a single chunk (bounds memory).

    Returns
    -------
    List[Tuple[int, int]]
        Consecutive, non-empty, half-open ranges covering the index range.
    """
    num_parts = max(1, num_threads)
    if max_chunk is not None and max_chunk > 0:
        num_parts = max(num_parts, -(-num_atoms // max_chunk))
    parts = linear_partitions(num_atoms, num_parts)
    return [
        (int(parts[i - 1]), int(parts[i]))
        for i in range(1, len(parts))
        if parts[i] > parts[i - 1]
    ]


def report_progress(
    job_number: int, total_jobs: int, start_time: float, task: str
) -> None:
    """
    Report the progress of a computing task through the module logger.

    Parameters
    ----------
    job_number : int
        The current job number (e.g., `i` in a loop).
    total_jobs : int
        The total number of jobs.
    start_time : float
        The time the process started (e.g., `time.time()`).
    task : str
        A description of the task being performed.
    """
    elapsed = time.time() - start_time
    remaining = elapsed * (total_jobs - job_number) / job_number if job_number else float("nan")
    logger.info(
        "%s: %d/%d jobs done (%.0f%%) after %.1f s, about %.1f s remaining",
        task, job_number, total_jobs, 100.0 * job_number / total_jobs, elapsed, remaining,
    )


def expand_call(kargs: Dict[str, Any]) -> Any:
    """
    Wrapper function to expand keyword arguments for a callback.

    Parameters
    ----------
    kargs : dict
        A dictionary of arguments, which *must* include a 'func' key
        mapping to the function to be called.

    Returns
    -------
    Any
        The output of the callback function.
    """
    kargs = dict(kargs)
    func = kargs.pop('func')
    return func(**kargs)


def process_jobs(
    jobs: List[Dict[str, Any]],
    task: Optional[str] = None,
    num_threads: int = 1,
) -> List[Any]:
    """
    Process a list of job dictionaries, in parallel when requested.

    Parameters
    ----------
    jobs : List[Dict[str, Any]]
        A list of job dictionaries. Each dict must contain a 'func' key
        and all arguments required by that function.
    task : str, optional
        A name for the task, used for progress reporting. If None,
        the function name from the first job is used.
    num_threads : int, default=1
        The number of parallel workers.

    Returns
    -------
    List[Any]
        The results, in job order.
    """
    if not jobs:
        return []
    if task is None:
        task = jobs[0]['func'].__name__

    start_time = time.time()
    if num_threads <= 1:
        outputs = []
        for i, job in enumerate(jobs, 1):
            outputs.append(expand_call(job))
            report_progress(i, len(jobs), start_time, task)
        return outputs

    outputs = joblib.Parallel(n_jobs=num_threads)(
        joblib.delayed(expand_call)(job) for job in jobs
    )
    report_progress(len(jobs), len(jobs), start_time, task)
    return outputs
