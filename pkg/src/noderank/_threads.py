"""Worker-thread cap via the NODERANK_THREADS environment variable."""

import os

import numba

ENV_VAR = "NODERANK_THREADS"


def apply_thread_cap() -> int:
    """Clamp numba's thread pool to NODERANK_THREADS (0 or unset = auto).

    Returns the number of threads in effect.  Parallel kernels write only
    per-source/per-trial slots and reduce in fixed order afterwards, so
    results do not depend on this setting.
    """
    raw = os.environ.get(ENV_VAR, "0")
    try:
        requested = int(raw)
    except ValueError:
        requested = 0
    limit = numba.config.NUMBA_NUM_THREADS
    if requested > 0:
        numba.set_num_threads(min(requested, limit))
        return min(requested, limit)
    numba.set_num_threads(limit)
    return limit
