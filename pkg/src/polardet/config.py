"""Run-time limits shared by the enumerating modules."""

import os

#: Safe default cap on elementary determinant evaluations per call.
DEFAULT_MAX_EVALS = 10**8

ENV_MAX_EVALS = "POLARDET_MAX_EVALS"


def max_evals(override: int | None = None) -> int:
    """Explicit override, else ``$POLARDET_MAX_EVALS``, else the default."""
    if override is not None:
        return int(override)
    env = os.environ.get(ENV_MAX_EVALS)
    if env:
        return int(env)
    return DEFAULT_MAX_EVALS
