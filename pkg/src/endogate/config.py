"""Global limits and defaults shared across modules."""

import os

# Matrices over GF(2) are stored one machine word per row.
MAX_DIM = 32
# |B| = n, Q_B has dimension n - 1 <= MAX_DIM.
MAX_N = MAX_DIM + 1
# Exhaustive spin covers 2**(n-1) - 1 vectors.
SPIN_CAP = 21

DEFAULT_PRIME_BUDGET = 10_000
PRIME_BUDGET_ENV = "ENDOGATE_PRIME_BUDGET"
BACKEND_ENV = "ENDOGATE_BACKEND"


def prime_budget_from_env(default: int = DEFAULT_PRIME_BUDGET) -> int:
    raw = os.environ.get(PRIME_BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return default
    value = int(raw)
    if value < 2:
        raise ValueError(f"{PRIME_BUDGET_ENV} must be >= 2, got {value}")
    return value
