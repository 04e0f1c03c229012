"""
Configuration
Run-time constants shared by the Coxeter group and Renner monoid packages
"""

import logging
import os
from typing import Optional

logger = logging.getLogger(__name__)

# Largest number of elements any enumeration may produce
DEFAULT_ELEMENT_BUDGET = 1_000_000
BUDGET_ENV_VAR = 'RENNER_BUDGET'

# Rook cross-section: partial identities with ones in the first k diagonal places.
# Frozen against the 3x3 counterexample; 'trailing' is the rejected candidate.
ROOK_IDEMPOTENT_ORIENTATION = 'leading'
ROOK_ORIENTATIONS = ('leading', 'trailing')

# Thread fan-out used by the verification suites
DEFAULT_WORKERS = 1

# Groups the coxeter and parabolic suites check beside the system's own group
REFERENCE_GROUPS = ('A3', 'B2')

# Sample sizes for the non-exhaustive checks
ASSOCIATIVITY_SAMPLE = 10_000
RANDOM_SEED = 1729


def element_budget(explicit: Optional[int] = None) -> int:
    """
    Resolve the effective element budget

    Args:
        explicit: Budget passed by the caller, wins over everything else

    Returns:
        Positive element budget
    """
    if explicit is not None:
        if explicit <= 0:
            raise ValueError(f'element budget must be positive, got {explicit}')
        return explicit

    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            logger.warning('ignoring non-integer %s=%r', BUDGET_ENV_VAR, raw)
            return DEFAULT_ELEMENT_BUDGET
        if value > 0:
            return value
        logger.warning('ignoring non-positive %s=%r', BUDGET_ENV_VAR, raw)

    return DEFAULT_ELEMENT_BUDGET
