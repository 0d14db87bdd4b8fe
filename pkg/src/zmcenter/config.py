"""Default bounds for the brute-force engines.

All bounds are hard gates: exceeding one raises BoundExceededError (or
SearchBudgetError for the prime hunt), never silently truncates.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Bounds:
    table: int = 2000        # max group order for explicit Cayley tables
    aut: int = 200           # max order for table-automorphism backtracking
    subgroups: int = 400     # max order for full subgroup enumeration
    oracle: int = 2000       # max m*n for the fixed-point absolute-center scan
    prime_budget: int = 10**6  # max t tried in the 1 + t*q^a progression


DEFAULT_BOUNDS = Bounds()
