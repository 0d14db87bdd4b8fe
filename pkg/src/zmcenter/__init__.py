"""Absolute centers of ZM-groups: closed formulas verified against
brute-force oracles, plus constructive certificates realizing every finite
cyclic group as an absolute center."""

from .config import Bounds, DEFAULT_BOUNDS
from .errors import (
    AutParamError,
    BoundExceededError,
    CertificateError,
    SearchBudgetError,
    TripleError,
    ZmcenterError,
)
from .zm import ZmElement, ZmTriple, validate_triple, iter_valid_triples

__version__ = "0.1.0"

__all__ = [
    "Bounds",
    "DEFAULT_BOUNDS",
    "ZmElement",
    "ZmTriple",
    "validate_triple",
    "iter_valid_triples",
    "ZmcenterError",
    "TripleError",
    "AutParamError",
    "BoundExceededError",
    "SearchBudgetError",
    "CertificateError",
    "__version__",
]
