"""Exception types shared across the package."""


class ZmcenterError(Exception):
    """Base class for all package errors."""


class TripleError(ZmcenterError, ValueError):
    """A (m, n, r) presentation violates one of the validity conditions.

    ``reason`` is machine-checkable: one of "gcd_mn", "gcd_m_rminus1",
    "order", "range".
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class AutParamError(ZmcenterError, ValueError):
    """An automorphism parameter triple violates its constraints."""


class BoundExceededError(ZmcenterError):
    """A brute-force operation was asked to run above its configured bound."""


class SearchBudgetError(ZmcenterError):
    """A bounded search (prime hunting) gave up without an answer."""


class CertificateError(ZmcenterError, ValueError):
    """A realiser certificate fails one of its structural invariants."""
