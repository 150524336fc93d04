"""Shared exception types."""


class VerificationError(Exception):
    """An internal consistency check failed (certificate replay, oracle mismatch)."""
