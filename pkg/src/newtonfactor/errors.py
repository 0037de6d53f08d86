"""Exceptions shared across the package."""


class Inconclusive(RuntimeError):
    """A search hit its configured cap before reaching an answer."""


class FactorizationError(ValueError):
    """A constructive factorization was requested where it does not apply."""
