"""Exception hierarchy shared by all wild_mckay modules."""

from __future__ import annotations


class WildMcKayError(ValueError):
    """Base class for argument-shaped failures raised by the library.

    The CLI maps these to exit status 2 (usage error).
    """


class ContractViolation(RuntimeError):
    """An internal invariant failed; the CLI maps this to exit status 1."""
