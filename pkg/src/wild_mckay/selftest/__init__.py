"""Acceptance suite run by the selftest command."""

from wild_mckay.selftest.acceptance import run_acceptance

__all__ = ["run_acceptance"]
