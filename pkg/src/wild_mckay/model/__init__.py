"""Model module - check reports shared by verification operations."""

from wild_mckay.model.report import CheckReport, CheckStatus, combine_reports

__all__ = ["CheckReport", "CheckStatus", "combine_reports"]
