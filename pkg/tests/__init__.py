"""Tests for wild-mckay."""
