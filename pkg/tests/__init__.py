"""Tests for gad_negativity."""
