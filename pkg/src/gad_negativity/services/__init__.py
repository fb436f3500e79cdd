"""Sweeps, detectors, result files, plot scripts and verification."""
