"""Numerical kernel: states, channels, entanglement."""
