"""Finite rings and the clean-element hierarchy."""

__version__ = "0.1.0"
