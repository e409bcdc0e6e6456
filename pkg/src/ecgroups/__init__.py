"""Verifiable computation with elliptic-curve groups over small finite fields."""

__version__ = "0.1.0"
