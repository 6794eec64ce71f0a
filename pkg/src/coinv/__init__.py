"""Bases, series and verification tools for bosonic-fermionic coinvariant rings."""

__version__ = "0.1.0"
