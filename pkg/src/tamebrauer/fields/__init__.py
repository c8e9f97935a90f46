"""Exact field arithmetic: finite-field lattice, towers, places, valuations."""

from .finite import FF, ClosureElt, ClosureField, FFElt, FqField, embed, section
from .extfield import ExtField

__all__ = [
    "FF", "FqField", "FFElt", "ClosureField", "ClosureElt", "ExtField",
    "embed", "section",
]
