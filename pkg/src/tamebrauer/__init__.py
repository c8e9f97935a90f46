"""Exact arithmetic for tame symbol Brauer classes over function-field towers.

The library computes residues, ramification divisors, exponents and exact
indices of Brauer classes presented as formal sums of symbol algebras, plus
diagonal quadratic form isotropy and hyperbolicity, over towers built from
finite fields: finite or algebraically-closed base, rational function layers,
and tame Laurent layers.
"""

__version__ = "0.1.0"
