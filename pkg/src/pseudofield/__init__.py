"""Exact computations around pseudo-finite fields: residue complexity over
F_p, certified eigenvalue witnesses, finite order probes, and the integer
polynomial toolkit that produces algebraic integers with unit values."""

__version__ = "0.1.0"
