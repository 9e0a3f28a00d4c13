"""Radical-square-zero algebras, their double quivers and Auslander-Reiten theory over F_p."""

__version__ = "0.1.0"
