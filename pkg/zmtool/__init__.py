"""Exact conjugacy and automorphism-conjugacy class counting for ZM-groups."""

__version__ = "0.1.0"
