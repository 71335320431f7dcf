"""Desk-scale workbench for codings between groups, trees, and tagged frames."""

__version__ = "0.1.0"
