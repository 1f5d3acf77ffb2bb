"""Exact stable representation theory: diagram algebras, branching rules,
Ext groups and specialization to finite rank."""

__version__ = "0.1.0"
