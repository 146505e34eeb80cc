"""Utility helpers: parameter files and search budgets."""
