"""Verification suites, growth fitting and benchmarks of the workbench."""
