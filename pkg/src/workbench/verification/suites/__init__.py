"""Verification suites; importing this package registers every suite."""

from workbench.verification.suites import grohe, laws, minors, orderings

__all__ = ["grohe", "laws", "minors", "orderings"]
