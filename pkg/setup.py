"""Setuptools configuration for the package."""

import setuptools

setuptools.setup()
