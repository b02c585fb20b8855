"""
Command-line interface components for signedtools.

This package contains pure UI logic separated from the analysis code.
"""

from .main import main_cli

__all__ = ["main_cli"]
