"""
Input/Output utilities.

This package contains the signed edge-list format and output formatting.
"""
