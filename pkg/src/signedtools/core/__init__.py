"""
Core data model and exact computations for signed graphs.

This package contains the signed graph type, exact integer linear algebra,
the independence, matching and cyclomatic numbers, and cycle structure
(blocks, contraction and switching).
"""
