"""
Constants, the seeded generator and CSV/SVG writers.

Author : Coke
Date   : 2025-06-02
"""
