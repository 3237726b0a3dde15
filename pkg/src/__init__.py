"""
Wasserstein quadrature lab.

Exact semi-discrete transport distances between point sets and grid measures, the gradient
norms of test functions, and the quadrature error bounds built from both.

Author : Coke
Date   : 2025-06-02
"""
