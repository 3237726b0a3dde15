"""
Grids, point sets, fields, transport, norms, inequalities and the experiment runner.

Author : Coke
Date   : 2025-06-04
"""
