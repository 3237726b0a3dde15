"""
Settings, exceptions and the run lifecycle.

Author : Coke
Date   : 2025-06-02
"""
