"""
Thread pool for independent experiment instances.

Author : Coke
Date   : 2025-06-12
"""
