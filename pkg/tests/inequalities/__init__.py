"""
Author  : Coke
Date    : 2025-06-14
"""
