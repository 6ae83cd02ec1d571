"""
Configuration package for Cayley Stability Toolkit.
"""
