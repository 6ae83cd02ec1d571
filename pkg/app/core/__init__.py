"""
Core functionality package for Cayley Stability Toolkit.
"""
