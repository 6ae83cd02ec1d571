"""
Test package for Cayley Stability Toolkit.
"""

