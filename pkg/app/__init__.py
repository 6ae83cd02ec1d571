"""
Cayley Stability Toolkit - Main package.
"""
__version__ = "1.0.0"
