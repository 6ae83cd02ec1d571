"""
Stability checkers for Cayley Stability Toolkit.
"""
