"""
Finite group construction components for Cayley Stability Toolkit.
"""
