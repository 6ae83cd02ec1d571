"""
Coloured graph components for Cayley Stability Toolkit.
"""
