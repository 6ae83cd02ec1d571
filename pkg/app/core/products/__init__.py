"""
Graph product components for Cayley Stability Toolkit.
"""
