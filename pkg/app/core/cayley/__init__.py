"""
Cayley graph and connection-set scaling components for Cayley Stability Toolkit.
"""
