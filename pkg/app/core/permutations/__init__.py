"""
Permutation group and automorphism search components for Cayley Stability Toolkit.
"""
