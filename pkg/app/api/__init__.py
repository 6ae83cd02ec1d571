"""
API package for Cayley Stability Toolkit.
"""
