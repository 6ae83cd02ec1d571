"""
Service components for Cayley Stability Toolkit.
"""
