"""
Logging, timing, configuration and errors shared by all packages
"""
