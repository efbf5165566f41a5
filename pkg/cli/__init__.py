"""
Command-line commands and input loading
"""
