"""
Density estimation under Berkson and classical measurement error
"""
