"""
Fejér kernel, its moments and the Lambert W function
"""
