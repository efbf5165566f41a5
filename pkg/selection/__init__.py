"""
Data-driven choice of the Fejér order and of the CDF origin
"""
