"""
Monte Carlo driver reproducing the simulation tables
"""
