"""
Reference circular distributions, samplers and risk evaluation
"""
