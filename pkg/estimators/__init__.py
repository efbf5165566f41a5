"""
Fejér density and distribution-function estimators
"""
