"""
Lucas umbral.

Exact computer algebra for sequences of binomial type in characteristic p.
"""
