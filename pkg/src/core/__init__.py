"""
Core algebra modules.
Coefficient rings, p-adic integers, permutations, framed braids, the
Yokonuma-Hecke algebras, Markov traces and the property suites.
"""

__all__ = [
    'errors',
    'coeff',
    'padic',
    'symmetric',
    'framed_braids',
    'yokonuma',
    'trace',
    'checks',
]
