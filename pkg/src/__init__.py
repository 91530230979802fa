"""yhkernel - exact Yokonuma-Hecke algebras, framed braids and p-adic Markov traces"""
__version__ = "1.0.0"
