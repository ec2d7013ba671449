"""Numerical kernels: compiled (Cython) cores with pure-numpy fallbacks.

The two implementations of each kernel share one calling convention and
one source of randomness (arrays pre-generated by the caller), so a chain
run on either backend consumes the random stream identically.  Backend
selection lives in :mod:`reagg.backend`.
"""
