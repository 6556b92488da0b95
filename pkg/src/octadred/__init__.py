"""Octad pictures and stable reduction types of plane quartics.

The package computes, from an 8-point configuration in P^3 over Q together
with an odd prime p, the p-adic valuation data of the configuration, its
decomposition into building blocks, the induced picture, and the predicted
stable reduction type of the underlying genus-3 curve.  It also regenerates
the full combinatorial catalog (compatible subspace collections of the
6-dimensional symplectic F_2-space, their Sp(6,2)-orbits, and the
degeneration graphs of stable types) and checks it against hand-encoded
reference tables.
"""

__version__ = "0.1.0"
