"""Exact-arithmetic toolkit for rank-two bundles on Hirzebruch surfaces.

Computes line-bundle cohomology on the surfaces Sigma_e two independent
ways (closed forms and a combinatorial Cech model), samples and verifies
monads whose cohomology bundles have canonical determinant and c2 = 4,
and audits the dimension arithmetic of the monad parameter space.
"""

__version__ = "0.1.0"

from .pic import Surface, DivisorClass, ChernData
from .fields import QQ, PrimeField, Rationals

__all__ = [
    "Surface",
    "DivisorClass",
    "ChernData",
    "QQ",
    "PrimeField",
    "Rationals",
    "__version__",
]
