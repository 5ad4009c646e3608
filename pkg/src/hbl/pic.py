"""Integer arithmetic on Pic(Sigma_e).

Sigma_e is the Hirzebruch surface P(O + O(-e)) over P^1.  Pic is free on
the negative section C0 (C0^2 = -e) and a ruling fibre F (C0.F = 1,
F^2 = 0); a divisor class a*C0 + b*F is stored as the integer pair
(a, b).  The canonical class is -2*C0 - (e+2)*F.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class Surface:
    """The Hirzebruch surface Sigma_e."""

    e: int

    def __post_init__(self):
        if self.e < 0:
            raise ValueError(f"Hirzebruch parameter must be >= 0, got {self.e}")


@dataclass(frozen=True)
class DivisorClass:
    """a*C0 + b*F in Pic(Sigma_e)."""

    a: int
    b: int

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.a, -self.b)

    def __rmul__(self, n: int) -> "DivisorClass":
        return DivisorClass(n * self.a, n * self.b)


O_X = DivisorClass(0, 0)
C0 = DivisorClass(1, 0)
F_FIBRE = DivisorClass(0, 1)


@dataclass(frozen=True)
class ChernData:
    """Rank plus the first two Chern classes of a sheaf on Sigma_e."""

    rank: int
    c1: DivisorClass
    c2: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")


def intersect(s: Surface, D1: DivisorClass, D2: DivisorClass) -> int:
    """Intersection number on Sigma_e: a1*b2 + a2*b1 - e*a1*a2."""
    return D1.a * D2.b + D2.a * D1.b - s.e * D1.a * D2.a


def canonical_class(s: Surface) -> DivisorClass:
    return DivisorClass(-2, -(s.e + 2))


def is_ample(s: Surface, H: DivisorClass) -> bool:
    """Toric ampleness: positive on both extremal curves C0 and F."""
    return H.a > 0 and H.b > s.e * H.a


def euler_char(s: Surface, c: ChernData) -> int:
    """Riemann-Roch: chi = rank + (c1.(c1 - K))/2 - c2, with chi(O) = 1.

    The half-product is an integer for every integral c1 on Sigma_e;
    a parity failure means the Chern data was assembled inconsistently.
    """
    t = intersect(s, c.c1, c.c1 - canonical_class(s))
    if t % 2 != 0:
        raise ValueError(f"odd product c1.(c1-K) = {t}: malformed Chern data")
    return c.rank + t // 2 - c.c2


def chern_twist(s: Surface, c: ChernData, D: DivisorClass) -> ChernData:
    """Chern data of E(D) given that of E (rank unchanged)."""
    c1 = c.c1 + c.rank * D
    c2 = (
        c.c2
        + (c.rank - 1) * intersect(s, D, c.c1)
        + comb(c.rank, 2) * intersect(s, D, D)
    )
    return ChernData(c.rank, c1, c2)


def chern_endo(s: Surface, c: ChernData) -> ChernData:
    """Chern data of E* tensor E for rank-two E: rank 4, c1 = 0,
    c2 = 4*c2(E) - c1(E)^2."""
    if c.rank != 2:
        raise ValueError(f"endomorphism Chern data needs rank 2, got {c.rank}")
    c1_sq = intersect(s, c.c1, c.c1)
    return ChernData(4, DivisorClass(0, 0), 4 * c.c2 - c1_sq)


def ell_zeta(s: Surface, c: ChernData, d: int, r: int) -> int:
    """Length of the residual subscheme in the canonical presentation of a
    rank-two bundle with splitting invariants (d, r):

        ell = c2 + alpha*(d*e - r) - beta*d + 2*d*r - d^2*e

    where c1 = alpha*C0 + beta*F.  Equivalently c2 - L1.L2 for
    L1 = d*C0 + r*F and L2 = c1 - L1; both routes are computed and must
    agree (sign-convention anchor).
    """
    if c.rank != 2:
        raise ValueError(f"ell_zeta needs rank 2, got {c.rank}")
    alpha, beta = c.c1.a, c.c1.b
    ell = c.c2 + alpha * (d * s.e - r) - beta * d + 2 * d * r - d * d * s.e
    L1 = DivisorClass(d, r)
    assert ell == c.c2 - intersect(s, L1, c.c1 - L1), "ell_zeta routes disagree"
    return ell


def slope_destabilization_gap(s: Surface, H: DivisorClass) -> int:
    """Doubled slope gap 2*(mu_H(O(-C0-F)) - mu_H(V)) for V with c1 = K.

    Expands to 2*H.(-C0-F) - H.K = e*(H.F), which is >= 0 for ample H:
    a section of V(C0+F) would always be destabilizing.
    """
    if not is_ample(s, H):
        raise ValueError(f"H = ({H.a},{H.b}) is not ample on Sigma_{s.e}")
    gap = 2 * intersect(s, H, -(C0 + F_FIBRE)) - intersect(s, H, canonical_class(s))
    assert gap == s.e * intersect(s, H, F_FIBRE)
    return gap
