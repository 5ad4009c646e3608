"""Exact coefficient fields: rationals, prime fields, small extensions.

Field elements are plain hashable Python values (Fraction, int, or tuple
of ints); the field object supplies the arithmetic.  Matrices and
polynomials stay ordinary containers that can be compared, hashed and
serialized without wrapper objects.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class Rationals:
    """The field of rational numbers; elements are Fraction."""

    name = "rational"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        return Fraction(1) / x

    def is_zero(self, x) -> bool:
        return x == 0

    def from_int(self, n: int):
        return Fraction(n)

    def random(self, rng, height: int = 100):
        # integer coefficients keep arithmetic growth bounded
        return Fraction(rng.randint(-height, height))

    def coeff_to_str(self, x) -> str:
        return f"{x.numerator}/{x.denominator}"

    def coeff_from_str(self, s: str):
        return Fraction(s)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = Rationals()


@dataclass(frozen=True)
class PrimeField:
    """F_p for an odd prime p; elements are ints in [0, p)."""

    p: int

    def __post_init__(self):
        if self.p <= 2 or not is_prime(self.p):
            raise ValueError(f"prime field needs an odd prime, got {self.p}")

    name = "prime"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero in prime field")
        return pow(x, -1, self.p)

    def is_zero(self, x) -> bool:
        return x % self.p == 0

    def from_int(self, n: int):
        return n % self.p

    def random(self, rng):
        return rng.randrange(self.p)

    def coeff_to_str(self, x) -> str:
        return str(x % self.p)

    def coeff_from_str(self, s: str):
        return int(s) % self.p

    def __repr__(self):
        return f"GF({self.p})"


@dataclass(frozen=True)
class ExtensionField:
    """F_p[x]/(modulus), modulus irreducible; elements are coefficient tuples.

    Tuples have fixed length deg(modulus), little-endian.  Used for
    evaluating polynomials at places of P^1 that are not rational over
    the prime field.
    """

    p: int
    modulus: tuple  # little-endian, monic, length deg+1

    def __post_init__(self):
        if len(self.modulus) < 2 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of positive degree")

    name = "extension"

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def zero(self):
        return (0,) * self.degree

    @property
    def one(self):
        return (1,) + (0,) * (self.degree - 1)

    @property
    def generator(self):
        """The class of x, a root of the modulus."""
        if self.degree == 1:
            # x = -c0 in F_p
            return ((-self.modulus[0]) % self.p,)
        return (0, 1) + (0,) * (self.degree - 2)

    def add(self, x, y):
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def sub(self, x, y):
        return tuple((a - b) % self.p for a, b in zip(x, y))

    def neg(self, x):
        return tuple((-a) % self.p for a in x)

    def mul(self, x, y):
        p, d = self.p, self.degree
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        prod[i + j] = (prod[i + j] + a * b) % p
        # reduce modulo the (monic) modulus
        for i in range(2 * d - 2, d - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(len(self.modulus) - 1):
                    prod[i - self.degree + j] = (
                        prod[i - self.degree + j] - c * self.modulus[j]
                    ) % p
        return tuple(prod[:d])

    def inv(self, x):
        # extended Euclid in F_p[t] against the modulus
        from . import polyring

        fp = PrimeField(self.p)
        g, s, _ = polyring.poly_ext_gcd(fp, tuple(x), self.modulus)
        if polyring.poly_degree(g) != 0:
            raise ZeroDivisionError("element not invertible")
        c = fp.inv(g[0])
        s = polyring.poly_scale(fp, s, c)
        s = s[: self.degree] + (0,) * (self.degree - len(s))
        return tuple(s)

    def is_zero(self, x) -> bool:
        return all(a % self.p == 0 for a in x)

    def from_int(self, n: int):
        return (n % self.p,) + (0,) * (self.degree - 1)

    def random(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.degree))

    def __repr__(self):
        return f"GF({self.p}^{self.degree})"
