"""Univariate polynomials over an exact field, plus binary forms.

Polynomials are little-endian coefficient tuples with no trailing zeros
(the zero polynomial is the empty tuple).  Binary forms of degree d are
tuples of length d+1: entry i is the coefficient of X^i * Y^(d-i).

Includes gcds, evaluation, and full factorization over a prime field
(squarefree / distinct-degree / Cantor-Zassenhaus equal-degree splitting,
with a rng seeded from the input for reproducibility).
"""
from __future__ import annotations

import random

from .fields import PrimeField


# ---------------------------------------------------------------- dense polys


def poly_trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_normalize(F, coeffs):
    coeffs = list(coeffs)
    while coeffs and F.is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def poly_degree(f) -> int:
    """Degree, with deg(0) = -1."""
    return len(f) - 1


def poly_add(F, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else F.zero
        b = g[i] if i < len(g) else F.zero
        out.append(F.add(a, b))
    return poly_normalize(F, out)


def poly_scale(F, f, c):
    if F.is_zero(c):
        return ()
    return poly_normalize(F, [F.mul(a, c) for a in f])


def poly_mul(F, f, g):
    if not f or not g:
        return ()
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if F.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return poly_normalize(F, out)


def poly_divmod(F, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = F.inv(g[-1])
    rem = list(f)
    if len(f) < len(g):
        return (), poly_normalize(F, rem)
    quo = [F.zero] * (len(f) - len(g) + 1)
    for i in range(len(f) - len(g), -1, -1):
        c = rem[i + len(g) - 1]
        if F.is_zero(c):
            continue
        q = F.mul(c, lead_inv)
        quo[i] = q
        for j, b in enumerate(g):
            rem[i + j] = F.sub(rem[i + j], F.mul(q, b))
    return poly_normalize(F, quo), poly_normalize(F, rem)


def poly_mod(F, f, g):
    return poly_divmod(F, f, g)[1]


def poly_monic(F, f):
    if not f:
        return ()
    return poly_scale(F, f, F.inv(f[-1]))


def poly_gcd(F, f, g):
    a, b = f, g
    while b:
        a, b = b, poly_mod(F, a, b)
    return poly_monic(F, a)


def poly_ext_gcd(F, f, g):
    """Return (gcd, s, t) with s*f + t*g = gcd."""
    r0, r1 = f, g
    s0, s1 = (F.one,), ()
    t0, t1 = (), (F.one,)
    while r1:
        q, r = poly_divmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_add(F, s0, poly_scale(F, poly_mul(F, q, s1), F.neg(F.one)))
        t0, t1 = t1, poly_add(F, t0, poly_scale(F, poly_mul(F, q, t1), F.neg(F.one)))
    return r0, s0, t0


def poly_eval(F, f, x):
    acc = F.zero
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_derivative(F, f):
    out = [F.mul(f[i], F.from_int(i)) for i in range(1, len(f))]
    return poly_normalize(F, out)


def poly_pow_mod(F, f, n: int, mod):
    result = (F.one,)
    base = poly_mod(F, f, mod)
    while n > 0:
        if n & 1:
            result = poly_mod(F, poly_mul(F, result, base), mod)
        base = poly_mod(F, poly_mul(F, base, base), mod)
        n >>= 1
    return result


# ------------------------------------------------- factorization over F_p


def _squarefree_parts(F: PrimeField, f):
    """Yield (squarefree factor, multiplicity) over F_p; f monic, deg >= 1."""
    p = F.p
    e = 1  # accumulated p-power multiplicity
    while poly_degree(f) > 0:
        df = poly_derivative(F, f)
        if not df:
            # f(x) = u(x^p); p-th roots of coefficients are identities in F_p
            f = poly_normalize(F, [f[i] for i in range(0, len(f), p)])
            e *= p
            continue
        c = poly_gcd(F, f, df)
        w, _ = poly_divmod(F, f, c)
        i = 1
        while poly_degree(w) > 0:
            y = poly_gcd(F, w, c)
            z, _ = poly_divmod(F, w, y)
            if poly_degree(z) > 0:
                yield z, i * e
            w = y
            c, _ = poly_divmod(F, c, y)
            i += 1
        f = c  # leftover factors have multiplicity divisible by p


def _distinct_degree(F: PrimeField, f):
    """Split a squarefree monic f into products of same-degree irreducibles."""
    out = []
    x = (F.zero, F.one)
    h = x
    d = 0
    rest = f
    while poly_degree(rest) > 2 * d:
        d += 1
        h = poly_pow_mod(F, h, F.p, rest)
        g = poly_gcd(F, rest, poly_add(F, h, poly_scale(F, x, F.neg(F.one))))
        if poly_degree(g) > 0:
            out.append((g, d))
            rest, _ = poly_divmod(F, rest, g)
            h = poly_mod(F, h, rest)
    if poly_degree(rest) > 0:
        out.append((rest, poly_degree(rest)))
    return out


def _equal_degree_split(F: PrimeField, f, d: int, rng: random.Random):
    """Cantor-Zassenhaus: f squarefree monic, all factors of degree d."""
    n = poly_degree(f)
    if n == d:
        return [f]
    exponent = (F.p**d - 1) // 2
    while True:
        a = poly_normalize(F, [rng.randrange(F.p) for _ in range(n)])
        if poly_degree(a) < 1:
            continue
        g = poly_gcd(F, a, f)
        if 0 < poly_degree(g) < n:
            left, right = g, poly_divmod(F, f, g)[0]
        else:
            b = poly_pow_mod(F, a, exponent, f)
            b = poly_add(F, b, poly_scale(F, (F.one,), F.neg(F.one)))
            g = poly_gcd(F, b, f)
            if not (0 < poly_degree(g) < n):
                continue
            left, right = g, poly_divmod(F, f, g)[0]
        return _equal_degree_split(F, left, d, rng) + _equal_degree_split(
            F, right, d, rng
        )


def poly_factor(F: PrimeField, f):
    """Full factorization of f over F_p: list of (monic irreducible, mult).

    Deterministic: the internal rng is seeded from the coefficients.
    """
    if poly_degree(f) < 1:
        return []
    rng = random.Random(("factor", F.p) + tuple(f))
    f = poly_monic(F, f)
    factors = []
    for sqfree, mult in _squarefree_parts(F, f):
        sqfree = poly_monic(F, sqfree)
        for block, d in _distinct_degree(F, sqfree):
            for irred in _equal_degree_split(F, block, d, rng):
                factors.append((poly_monic(F, irred), mult))
    factors.sort(key=lambda fm: (poly_degree(fm[0]), fm[0]))
    return factors


# ------------------------------------------------------------- binary forms


def form_degree(form) -> int:
    return len(form) - 1


def form_is_zero(F, form) -> bool:
    return all(F.is_zero(c) for c in form)


def form_eval(F, form, x, y):
    """Evaluate sum_i c_i X^i Y^(d-i) at (x, y)."""
    d = form_degree(form)
    acc = F.zero
    xp = F.one
    ypows = [F.one]
    for _ in range(d):
        ypows.append(F.mul(ypows[-1], y))
    for i, c in enumerate(form):
        if not F.is_zero(c):
            acc = F.add(acc, F.mul(c, F.mul(xp, ypows[d - i])))
        xp = F.mul(xp, x)
    return acc


def form_gcd(F, forms):
    """Gcd of binary forms over a field, as a binary form.

    Returns None when every form is zero (every point of P^1 is then a
    common zero).  Dehomogenizing at t = X/Y turns each form into a
    polynomial; only the Y-power (root at infinity) needs separate
    bookkeeping, since X-powers survive as a factor of t.
    """
    forms = [form for form in forms if not form_is_zero(F, form)]
    if not forms:
        return None
    vy = min(form_degree(f) - poly_degree(poly_normalize(F, f)) for f in forms)
    g = ()
    for form in forms:
        g = poly_gcd(F, g, poly_normalize(F, form))
    # homogenize g back to its own degree, then multiply by Y^vy
    return tuple(g) + (F.zero,) * vy


class RatFuncField:
    """F_p(t): rational functions as reduced (num, den) pairs with monic
    denominator.  Only needed for generic-fibre gcd computations."""

    def __init__(self, base: PrimeField):
        self.base = base

    def __eq__(self, other):
        return isinstance(other, RatFuncField) and self.base == other.base

    def __hash__(self):
        return hash(("ratfunc", self.base))

    def _reduce(self, num, den):
        F = self.base
        if not num:
            return ((), (F.one,))
        g = poly_gcd(F, num, den)
        if poly_degree(g) > 0:
            num, _ = poly_divmod(F, num, g)
            den, _ = poly_divmod(F, den, g)
        c = F.inv(den[-1])
        return (poly_scale(F, num, c), poly_scale(F, den, c))

    @property
    def zero(self):
        return ((), (self.base.one,))

    @property
    def one(self):
        return ((self.base.one,), (self.base.one,))

    def from_poly(self, num):
        return self._reduce(tuple(num), (self.base.one,))

    def add(self, x, y):
        F = self.base
        num = poly_add(
            F, poly_mul(F, x[0], y[1]), poly_mul(F, y[0], x[1])
        )
        return self._reduce(num, poly_mul(F, x[1], y[1]))

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def neg(self, x):
        return (poly_scale(self.base, x[0], self.base.neg(self.base.one)), x[1])

    def mul(self, x, y):
        F = self.base
        return self._reduce(poly_mul(F, x[0], y[0]), poly_mul(F, x[1], y[1]))

    def inv(self, x):
        if not x[0]:
            raise ZeroDivisionError("inverse of zero rational function")
        return self._reduce(x[1], x[0])

    def is_zero(self, x) -> bool:
        return not x[0]

    def from_int(self, n: int):
        return self.from_poly((self.base.from_int(n),))


def form_roots_places(F: PrimeField, form):
    """Places of P^1 where a nonzero binary form in (X, Y) vanishes.

    Returns a list of places: ("finite", irreducible poly phi) meaning the
    Galois orbit of points (x : 1) with phi(x) = 0, or ("infinity",) for
    the point (1 : 0).
    """
    d = form_degree(form)
    poly = poly_normalize(F, form)  # coefficient of X^i: a poly in x = X/Y
    places = []
    if poly_degree(poly) < d:
        places.append(("infinity",))
    for irred, _mult in poly_factor(F, poly):
        places.append(("finite", irred))
    return places
