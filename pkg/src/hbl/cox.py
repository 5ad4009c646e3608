"""Closed-form cohomology of line bundles on Sigma_e and monomial bases.

The Cox ring of Sigma_e has generators S0, S1, T0, T1 with Pic-degrees

    deg S0 = C0,  deg S1 = C0 + e*F,  deg T0 = deg T1 = F,

so a Laurent monomial S0^i S1^j T0^k T1^l has degree
((i+j)*C0, (k+l+e*j)*F).  Cohomology of O(a*C0 + b*F) is carried by the
four sign regions of the exponent vector:

    H0:  i, j, k, l >= 0
    H1:  i, j <= -1 and k, l >= 0   (section-negative region)
         or i, j >= 0 and k, l <= -1 (fibre-negative region)
    H2:  i, j, k, l <= -1

The dimension functions below are the closed forms of the pushforward to
P^1 (h0 of a sum of O_P1(b - k*e) twists, truncated at zero per summand);
basis() enumerates the matching monomials.  Multiplication by a global
section acts on a cohomology class by multiplying the monomial and
projecting back to the region, which is exact here because region
representatives can be chosen uniformly per sign pattern (validated
against the honest Cech computation in the engine tests).
"""
from __future__ import annotations

from dataclasses import dataclass

from .fields import QQ
from .pic import DivisorClass, Surface, canonical_class

Exponents = tuple[int, int, int, int]


@dataclass(frozen=True)
class CoxMonomial:
    """Laurent monomial S0^i S1^j T0^k T1^l."""

    i: int
    j: int
    k: int
    l: int

    def degree(self, s: Surface) -> DivisorClass:
        return DivisorClass(self.i + self.j, self.k + self.l + s.e * self.j)

    @property
    def exponents(self) -> Exponents:
        return (self.i, self.j, self.k, self.l)

    def sign_pattern(self) -> tuple[bool, bool, bool, bool]:
        return tuple(x >= 0 for x in self.exponents)


@dataclass(frozen=True)
class CoxPolynomial:
    """Finite sum of effective monomials of one fixed Pic-degree.

    Terms are kept sorted descending-lex on exponents with nonzero
    coefficients; instances are hashable and safe to share.
    """

    surface: Surface
    degree: DivisorClass
    terms: tuple[tuple[Exponents, object], ...]

    @staticmethod
    def make(s: Surface, degree: DivisorClass, coeffs: dict, field=QQ) -> "CoxPolynomial":
        items = []
        for exps, c in coeffs.items():
            if field.is_zero(c):
                continue
            m = CoxMonomial(*exps)
            if any(x < 0 for x in exps):
                raise ValueError(f"monomial {exps} is not a section")
            if m.degree(s) != degree:
                raise ValueError(
                    f"monomial {exps} has degree {m.degree(s)}, expected {degree}"
                )
            items.append((tuple(exps), c))
        items.sort(key=lambda t: t[0], reverse=True)
        return CoxPolynomial(s, degree, tuple(items))

    @staticmethod
    def zero(s: Surface, degree: DivisorClass) -> "CoxPolynomial":
        return CoxPolynomial(s, degree, ())

    @staticmethod
    def monomial(s: Surface, exps: Exponents, coeff, field=QQ) -> "CoxPolynomial":
        m = CoxMonomial(*exps)
        return CoxPolynomial.make(s, m.degree(s), {tuple(exps): coeff}, field)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return self.terms


def poly_add(field, f: CoxPolynomial, g: CoxPolynomial) -> CoxPolynomial:
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch {f.degree} + {g.degree}")
    out = dict(f.terms)
    for exps, c in g.terms:
        acc = field.add(out.get(exps, field.zero), c)
        if field.is_zero(acc):
            out.pop(exps, None)
        else:
            out[exps] = acc
    return CoxPolynomial.make(f.surface, f.degree, out, field)


def poly_scale(field, f: CoxPolynomial, c) -> CoxPolynomial:
    if field.is_zero(c):
        return CoxPolynomial.zero(f.surface, f.degree)
    return CoxPolynomial.make(
        f.surface, f.degree, {e: field.mul(x, c) for e, x in f.terms}, field
    )


def poly_mul(field, f: CoxPolynomial, g: CoxPolynomial) -> CoxPolynomial:
    out: dict = {}
    for e1, c1 in f.terms:
        for e2, c2 in g.terms:
            exps = tuple(x + y for x, y in zip(e1, e2))
            acc = field.add(out.get(exps, field.zero), field.mul(c1, c2))
            if field.is_zero(acc):
                out.pop(exps, None)
            else:
                out[exps] = acc
    return CoxPolynomial.make(f.surface, f.degree + g.degree, out, field)


# ------------------------------------------------------------ dimensions


def h0_dim(s: Surface, D: DivisorClass) -> int:
    a, b = D.a, D.b
    if a < 0:
        return 0
    return sum(max(0, b - k * s.e + 1) for k in range(a + 1))


def h1_dim(s: Surface, D: DivisorClass) -> int:
    a, b = D.a, D.b
    if a == -1:
        return 0
    if a <= -2:
        return sum(max(0, k * s.e + b + 1) for k in range(1, -a))
    return sum(max(0, k * s.e - b - 1) for k in range(a + 1))


def h2_dim(s: Surface, D: DivisorClass) -> int:
    return h0_dim(s, canonical_class(s) - D)


def hq_dims(s: Surface, D: DivisorClass) -> tuple[int, int, int]:
    return (h0_dim(s, D), h1_dim(s, D), h2_dim(s, D))


# ------------------------------------------------------------- bases


@dataclass(frozen=True)
class CohomologySpace:
    """Monomial basis of H^q(O(D)), descending-lex on exponents."""

    q: int
    D: DivisorClass
    basis: tuple[CoxMonomial, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _region_monomials(s: Surface, D: DivisorClass, q: int) -> list[Exponents]:
    a, b, e = D.a, D.b, s.e
    out: list[Exponents] = []
    if q == 0:
        if a >= 0:
            for j in range(a + 1):
                m = b - e * j
                for k in range(m + 1):
                    out.append((a - j, j, k, m - k))
    elif q == 1:
        if a <= -2:
            # section-negative region: i, j <= -1, k, l >= 0
            for j in range(a + 1, 0):
                m = b - e * j
                for k in range(m + 1):
                    out.append((a - j, j, k, m - k))
        elif a >= 0:
            # fibre-negative region: i, j >= 0, k, l <= -1
            for j in range(a + 1):
                m = b - e * j
                for k in range(m + 1, 0):
                    out.append((a - j, j, k, m - k))
    elif q == 2:
        if a <= -2:
            for j in range(a + 1, 0):
                m = b - e * j
                for k in range(m + 1, 0):
                    out.append((a - j, j, k, m - k))
    else:
        raise ValueError(f"q must be 0, 1 or 2, got {q}")
    out.sort(reverse=True)
    return out


def basis(s: Surface, D: DivisorClass, q: int) -> CohomologySpace:
    monomials = tuple(CoxMonomial(*e) for e in _region_monomials(s, D, q))
    space = CohomologySpace(q, D, monomials)
    assert space.dim == hq_dims(s, D)[q], "basis size disagrees with closed form"
    return space


# --------------------------------------------------------- induced maps


@dataclass(frozen=True)
class LinearMap:
    """Matrix of a map between cohomology spaces in basis() order;
    matrix[i][j] is the coefficient of target basis element i in the
    image of source element j."""

    src_dim: int
    tgt_dim: int
    matrix: tuple

    def column(self, j: int):
        return [self.matrix[i][j] for i in range(self.tgt_dim)]


def induced_map(
    s: Surface,
    q: int,
    D_src: DivisorClass,
    D_tgt: DivisorClass,
    mult: CoxPolynomial,
    field=QQ,
) -> LinearMap:
    """Multiplication H^q(O(D_src)) -> H^q(O(D_tgt)) by a section of
    O(D_tgt - D_src).  Monomial products falling outside the q-region
    of the target are coboundaries and map to zero."""
    if mult.degree != D_tgt - D_src:
        raise ValueError(
            f"multiplier degree {mult.degree} != {D_tgt - D_src}"
        )
    src = _region_monomials(s, D_src, q)
    tgt = _region_monomials(s, D_tgt, q)
    tgt_index = {m: i for i, m in enumerate(tgt)}
    matrix = [[field.zero for _ in src] for _ in tgt]
    for jcol, m in enumerate(src):
        for exps, c in mult.terms:
            prod = tuple(x + y for x, y in zip(m, exps))
            row = tgt_index.get(prod)
            if row is not None:
                matrix[row][jcol] = field.add(matrix[row][jcol], c)
    return LinearMap(len(src), len(tgt), tuple(tuple(r) for r in matrix))


def hom_and_ext_dims(
    s: Surface, src: list[DivisorClass], tgt: list[DivisorClass]
) -> tuple[int, int, int]:
    """(hom, ext1, ext2) between sums of line bundles: sums of h^q of the
    pairwise differences."""
    hom = ext1 = ext2 = 0
    for Ls in src:
        for Lt in tgt:
            d = Lt - Ls
            hom += h0_dim(s, d)
            ext1 += h1_dim(s, d)
            ext2 += h2_dim(s, d)
    return hom, ext1, ext2
