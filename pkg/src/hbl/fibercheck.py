"""Exact verification that a matrix of sections has full rank at every
point of Sigma_e over the algebraic closure.

The degeneracy locus is where all maximal minors vanish.  Matrix entries
here always have section-degree zero or one (the fibre coordinate pair
S0, S1 appears at most linearly), so on each ruling fibre every minor is
a binary form in (S0, S1) whose coefficients are binary forms in the base
coordinates (T0, T1).  That gives a complete elimination strategy:

  1. minors that are constant along fibres cut out the candidate bad
     fibres (roots of their gcd as forms in T);
  2. on each candidate fibre (over the extension field where it lives)
     the remaining minors have a common zero iff their gcd as forms in S
     is nonconstant.

When every fibre-constant minor vanishes identically, candidate fibres
come instead from resultants of pairs of minors over F_p[t] (plus the
fibres where individual minors vanish identically, and the fibre at
infinity).  Over the rationals the check runs on reductions modulo
auxiliary primes: an empty degeneracy locus modulo one good prime forces
an empty locus in characteristic zero.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import cox
from .fields import ExtensionField, PrimeField, QQ, Rationals
from .pic import Surface
from . import polyring
from .polyring import (
    RatFuncField,
    form_degree,
    form_gcd,
    form_roots_places,
    poly_degree,
    poly_normalize,
)

AUXILIARY_PRIMES = (10007, 10009, 10039)


@dataclass
class CheckResult:
    ok: bool
    reason: str = ""
    witness: dict | None = dc_field(default=None)

    def __bool__(self) -> bool:
        return self.ok


class ExactCheckInconclusive(RuntimeError):
    """The elimination strategy cannot separate the candidate fibres
    (every pair of minors has identically vanishing resultant).  Not
    reachable for generically sampled matrices."""


def _matrix_det(s: Surface, field, rows) -> cox.CoxPolynomial:
    """Determinant of a square matrix of CoxPolynomial, by expansion."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = None
    for j in range(n):
        minor_rows = [r[:j] + r[j + 1 :] for r in rows[1:]]
        sub = _matrix_det(s, field, minor_rows)
        term = cox.poly_mul(field, rows[0][j], sub)
        if j % 2 == 1:
            term = cox.poly_scale(field, term, field.neg(field.one))
        acc = term if acc is None else cox.poly_add(field, acc, term)
    return acc


def _maximal_minors(s: Surface, field, matrix, k: int):
    nrows, ncols = len(matrix), len(matrix[0])
    minors = []
    for rset in itertools.combinations(range(nrows), k):
        for cset in itertools.combinations(range(ncols), k):
            sub = [[matrix[r][c] for c in cset] for r in rset]
            minors.append(_matrix_det(s, field, sub))
    return minors


def _s_degree(poly: cox.CoxPolynomial) -> int:
    return poly.degree.a


def _t_coefficient_forms(poly: cox.CoxPolynomial, field):
    """Split a minor into S-coefficients: a list indexed by the S0-power i
    of dicts {(k, l): coeff}; the S-degree is poly.degree.a."""
    sdeg = poly.degree.a
    out = [dict() for _ in range(sdeg + 1)]
    for (i, j, k, l), c in poly.terms:
        assert i + j == sdeg
        out[i][(k, l)] = c
    return out


def _t_form_tuple(tdict: dict, field):
    """Dense binary-form tuple in (T0, T1) from sparse {(k,l): coeff}."""
    if not tdict:
        return None
    deg = next(iter(tdict))
    deg = deg[0] + deg[1]
    out = [field.zero] * (deg + 1)
    for (k, l), c in tdict.items():
        assert k + l == deg
        out[k] = field.add(out[k], c)
    form = tuple(out)
    return None if polyring.form_is_zero(field, form) else form


def _place_field_and_point(base: PrimeField, place):
    if place[0] == "infinity":
        K = ExtensionField(base.p, (0, 1))
        return K, (K.one, K.zero)
    K = ExtensionField(base.p, place[1])
    return K, (K.generator, K.one)


def _eval_minor_on_fibre(minor: cox.CoxPolynomial, base: PrimeField, K, point):
    """Binary S-form of the minor on the fibre at `point` (over K)."""
    t0, t1 = point
    sdeg = minor.degree.a
    coeffs = [K.zero] * (sdeg + 1)
    for (i, _j, k, l), c in minor.terms:
        val = K.from_int(c)
        for _ in range(k):
            val = K.mul(val, t0)
        for _ in range(l):
            val = K.mul(val, t1)
        coeffs[i] = K.add(coeffs[i], val)
    return tuple(coeffs)


def _check_candidate_fibres(minors, base: PrimeField, places):
    for place in places:
        K, point = _place_field_and_point(base, place)
        forms = [_eval_minor_on_fibre(m, base, K, point) for m in minors]
        g = form_gcd(K, forms)
        if g is None or form_degree(g) > 0:
            return CheckResult(
                False,
                "rank drops on a fibre",
                witness={"fibre": place, "s_form_gcd": g},
            )
    return CheckResult(True)


def _resultant_t(base: PrimeField, sforms_a, sforms_b):
    """Resultant in s of two S-forms with F_p[t]-coefficients (t = T0/T1
    dehomogenized); each input is a list of coefficient polys by S0-power.
    Identically-zero leading coefficients are trimmed first (fibres where
    a common zero escapes to S1 = 0 are handled by the caller through the
    leading-coefficient candidates)."""
    sforms_a = list(sforms_a)
    sforms_b = list(sforms_b)
    while len(sforms_a) > 1 and not sforms_a[-1]:
        sforms_a.pop()
    while len(sforms_b) > 1 and not sforms_b[-1]:
        sforms_b.pop()
    m, n = len(sforms_a) - 1, len(sforms_b) - 1
    size = m + n
    if size == 0:
        return (base.one,)
    rows = []
    for i in range(n):
        row = [()] * size
        for j, c in enumerate(reversed(sforms_a)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [()] * size
        for j, c in enumerate(reversed(sforms_b)):
            row[i + j] = c
        rows.append(row)
    return _poly_det(base, rows)


def _poly_det(base: PrimeField, rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = ()
    for j in range(n):
        if not rows[0][j]:
            continue
        sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = polyring.poly_mul(base, rows[0][j], _poly_det(base, sub))
        if j % 2 == 1:
            term = polyring.poly_scale(base, term, base.neg(base.one))
        acc = polyring.poly_add(base, acc, term)
    return acc


def _dehomogenized_coeffs(minor: cox.CoxPolynomial, base: PrimeField):
    """Coefficient polys in t = T0/T1 by S0-power (T1 := 1)."""
    split = _t_coefficient_forms(minor, base)
    out = []
    for tdict in split:
        coeffs: dict[int, object] = {}
        for (k, _l), c in tdict.items():
            coeffs[k] = base.add(coeffs.get(k, base.zero), c)
        deg = max(coeffs) if coeffs else -1
        out.append(poly_normalize(base, [coeffs.get(i, base.zero) for i in range(deg + 1)]))
    return out


def full_rank_everywhere(s: Surface, field, matrix, k: int) -> CheckResult:
    """Does the matrix of sections have rank k at every geometric point?

    Entries must have section-degree (C0-coefficient) zero or one.  Over
    the rationals the verdict comes from reductions modulo auxiliary
    primes; emptiness of the degeneracy locus modulo one good prime is
    conclusive, and a locus that persists modulo two primes is reported
    as a genuine failure with the modular witness.
    """
    for row in matrix:
        for entry in row:
            if entry.degree.a not in (0, 1):
                raise ValueError("entries must be at most linear in the fibre pair")
    if isinstance(field, Rationals):
        failure = None
        for p in AUXILIARY_PRIMES[:2]:
            reduced, ok = _reduce_matrix_mod_p(s, matrix, p)
            if not ok:
                continue
            res = full_rank_everywhere(s, PrimeField(p), reduced, k)
            if res.ok:
                return res
            failure = res
            failure.witness = dict(failure.witness or {}, reduction_prime=p)
        if failure is None:
            raise ExactCheckInconclusive("no auxiliary prime avoids denominators")
        return failure

    base = field
    minors = _maximal_minors(s, base, matrix, k)
    nonzero = [m for m in minors if not m.is_zero()]
    if not nonzero:
        return CheckResult(
            False, "all maximal minors vanish identically", witness={"fibre": "all"}
        )
    pure = [m for m in minors if _s_degree(m) == 0 and not m.is_zero()]
    if pure:
        forms = [_t_form_tuple({(kk, ll): c for (_i, _j, kk, ll), c in m.terms}, base) for m in pure]
        G = form_gcd(base, [f for f in forms if f is not None])
        if form_degree(G) == 0:
            return CheckResult(True)
        return _check_candidate_fibres(minors, base, form_roots_places(base, G))

    # no fibre-constant minor survives: eliminate via the function field
    ff = RatFuncField(base)
    ff_forms = []
    for m in nonzero:
        coeffs = _dehomogenized_coeffs(m, base)
        ff_forms.append(tuple(ff.from_poly(c) for c in coeffs))
    g = form_gcd(ff, ff_forms)
    if g is None or form_degree(g) > 0:
        return CheckResult(
            False,
            "rank drops along every fibre (generic common factor)",
            witness={"generic_s_gcd_degree": form_degree(g) if g else None},
        )
    candidate_roots: set = set()
    places = [("infinity",)]
    dehoms = [_dehomogenized_coeffs(m, base) for m in nonzero]
    for coeffs in dehoms:
        # fibres where this minor vanishes identically in s
        g_coeff = ()
        for c in coeffs:
            g_coeff = polyring.poly_gcd(base, g_coeff, c)
        for irred, _ in polyring.poly_factor(base, g_coeff):
            candidate_roots.add(irred)
        # fibres where the leading s-coefficient drops (resultant blind spot)
        lead = coeffs[-1]
        for irred, _ in polyring.poly_factor(base, lead):
            candidate_roots.add(irred)
    found_pair = False
    for ca, cb in itertools.combinations(dehoms, 2):
        R = _resultant_t(base, ca, cb)
        if R:
            found_pair = True
            for irred, _ in polyring.poly_factor(base, R):
                candidate_roots.add(irred)
    if not found_pair and len(dehoms) > 1:
        raise ExactCheckInconclusive(
            "all pairwise resultants vanish identically"
        )
    places.extend(("finite", irred) for irred in sorted(candidate_roots))
    return _check_candidate_fibres(minors, base, places)


def _reduce_matrix_mod_p(s: Surface, matrix, p: int):
    """Reduce a rational matrix of CoxPolynomial mod p; fails if any
    denominator vanishes mod p."""
    F = PrimeField(p)
    out = []
    for row in matrix:
        new_row = []
        for entry in row:
            coeffs = {}
            for exps, c in entry.terms:
                c = Fraction(c)
                if c.denominator % p == 0:
                    return None, False
                coeffs[exps] = (c.numerator * pow(c.denominator, -1, p)) % p
            new_row.append(cox.CoxPolynomial.make(s, entry.degree, coeffs, F))
        out.append(new_row)
    return out, True
