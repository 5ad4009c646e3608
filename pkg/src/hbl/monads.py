"""The parameter space of rank-two monads on Sigma_e (e >= 1).

A point consists of four matrix blocks

    a1 : 2x(e)      over H0(O(C0+eF))        a2 : (e+2)x(e)  over H0(O(F))
    b1 : 2x2        over H0(O(F))            b2 : 2x(e+2)    over H0(O(C0+eF))

subject to b1*a1 + b2*a2 = 0, with a = (a1; a2) fibrewise injective and
b = (b1 | b2) fibrewise surjective.  The middle cohomology of

    0 -> O(-C0-(e+1)F)^e -> O(-F)^2 + O(-C0-eF)^(e+2) -> O^2 -> 0

is then a rank-two bundle with c1 = K and c2 = 4 whose twist by C0+F has
no sections.  This module samples such points over exact fields, verifies
the monad conditions, and classifies the resulting bundles (cohomology
tables, splitting invariants d and r, residual length, priority).
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass

from . import cech, cox, linalg, pic
from .cech import ComplexOfSums, P1Poly, P1Space, SigmaSpace
from .cox import CoxPolynomial
from .fibercheck import CheckResult, full_rank_everywhere
from .fields import PrimeField, QQ, Rationals
from .pic import ChernData, DivisorClass, Surface

DEFAULT_PRIME = 10007
MONAD_SCHEMA_VERSION = 1
R_SCAN_TOP = 10
R_SCAN_HARD_FLOOR = -30
D_SCAN_TOP = 8
RATIONAL_HEIGHT = 100


class SamplingError(RuntimeError):
    """Monad sampling exhausted its retry budget; carries diagnostics."""

    def __init__(self, message: str, diagnostics: dict):
        super().__init__(message)
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class MonadShape:
    """Term data of the standard monad shape at parameter e."""

    e: int

    @property
    def surface(self) -> Surface:
        return Surface(self.e)

    @property
    def A(self) -> tuple:
        return (DivisorClass(-1, -(self.e + 1)),) * self.e

    @property
    def B(self) -> tuple:
        return (DivisorClass(0, -1),) * 2 + (DivisorClass(-1, -self.e),) * (
            self.e + 2
        )

    @property
    def C(self) -> tuple:
        return (DivisorClass(0, 0),) * 2

    # entry degrees of the four blocks
    @property
    def deg_a1(self) -> DivisorClass:
        return DivisorClass(1, self.e)

    @property
    def deg_a2(self) -> DivisorClass:
        return DivisorClass(0, 1)

    deg_b1 = deg_a2
    deg_b2 = deg_a1

    @property
    def deg_mu(self) -> DivisorClass:
        return DivisorClass(1, self.e + 1)

    def section_dims(self) -> tuple[int, int, int, int]:
        """h0 of the entry spaces of (a1, a2, b1, b2)."""
        s = self.surface
        return (
            cox.h0_dim(s, self.deg_a1),
            cox.h0_dim(s, self.deg_a2),
            cox.h0_dim(s, self.deg_b1),
            cox.h0_dim(s, self.deg_b2),
        )


def monad_shape(e: int) -> MonadShape:
    if e < 1:
        raise ValueError(
            "the monad parameter space needs e >= 1; on the product quadric "
            "(e = 0) these bundles have a different description"
        )
    return MonadShape(e)


@dataclass
class MonadPoint:
    shape: MonadShape
    field: object
    a1: list
    a2: list
    b1: list
    b2: list
    seed: int | None = None

    def __post_init__(self):
        sh = self.shape
        e = sh.e
        _check_block(self.a1, 2, e, sh.deg_a1, "a1")
        _check_block(self.a2, e + 2, e, sh.deg_a2, "a2")
        _check_block(self.b1, 2, 2, sh.deg_b1, "b1")
        _check_block(self.b2, 2, e + 2, sh.deg_b2, "b2")

    @property
    def surface(self) -> Surface:
        return self.shape.surface

    def complex(self) -> ComplexOfSums:
        """The monad as a three-term complex at positions (-2, -1, 0)."""
        sh = self.shape
        a = [list(row) for row in self.a1] + [list(row) for row in self.a2]
        b = [list(r1) + list(r2) for r1, r2 in zip(self.b1, self.b2)]
        return ComplexOfSums(
            SigmaSpace(self.surface),
            self.field,
            {-2: sh.A, -1: sh.B, 0: sh.C},
            {-2: a, -1: b},
        )


def _check_block(block, nrows, ncols, degree, name):
    if len(block) != nrows or any(len(row) != ncols for row in block):
        raise ValueError(f"block {name} must be {nrows}x{ncols}")
    for row in block:
        for entry in row:
            if entry.degree != degree:
                raise ValueError(
                    f"block {name} entry has degree {entry.degree}, expected {degree}"
                )


def mu(m: MonadPoint):
    """The quadratic map value b1*a1 + b2*a2, a 2xe matrix of sections of
    O(C0+(e+1)F)."""
    return mu_blocks(m.shape, m.field, m.a1, m.a2, m.b1, m.b2)


def mu_blocks(shape: MonadShape, field, a1, a2, b1, b2):
    s = shape.surface
    e = shape.e
    out = []
    for r in range(2):
        row = []
        for c in range(e):
            acc = CoxPolynomial.zero(s, shape.deg_mu)
            for k in range(2):
                acc = cox.poly_add(field, acc, cox.poly_mul(field, b1[r][k], a1[k][c]))
            for k in range(e + 2):
                acc = cox.poly_add(field, acc, cox.poly_mul(field, b2[r][k], a2[k][c]))
            row.append(acc)
        out.append(row)
    return out


def mu_is_zero(m: MonadPoint) -> bool:
    return all(entry.is_zero() for row in mu(m) for entry in row)


# ----------------------------------------------------------------- sampling


def _section_basis(s: Surface, D: DivisorClass):
    return cox._region_monomials(s, D, 0)


def _random_poly(s, D, field, rng):
    coeffs = {}
    for exps in _section_basis(s, D):
        if isinstance(field, Rationals):
            c = field.random(rng, RATIONAL_HEIGHT)
        else:
            c = field.random(rng)
        if not field.is_zero(c):
            coeffs[exps] = c
    return CoxPolynomial.make(s, D, coeffs, field)


def _m2_basis_slots(shape: MonadShape):
    """Coordinates of the right-hand block space: (block, row, col,
    exponent tuple) in a fixed order, b1 block first."""
    s = shape.surface
    slots = []
    for r in range(2):
        for c in range(2):
            for exps in _section_basis(s, shape.deg_b1):
                slots.append(("b1", r, c, exps))
    for r in range(2):
        for c in range(shape.e + 2):
            for exps in _section_basis(s, shape.deg_b2):
                slots.append(("b2", r, c, exps))
    return slots


def _m1_basis_slots(shape: MonadShape):
    s = shape.surface
    slots = []
    for r in range(2):
        for c in range(shape.e):
            for exps in _section_basis(s, shape.deg_a1):
                slots.append(("a1", r, c, exps))
    for r in range(shape.e + 2):
        for c in range(shape.e):
            for exps in _section_basis(s, shape.deg_a2):
                slots.append(("a2", r, c, exps))
    return slots


def _m3_index(shape: MonadShape):
    s = shape.surface
    basis = _section_basis(s, shape.deg_mu)
    index = {}
    for r in range(2):
        for c in range(shape.e):
            for exps in basis:
                index[(r, c, exps)] = len(index)
    return index


def _mu_column_for_b_slot(shape: MonadShape, field, a1, a2, slot, m3_index):
    """Image in M3-coordinates of a single b-basis vector against fixed a."""
    kind, r, k, exps = slot
    vec = [field.zero] * len(m3_index)
    a_block = a1 if kind == "b1" else a2
    for c in range(shape.e):
        poly = a_block[k][c]
        for e2, coeff in poly.terms:
            prod = tuple(x + y for x, y in zip(exps, e2))
            pos = m3_index[(r, c, prod)]
            vec[pos] = field.add(vec[pos], coeff)
    return vec


def _solve_b_space(shape: MonadShape, field, a1, a2):
    """Kernel basis of b -> b1*a1 + b2*a2 for fixed a, as coordinate
    vectors on the b-slot basis."""
    slots = _m2_basis_slots(shape)
    m3_index = _m3_index(shape)
    columns = [
        _mu_column_for_b_slot(shape, field, a1, a2, slot, m3_index) for slot in slots
    ]
    matrix = [[col[r] for col in columns] for r in range(len(m3_index))]
    return slots, linalg.nullspace(field, matrix, ncols=len(slots))


def _b_blocks_from_vector(shape: MonadShape, field, slots, vec):
    s = shape.surface
    coeffs_b1 = [[{} for _ in range(2)] for _ in range(2)]
    coeffs_b2 = [[{} for _ in range(shape.e + 2)] for _ in range(2)]
    for (kind, r, c, exps), val in zip(slots, vec):
        if field.is_zero(val):
            continue
        target = coeffs_b1 if kind == "b1" else coeffs_b2
        target[r][c][exps] = val
    b1 = [
        [CoxPolynomial.make(s, shape.deg_b1, coeffs_b1[r][c], field) for c in range(2)]
        for r in range(2)
    ]
    b2 = [
        [
            CoxPolynomial.make(s, shape.deg_b2, coeffs_b2[r][c], field)
            for c in range(shape.e + 2)
        ]
        for r in range(2)
    ]
    return b1, b2


def sample_monad(
    e: int,
    field=None,
    seed: int = 0,
    max_attempts: int = 16,
    inner_attempts: int = 12,
) -> MonadPoint:
    """Draw a valid monad point: random left-hand blocks, then a random
    element of the exact solution space of b1*a1 + b2*a2 = 0, retried
    until the fibrewise rank conditions hold.  Deterministic per seed."""
    shape = monad_shape(e)
    if field is None:
        field = PrimeField(DEFAULT_PRIME)
    s = shape.surface
    rng = random.Random(("monad-sample", e, seed))
    diagnostics = {"a_rejections": 0, "b_rejections": 0, "kernel_dims": []}
    for _ in range(max_attempts):
        a1 = [[_random_poly(s, shape.deg_a1, field, rng) for _ in range(e)] for _ in range(2)]
        a2 = [
            [_random_poly(s, shape.deg_a2, field, rng) for _ in range(e)]
            for _ in range(e + 2)
        ]
        a_stack = [list(r) for r in a1] + [list(r) for r in a2]
        if not full_rank_everywhere(s, field, a_stack, e):
            diagnostics["a_rejections"] += 1
            continue
        slots, kernel = _solve_b_space(shape, field, a1, a2)
        diagnostics["kernel_dims"].append(len(kernel))
        if len(kernel) < 16:
            diagnostics["a_rejections"] += 1
            continue
        for _ in range(inner_attempts):
            vec = [field.zero] * len(slots)
            for basis_vec in kernel:
                c = (
                    field.random(rng, RATIONAL_HEIGHT)
                    if isinstance(field, Rationals)
                    else field.random(rng)
                )
                if field.is_zero(c):
                    continue
                vec = [field.add(x, field.mul(c, y)) for x, y in zip(vec, basis_vec)]
            b1, b2 = _b_blocks_from_vector(shape, field, slots, vec)
            point = MonadPoint(shape, field, a1, a2, b1, b2, seed=seed)
            if not mu_is_zero(point):
                raise AssertionError("kernel solution fails the exact product check")
            b_full = [list(r1) + list(r2) for r1, r2 in zip(b1, b2)]
            if full_rank_everywhere(s, field, b_full, 2):
                return point
            diagnostics["b_rejections"] += 1
    raise SamplingError(
        f"no valid monad found for e={e}, seed={seed} after "
        f"{max_attempts} attempts",
        diagnostics,
    )


def is_monad(m: MonadPoint) -> CheckResult:
    """Exact validity check: the product vanishes, the left map is
    fibrewise injective and the right map fibrewise surjective at every
    geometric point."""
    if not mu_is_zero(m):
        return CheckResult(False, "b1*a1 + b2*a2 != 0")
    s = m.surface
    a_stack = [list(r) for r in m.a1] + [list(r) for r in m.a2]
    res_a = full_rank_everywhere(s, m.field, a_stack, m.shape.e)
    if not res_a:
        return CheckResult(False, "left map not fibrewise injective", res_a.witness)
    b_full = [list(r1) + list(r2) for r1, r2 in zip(m.b1, m.b2)]
    res_b = full_rank_everywhere(s, m.field, b_full, 2)
    if not res_b:
        return CheckResult(False, "right map not fibrewise surjective", res_b.witness)
    return CheckResult(True)


# ---------------------------------------------------------- Chern arithmetic


def _chern_mul(s: Surface, x, y):
    return (x[0] + y[0], x[1] + y[1] + pic.intersect(s, x[0], y[0]))


def _chern_inv(s: Surface, x):
    return (-x[0], pic.intersect(s, x[0], x[0]) - x[1])


def chern_of_terms(s: Surface, plus: list, minus: list) -> tuple:
    """Degree-two truncation of prod c(O(D)) over `plus` divided by the
    product over `minus`."""
    total = (DivisorClass(0, 0), 0)
    for D in plus:
        total = _chern_mul(s, total, (D, 0))
    for D in minus:
        total = _chern_mul(s, total, _chern_inv(s, (D, 0)))
    return total


def chern_from_terms(shape: MonadShape) -> ChernData:
    """Chern data of the middle cohomology from the term bundles alone."""
    s = shape.surface
    c1, c2 = chern_of_terms(s, list(shape.B), list(shape.A) + list(shape.C))
    rank = len(shape.B) - len(shape.A) - len(shape.C)
    return ChernData(rank, c1, c2)


def chern_of_complex(s: Surface, C: ComplexOfSums) -> ChernData:
    """Chern data of the cohomology sheaf at position -1: middle term
    contributes positively, outer terms are divided out."""
    plus = list(C.summands(-1))
    minus = list(C.summands(-2)) + list(C.summands(0))
    c1, c2 = chern_of_terms(s, plus, minus)
    rank = len(plus) - len(minus)
    return ChernData(rank, c1, c2)


# ------------------------------------------------------------ linearization


def jacobian_rank_mu(m: MonadPoint) -> int:
    """Rank of the derivative of (a, b) -> b1*a1 + b2*a2 at the point:
    (da, db) -> b*da + db*a, as a map between the block coordinate spaces
    and the target space of 2xe matrices of sections of O(C0+(e+1)F)."""
    shape, field = m.shape, m.field
    s = shape.surface
    m3_index = _m3_index(shape)
    columns = []
    # db-direction: same columns as the linear solve for b
    for slot in _m2_basis_slots(shape):
        columns.append(_mu_column_for_b_slot(shape, field, m.a1, m.a2, slot, m3_index))
    # da-direction: b * da for single-entry da
    for kind, r, c, exps in _m1_basis_slots(shape):
        vec = [field.zero] * len(m3_index)
        b_block = m.b1 if kind == "a1" else m.b2
        for i in range(2):
            poly = b_block[i][r]
            for e2, coeff in poly.terms:
                prod = tuple(x + y for x, y in zip(exps, e2))
                pos = m3_index[(i, c, prod)]
                vec[pos] = field.add(vec[pos], coeff)
        columns.append(vec)
    matrix = [[col[r] for col in columns] for r in range(len(m3_index))]
    return linalg.rank(field, matrix)


# -------------------------------------------------------- fibre restriction


def _fibre_points(field, n: int):
    """Deterministic list of n ruling fibres (t0 : t1)."""
    pts = [(1, 0), (0, 1)]
    k = 1
    while len(pts) < n:
        pts.append((1, k))
        k += 1
    return [(field.from_int(t0), field.from_int(t1)) for t0, t1 in pts[:n]]


def _restrict_poly(poly: CoxPolynomial, field, t0, t1) -> P1Poly:
    """Restrict a section to the fibre over (t0 : t1): substitute the base
    pair and keep the fibre pair, a binary form of degree = C0-degree."""
    coeffs: dict = {}
    for (i, j, k, l), c in poly.terms:
        val = c
        for _ in range(k):
            val = field.mul(val, t0)
        for _ in range(l):
            val = field.mul(val, t1)
        key = (i, j)
        acc = field.add(coeffs.get(key, field.zero), val)
        if field.is_zero(acc):
            coeffs.pop(key, None)
        else:
            coeffs[key] = acc
    return P1Poly.make(poly.degree.a, coeffs, field)


def restrict_to_fibre(m: MonadPoint, t0, t1) -> ComplexOfSums:
    """Restriction of the monad to a ruling fibre: a three-term complex on
    P^1 with terms O(-1)^e -> O^2 + O(-1)^(e+2) -> O^2."""
    e = m.shape.e
    field = m.field
    a = [list(r) for r in m.a1] + [list(r) for r in m.a2]
    b = [list(r1) + list(r2) for r1, r2 in zip(m.b1, m.b2)]
    a_res = [[_restrict_poly(p, field, t0, t1) for p in row] for row in a]
    b_res = [[_restrict_poly(p, field, t0, t1) for p in row] for row in b]
    return ComplexOfSums(
        P1Space(),
        field,
        {-2: (-1,) * e, -1: (0, 0) + (-1,) * (e + 2), 0: (0, 0)},
        {-2: a_res, -1: b_res},
    )


def _fibre_splitting_top(m: MonadPoint, t0, t1) -> int:
    """Largest k with h0(V|_fibre(-k)) nonzero: the top splitting degree
    of the restriction to one fibre."""
    C = restrict_to_fibre(m, t0, t1)
    for k in range(D_SCAN_TOP, -2, -1):
        h0 = cech.spectral_pages(C, -k).bundle_h()[0]
        if h0 > 0:
            return k
    raise AssertionError("restricted bundle has no sections down to O(1) twist")


def invariants_dr(m: MonadPoint, n_fibres: int = 7) -> tuple[int, int]:
    """Splitting invariants of the cohomology bundle.

    d: generic top splitting degree along ruling fibres, computed on
    n_fibres sample fibres with a minimum-plus-majority rule (the
    splitting jumps only on finitely many fibres).
    r: largest twist l with h0(V(-d*C0 - l*F)) nonzero, located by a
    downward scan; the residual-length bound caps the scan when d >= 0.
    """
    s = m.surface
    field = m.field
    values = [
        _fibre_splitting_top(m, t0, t1) for t0, t1 in _fibre_points(field, n_fibres)
    ]
    d = min(values)
    agreeing = sum(1 for v in values if v == d)
    if agreeing <= n_fibres // 2:
        raise RuntimeError(
            f"fibre splitting values {values} have no stable generic value; "
            "suspicious jumping locus"
        )
    cdata = chern_from_terms(m.shape)
    if d >= 0:
        # residual length at (d, r) is base + 2(1+d)*r, affine increasing
        # in r, so r cannot sit below the first value keeping it >= 0
        base = pic.ell_zeta(s, cdata, d, 0)
        step = 2 * (1 + d)
        scan_lo = -(base // step)
        scan_hi = max(R_SCAN_TOP, scan_lo)
    else:
        scan_lo = R_SCAN_HARD_FLOOR
        scan_hi = R_SCAN_TOP
    C = m.complex()
    for ell in range(scan_hi, scan_lo - 1, -1):
        h0 = cech.monad_bundle_h(s, C, DivisorClass(-d, -ell))[0]
        if h0 > 0:
            return d, ell
    raise RuntimeError(
        f"no sections found scanning twists down to {scan_lo}; "
        "the residual-length bound is violated"
    )


# ---------------------------------------------------------------- priority


@dataclass(frozen=True)
class PriorityResult:
    prioritary: bool
    witness_h0: int

    def __bool__(self) -> bool:
        return self.prioritary


def is_prioritary(s: Surface, c: ChernData, d: int, r: int) -> PriorityResult:
    """Numerical priority test for a rank-two bundle with invariants
    (d, r): the obstruction space is H0 of

        (2d - alpha - 2) C0 + (2r - beta - e - 1) F,

    where c1 = alpha C0 + beta F; the bundle is prioritary iff that h0
    vanishes.  For c1 = K and c2 = 4 this is h0(O(2d C0 + (2r+1) F)),
    zero exactly when d = -1 or r <= -1 on the valid range 2d >= alpha.
    """
    if c.rank != 2:
        raise ValueError(f"priority test needs rank 2, got {c.rank}")
    alpha, beta = c.c1.a, c.c1.b
    witness = DivisorClass(2 * d - alpha - 2, 2 * r - beta - s.e - 1)
    w = cox.h0_dim(s, witness)
    return PriorityResult(w == 0, w)


# ------------------------------------------------------------ classification


H_TABLE_TWISTS = (
    ("0", DivisorClass(0, 0)),
    ("-F", DivisorClass(0, -1)),
    ("-C0", DivisorClass(-1, 0)),
    ("-C0-F", DivisorClass(-1, -1)),
    ("C0+F", DivisorClass(1, 1)),
)


@dataclass
class BundleInvariants:
    c1: DivisorClass
    c2: int
    h_table: dict
    d: int
    r: int
    ell_zeta: int
    prioritary: bool
    vanishing: bool

    def to_json(self) -> dict:
        return {
            "c1": [self.c1.a, self.c1.b],
            "c2": self.c2,
            "h_table": {k: list(v) for k, v in self.h_table.items()},
            "d": self.d,
            "r": self.r,
            "ell_zeta": self.ell_zeta,
            "prioritary": self.prioritary,
            "vanishing": self.vanishing,
        }


def classify(m: MonadPoint, n_fibres: int = 7) -> BundleInvariants:
    """Full invariants of the cohomology bundle of a valid monad point."""
    s = m.surface
    cdata = chern_from_terms(m.shape)
    C = m.complex()
    h_table = {
        name: cech.monad_bundle_h(s, C, D) for name, D in H_TABLE_TWISTS
    }
    vanishing = h_table["C0+F"][0] == 0
    d, r = invariants_dr(m, n_fibres)
    ell = pic.ell_zeta(s, cdata, d, r)
    priority = is_prioritary(s, cdata, d, r)
    return BundleInvariants(
        cdata.c1, cdata.c2, h_table, d, r, ell, priority.prioritary, vanishing
    )


def beilinson_page(m: MonadPoint) -> cech.BeilinsonPage:
    return cech.beilinson_page(m.surface, m.complex())


# -------------------------------------------------- morphism-lemma conditions


def hom_vanishing_conditions(shape: MonadShape) -> dict:
    """The six Hom/Ext dimensions whose vanishing makes monad morphisms
    and bundle morphisms correspond bijectively; all six are zero for the
    standard shape at every e >= 1."""
    s = shape.surface
    A, B, C = list(shape.A), list(shape.B), list(shape.C)
    hom_BA, ext1_BA, _ = cox.hom_and_ext_dims(s, B, A)
    hom_CB, ext1_CB, _ = cox.hom_and_ext_dims(s, C, B)
    _, ext1_CA, ext2_CA = cox.hom_and_ext_dims(s, C, A)
    return {
        "hom_B_A": hom_BA,
        "hom_C_B": hom_CB,
        "h1_Bdual_A": ext1_BA,
        "h1_Cdual_B": ext1_CB,
        "h1_Cdual_A": ext1_CA,
        "h2_Cdual_A": ext2_CA,
    }


# -------------------------------------------------------- cotangent fixture


def euler_cotangent_fixture(s: Surface, field=QQ, verify: bool = True) -> ComplexOfSums:
    """Two-term complex whose kernel is the cotangent bundle: the toric
    coordinate-weighting map O(-F)^2 + O(-C0) + O(-C0-eF) -> O^2, with
    columns T0*(0,1), T1*(0,1), S0*(1,0), S1*(1,e)."""
    space = SigmaSpace(s)
    O = DivisorClass(0, 0)
    terms = {
        -1: (DivisorClass(0, -1), DivisorClass(0, -1), DivisorClass(-1, 0), DivisorClass(-1, -s.e)),
        0: (O, O),
    }
    one = field.one
    T0 = CoxPolynomial.monomial(s, (0, 0, 1, 0), one, field)
    T1 = CoxPolynomial.monomial(s, (0, 0, 0, 1), one, field)
    S0 = CoxPolynomial.monomial(s, (1, 0, 0, 0), one, field)
    S1_deg = DivisorClass(1, s.e)
    S1 = CoxPolynomial.make(s, S1_deg, {(0, 1, 0, 0): one}, field)
    eS1 = CoxPolynomial.make(s, S1_deg, {(0, 1, 0, 0): field.from_int(s.e)}, field)
    zero_F = CoxPolynomial.zero(s, DivisorClass(0, 1))
    zero_C0 = CoxPolynomial.zero(s, DivisorClass(1, 0))
    rows = [
        [zero_F, zero_F, S0, S1],
        [T0, T1, zero_C0, eS1],
    ]
    C = ComplexOfSums(space, field, terms, {-1: rows})
    if verify:
        res = full_rank_everywhere(s, field, rows, 2)
        if not res:
            raise AssertionError(f"coordinate-weighting map not surjective: {res.reason}")
    return C


# -------------------------------------------------------------- serialization


def field_to_json(field) -> dict:
    if isinstance(field, Rationals):
        return {"type": "rational"}
    if isinstance(field, PrimeField):
        return {"type": "prime", "p": field.p}
    raise ValueError(f"field {field!r} has no serialized form")


def field_from_json(d: dict):
    if d["type"] == "rational":
        return QQ
    if d["type"] == "prime":
        return PrimeField(d["p"])
    raise ValueError(f"unknown field type {d['type']!r}")


def _poly_to_json(poly: CoxPolynomial, field) -> list:
    return [
        {"exps": list(exps), "coeff": field.coeff_to_str(c)} for exps, c in poly.terms
    ]


def _poly_from_json(s: Surface, degree: DivisorClass, data: list, field) -> CoxPolynomial:
    coeffs = {}
    for term in data:
        coeffs[tuple(term["exps"])] = field.coeff_from_str(term["coeff"])
    return CoxPolynomial.make(s, degree, coeffs, field)


def monad_to_json(m: MonadPoint) -> dict:
    field = m.field
    return {
        "schema_version": MONAD_SCHEMA_VERSION,
        "e": m.shape.e,
        "field": field_to_json(field),
        "a1": [[_poly_to_json(p, field) for p in row] for row in m.a1],
        "a2": [[_poly_to_json(p, field) for p in row] for row in m.a2],
        "b1": [[_poly_to_json(p, field) for p in row] for row in m.b1],
        "b2": [[_poly_to_json(p, field) for p in row] for row in m.b2],
        "seed": m.seed,
    }


def monad_from_json(data: dict) -> MonadPoint:
    if data["schema_version"] != MONAD_SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {data['schema_version']}")
    shape = monad_shape(data["e"])
    field = field_from_json(data["field"])
    s = shape.surface

    def block(name, degree):
        return [
            [_poly_from_json(s, degree, cell, field) for cell in row]
            for row in data[name]
        ]

    return MonadPoint(
        shape,
        field,
        block("a1", shape.deg_a1),
        block("a2", shape.deg_a2),
        block("b1", shape.deg_b1),
        block("b2", shape.deg_b2),
        seed=data.get("seed"),
    )


def dumps_canonical(data) -> str:
    """Canonical JSON text: sorted keys, fixed separators, trailing
    newline; byte-identical across runs for identical data."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"
