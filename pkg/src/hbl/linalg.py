"""Exact dense linear algebra over any of the coefficient fields.

Matrices are lists of row lists.  Everything uses plain Gaussian
elimination with first-nonzero pivoting, which is deterministic and
exact over Fraction / F_p / extension-field entries.
"""
from __future__ import annotations


def zeros(F, nrows: int, ncols: int):
    return [[F.zero for _ in range(ncols)] for _ in range(nrows)]


def identity(F, n: int):
    out = zeros(F, n, n)
    for i in range(n):
        out[i][i] = F.one
    return out


def mat_mul(F, A, B):
    if not A or not B:
        return []
    n, k, m = len(A), len(B), len(B[0])
    out = zeros(F, n, m)
    for i in range(n):
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            if F.is_zero(a):
                continue
            Bt = B[t]
            row = out[i]
            for j in range(m):
                if not F.is_zero(Bt[j]):
                    row[j] = F.add(row[j], F.mul(a, Bt[j]))
    return out


def mat_vec(F, A, v):
    out = []
    for row in A:
        acc = F.zero
        for a, x in zip(row, v):
            if not (F.is_zero(a) or F.is_zero(x)):
                acc = F.add(acc, F.mul(a, x))
        out.append(acc)
    return out


def rref(F, A):
    """Reduced row echelon form.  Returns (R, pivot_columns)."""
    R = [list(row) for row in A]
    nrows = len(R)
    ncols = len(R[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if not F.is_zero(R[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        R[r], R[pivot] = R[pivot], R[r]
        inv = F.inv(R[r][c])
        R[r] = [F.mul(x, inv) for x in R[r]]
        for i in range(nrows):
            if i != r and not F.is_zero(R[i][c]):
                f = R[i][c]
                R[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return R, pivots


def rank(F, A) -> int:
    if not A or not A[0]:
        return 0
    return len(rref(F, A)[1])


def nullspace(F, A, ncols: int | None = None):
    """Basis of the right kernel of A, as a list of vectors.

    Deterministic: one basis vector per free column, in column order,
    with a 1 in the free position.
    """
    if not A:
        n = ncols if ncols is not None else 0
        return [
            [F.one if i == j else F.zero for i in range(n)] for j in range(n)
        ]
    n = len(A[0])
    R, pivots = rref(F, A)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [F.zero] * n
        v[fc] = F.one
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(R[r][fc])
        basis.append(v)
    return basis


def solve(F, A, b):
    """One solution x of A x = b, or None if inconsistent.

    Free variables are set to zero (first-pivot pseudo-inverse), so the
    answer is deterministic in the given column order.
    """
    if not A:
        return [] if all(F.is_zero(x) for x in b) else None
    n = len(A[0])
    aug = [list(row) + [bb] for row, bb in zip(A, b)]
    R, pivots = rref(F, aug)
    for r in range(len(R)):
        if all(F.is_zero(x) for x in R[r][:n]) and not F.is_zero(R[r][n]):
            return None
    x = [F.zero] * n
    for r, pc in enumerate(pivots):
        if pc == n:
            return None  # pivot in the constant column: inconsistent
        x[pc] = R[r][n]
    return x


class RowSpace:
    """Incremental echelon basis of a growing span; supports membership
    tests and rank queries without re-eliminating from scratch."""

    def __init__(self, F, dim: int):
        self.F = F
        self.dim = dim
        self.rows = []  # echelon rows, each with .pivot recorded
        self.pivots = []

    def reduce(self, v):
        F = self.F
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if not F.is_zero(v[p]):
                f = v[p]
                v = [F.sub(x, F.mul(f, y)) for x, y in zip(v, row)]
        return v

    def add(self, v) -> bool:
        """Insert v into the span; True if the rank grew."""
        F = self.F
        v = self.reduce(v)
        for p in range(self.dim):
            if not F.is_zero(v[p]):
                inv = F.inv(v[p])
                v = [F.mul(x, inv) for x in v]
                # back-reduce existing rows to keep reduced form
                for i, (row, rp) in enumerate(zip(self.rows, self.pivots)):
                    if not F.is_zero(row[p]):
                        f = row[p]
                        self.rows[i] = [
                            F.sub(x, F.mul(f, y)) for x, y in zip(row, v)
                        ]
                idx = 0
                while idx < len(self.pivots) and self.pivots[idx] < p:
                    idx += 1
                self.rows.insert(idx, v)
                self.pivots.insert(idx, p)
                return True
        return False

    def contains(self, v) -> bool:
        return all(self.F.is_zero(x) for x in self.reduce(v))

    @property
    def rank(self) -> int:
        return len(self.rows)
