"""Unweighted and metric-weighted baseline inverses.

Everything here is rational-closed: Moore-Penrose via full-rank
factorization, Drazin via Cline's repeated factorization, core/core-EP by
their product formulas.  The weighted Moore-Penrose is verification-gated
because indefinite Hermitian metrics may admit no solution.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import axioms
from .matrix import (EXACT, FLOAT, FLOAT_EQ_TOL, ExistenceError, Matrix,
                     MetricMatrix, ShapeError, VerificationError,
                     full_rank_factorization, index, inverse, mat_pow, rank)


def moore_penrose(a: Matrix) -> Matrix:
    """Moore-Penrose inverse via full-rank factorization.

    A = FG gives A^+ = G* (GG*)^-1 (F*F)^-1 F*, valid on both backends.
    """
    f, g = full_rank_factorization(a)
    gh, fh = g.H, f.H
    return gh @ inverse(g @ gh) @ inverse(fh @ f) @ fh


def group_inverse(a: Matrix) -> Matrix:
    """Group inverse; exists iff index(a) <= 1."""
    if a.rows != a.cols:
        raise ShapeError("group inverse requires a square matrix")
    if index(a) > 1:
        raise ExistenceError("no group inverse: index exceeds 1")
    f, g = full_rank_factorization(a)
    h = g @ f
    hinv = inverse(h)
    return f @ hinv @ hinv @ g


def group_from_factors(a: Matrix, x: Matrix, y: Matrix) -> Matrix:
    """Group inverse from A == A^2 X == Y A^2 witnesses, as A X^2.

    Also evaluates Y A X and Y^2 A and insists all three coincide before
    returning.
    """
    if not _same(a, a @ a @ x) or not _same(a, y @ a @ a):
        raise ValueError("witnesses do not satisfy A == A^2 X == Y A^2")
    cand = a @ x @ x
    if not _same(cand, y @ a @ x) or not _same(cand, y @ y @ a):
        raise VerificationError("AX^2, YAX, Y^2A disagree")
    return cand


def drazin(a: Matrix) -> Matrix:
    """Drazin inverse.

    Exact backend: repeated full-rank factorization (Cline), rational-
    closed.  Float backend: core-nilpotent splitting along the range of
    A^index, which keeps every rank decision a single SVD call (the
    factorization recursion compounds rank misjudgements on floats).
    """
    if a.rows != a.cols:
        raise ShapeError("Drazin inverse requires a square matrix")
    if a.backend == FLOAT:
        return _drazin_float(a)
    f, g = full_rank_factorization(a)
    r = f.cols
    if r == 0:
        return Matrix.zeros(a.rows, a.cols, a.backend)
    h = g @ f
    if rank(h) == r:
        hinv = inverse(h)
        return f @ hinv @ hinv @ g
    hd = drazin(h)
    return f @ hd @ hd @ g


def _drazin_float(a: Matrix) -> Matrix:
    n = a.rows
    nu = index(a)
    if nu == 0:
        return inverse(a)
    an = mat_pow(a, nu)
    r = rank(an)
    if r == 0:
        return Matrix.zeros(n, n, FLOAT)
    u = Matrix(n, n, np.linalg.svd(an.to_numpy())[0], FLOAT)
    blk = u.H @ a @ u
    b = blk.sub(0, r, 0, r)
    c = blk.sub(0, r, r, n)
    nil = blk.sub(r, n, r, n)
    binv = inverse(b)
    s = Matrix.zeros(r, n - r, FLOAT)
    bpow = binv @ binv
    nilpow = Matrix.eye(n - r, FLOAT)
    for _ in range(nu):
        s = s + bpow @ c @ nilpow
        bpow = bpow @ binv
        nilpow = nilpow @ nil
    from .matrix import block as _block
    core = _block([[binv, s],
                   [Matrix.zeros(n - r, r, FLOAT), Matrix.zeros(n - r, n - r, FLOAT)]])
    return u @ core @ u.H


def core(a: Matrix) -> Matrix:
    """Core inverse A^# A A^+ (index <= 1)."""
    return group_inverse(a) @ a @ moore_penrose(a)


def dual_core(a: Matrix) -> Matrix:
    """Dual core inverse A^+ A A^# (index <= 1)."""
    return moore_penrose(a) @ a @ group_inverse(a)


def core_ep(a: Matrix) -> Matrix:
    """Core-EP inverse A^D A^k (A^k)^+ with k = index(a)."""
    if a.rows != a.cols:
        raise ShapeError("core-EP inverse requires a square matrix")
    k = index(a)
    ak = mat_pow(a, k)
    return drazin(a) @ ak @ moore_penrose(ak)


# ---------------------------------------------------------------------------
# weighted Moore-Penrose
# ---------------------------------------------------------------------------

def weighted_mp(a: Matrix, m: MetricMatrix, n: MetricMatrix) -> Matrix:
    """Weighted Moore-Penrose inverse: the unique X in A{1,2,3^M,4^N}.

    Tries the closed candidate N^-1 A* M (A N^-1 A* M)^+ first; when that
    fails verification (possible for indefinite metrics) it falls back to
    an exact linear solve of the {1,3^M,4^N} system followed by
    reflexivization.  Raises ExistenceError when no solution exists.
    """
    if m.dim != a.rows or n.dim != a.cols:
        raise ShapeError("metric dimensions must match the matrix")
    ninv = n.inv()
    candidate = ninv @ a.H @ m.m @ moore_penrose(a @ ninv @ a.H @ m.m)
    if _is_weighted_mp(a, candidate, m, n):
        return candidate
    x = _solve_134(a, m, n)
    if x is not None:
        x = x @ a @ x          # {1,3M,4N} -> reflexivize into {1,2,3M,4N}
        if _is_weighted_mp(a, x, m, n):
            return x
    raise ExistenceError("weighted Moore-Penrose inverse does not exist "
                         "for this metric pair")


def _is_weighted_mp(a, x, m, n):
    rep = axioms.check_all(["1", "2"], a, x)
    if not rep.overall:
        return False
    return (axioms.check("3M", a, x, metric=m).holds
            and axioms.check("4N", a, x, metric_n=n).holds)


def _same(a: Matrix, b: Matrix) -> bool:
    from .matrix import equal
    return equal(a, b)


def _entry_pair(z, backend):
    if backend == EXACT:
        return z.re, z.im
    return z.real, z.imag


def _solve_134(a: Matrix, m: MetricMatrix, n: MetricMatrix):
    """Any solution of the real-linearized system {1, 3M, 4N}, or None.

    Unknown X is (a.cols x a.rows); variables are interleaved re/im parts.
    """
    rows_a, cols_a = a.rows, a.cols
    p_dim, q_dim = cols_a, rows_a        # X is p_dim x q_dim
    nvars = 2 * p_dim * q_dim
    backend = a.backend
    zero = Fraction(0) if backend == EXACT else 0.0

    ma = m.m @ a
    am = a.H @ m.m               # A* M
    na = n.m                     # metric N
    rows = []
    rhs = []

    def new_rows():
        re_row = [zero] * nvars
        im_row = [zero] * nvars
        rows.append(re_row)
        rows.append(im_row)
        return re_row, im_row

    def add(re_row, im_row, coeff, p, q, conjugated=False):
        cr, ci = _entry_pair(coeff, backend)
        j = 2 * (p * q_dim + q)
        if conjugated:
            re_row[j] += cr
            re_row[j + 1] += ci
            im_row[j] += ci
            im_row[j + 1] -= cr
        else:
            re_row[j] += cr
            re_row[j + 1] -= ci
            im_row[j] += ci
            im_row[j + 1] += cr

    # (1)  A X A = A
    for i in range(rows_a):
        for j in range(cols_a):
            re_row, im_row = new_rows()
            for p in range(p_dim):
                aip = a[i, p]
                if not aip:
                    continue
                for q in range(q_dim):
                    coeff = aip * a[q, j]
                    if coeff:
                        add(re_row, im_row, coeff, p, q)
            br, bi = _entry_pair(a[i, j], backend)
            rhs.extend((br, bi))

    # (3M)  M A X - X^* A^* M = 0   (Hermitian-ness of MAX)
    for i in range(rows_a):
        for j in range(rows_a):
            re_row, im_row = new_rows()
            for p in range(p_dim):
                coeff = ma[i, p]
                if coeff:
                    add(re_row, im_row, coeff, p, j)
            for l in range(p_dim):
                coeff = am[l, j]
                if coeff:
                    add(re_row, im_row, -coeff, l, i, conjugated=True)
            rhs.extend((zero, zero))

    # (4N)  N X A - A^* X^* N = 0
    for i in range(cols_a):
        for j in range(cols_a):
            re_row, im_row = new_rows()
            for p in range(p_dim):
                cl = na[i, p]
                if not cl:
                    continue
                for q in range(q_dim):
                    coeff = cl * a[q, j]
                    if coeff:
                        add(re_row, im_row, coeff, p, q)
            for k in range(q_dim):
                ca = a[k, i].conjugate()
                if not ca:
                    continue
                for l in range(p_dim):
                    coeff = ca * na[l, j]
                    if coeff:
                        add(re_row, im_row, -coeff, l, k, conjugated=True)
            rhs.extend((zero, zero))

    sol = _solve_real(rows, rhs, backend)
    if sol is None:
        return None
    if backend == EXACT:
        from .scalars import GaussianRational
        data = [GaussianRational(sol[2 * t], sol[2 * t + 1])
                for t in range(p_dim * q_dim)]
    else:
        data = [complex(sol[2 * t], sol[2 * t + 1])
                for t in range(p_dim * q_dim)]
    return Matrix(p_dim, q_dim, data, backend)


def _solve_real(rows, rhs, backend):
    if backend == FLOAT:
        arr = np.array(rows, dtype=float)
        b = np.array(rhs, dtype=float)
        sol, *_ = np.linalg.lstsq(arr, b, rcond=None)
        if np.linalg.norm(arr @ sol - b) > 1e-8 * max(1.0, np.linalg.norm(b)):
            return None
        return list(sol)
    # exact Gaussian elimination over Fractions; free variables get zero
    m = len(rows)
    if m == 0:
        return []
    nvars = len(rows[0])
    aug = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    pivots = []
    r = 0
    for c in range(nvars):
        piv = next((i for i in range(r, m) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][c]
        aug[r] = [x / inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][nvars]:
            return None                      # inconsistent
    sol = [Fraction(0)] * nvars
    for i, c in enumerate(pivots):
        sol[c] = aug[i][nvars]
    return sol
