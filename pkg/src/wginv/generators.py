"""Seeded random instance generators for property suites.

All generators draw from a ``random.Random`` so exact and float lanes can
share structure; exact instances use small Gaussian integers to keep
rational growth in check.  Context generation with a prescribed kappa
builds block-triangular data with an explicit nilpotent chain and
multiplies it out through invertible (exact) or unitary (float)
similarity factors.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from . import axioms
from .classical import moore_penrose
from .matrix import (EXACT, FLOAT, Matrix, MetricMatrix, WeightedContext,
                     block, index, inverse, make_context, rank)
from .scalars import GaussianRational


def _entry(rng: random.Random, lo=-2, hi=2, complex_prob=0.3):
    re = rng.randint(lo, hi)
    im = rng.randint(lo, hi) if rng.random() < complex_prob else 0
    return GaussianRational(re, im)


def rand_matrix(rng, rows, cols, backend=EXACT, lo=-2, hi=2,
                complex_prob=0.3, density=0.85) -> Matrix:
    data = []
    for _ in range(rows * cols):
        if rng.random() <= density:
            data.append(_entry(rng, lo, hi, complex_prob))
        else:
            data.append(GaussianRational(0))
    m = Matrix(rows, cols, data, EXACT)
    return m.to_float() if backend == FLOAT else m


def rand_nonzero_matrix(rng, rows, cols, backend=EXACT, **kw) -> Matrix:
    while True:
        m = rand_matrix(rng, rows, cols, backend, **kw)
        if not m.is_zero():
            return m


def _unit_triangular(rng, n, lower, complex_prob=0.2):
    rows = [[GaussianRational(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = GaussianRational(1)
        for j in range(n):
            if (j < i) == lower and j != i and rng.random() < 0.5:
                rows[i][j] = _entry(rng, -2, 2, complex_prob)
    return Matrix.from_rows(rows, EXACT)


def rand_invertible(rng, n, backend=EXACT) -> Matrix:
    m = _unit_triangular(rng, n, True) @ _unit_triangular(rng, n, False)
    return m.to_float() if backend == FLOAT else m


def rand_unitary_float(rng, n) -> Matrix:
    import numpy as np
    raw = np.array([[rng.gauss(0, 1) + 1j * rng.gauss(0, 1)
                     for _ in range(n)] for _ in range(n)])
    q = np.linalg.qr(raw)[0]
    return Matrix(n, n, q, FLOAT)


def rand_pd_metric(rng, n, backend=EXACT) -> MetricMatrix:
    """Positive definite Hermitian metric L L* from a random unit-triangular L."""
    ell = _unit_triangular(rng, n, True, complex_prob=0.4)
    m = ell @ ell.H
    return MetricMatrix(m.to_float() if backend == FLOAT else m)


def rand_indefinite_metric(rng, n, backend=EXACT) -> MetricMatrix:
    """Invertible Hermitian metric with mixed signature P* diag(+-1) P."""
    signs = [rng.choice((1, -1)) for _ in range(n)]
    if all(s == 1 for s in signs):
        signs[rng.randrange(n)] = -1
    d = Matrix.from_rows([[signs[i] if i == j else 0 for j in range(n)]
                          for i in range(n)], EXACT)
    p = rand_invertible(rng, n)
    m = p.H @ d @ p
    return MetricMatrix(m.to_float() if backend == FLOAT else m)


def rand_index_le1(rng, n, r=None, backend=EXACT) -> Matrix:
    """Random n x n matrix of index <= 1 and rank r (via F(GF)^-1-free route:
    sample F, G until GF is invertible, then A = F G)."""
    if r is None:
        r = rng.randint(1, n)
    while True:
        f = rand_matrix(rng, n, r)
        g = rand_matrix(rng, r, n)
        if rank(g @ f) == r:
            a = f @ g
            return a.to_float() if backend == FLOAT else a


def rand_idempotent(rng, n, r=None, backend=EXACT) -> Matrix:
    """Random (oblique) projector F (G F)^-1 G."""
    if r is None:
        r = rng.randint(1, max(1, n - 1))
    while True:
        f = rand_matrix(rng, n, r)
        g = rand_matrix(rng, r, n)
        gf = g @ f
        if rank(gf) == r:
            p = f @ inverse(gf) @ g
            return p.to_float() if backend == FLOAT else p


def rand_context(rng, m, n, kappa, backend=EXACT, r=None) -> WeightedContext:
    """Weighted context with exactly kappa = max(ind(AW), ind(WA)).

    Builds A = U [[A1, A2], [0, A3]] V^-1, W = V [[W1, W2], [0, W3]] U^-1
    with invertible A1, W1 and an explicit nilpotent chain of index kappa
    in A3 W3.  Float contexts use unitary similarity factors.
    """
    if kappa == 0:
        if m != n:
            raise ValueError("kappa = 0 needs square invertible A, W")
        a = rand_invertible(rng, n, backend)
        w = rand_invertible(rng, n, backend)
        return make_context(a, w)
    max_r = min(m, n) - kappa
    if max_r < 0:
        raise ValueError(f"size too small for kappa={kappa}")
    if r is None:
        r = max_r
    if not 0 <= r <= max_r:
        raise ValueError("invalid leading-block size")
    p, q = m - r, n - r
    if backend == FLOAT:
        # unitary leading blocks and mild couplings keep the weighted
        # Drazin inverse well-scaled, so residuals stay near machine eps
        a1 = rand_unitary_float(rng, r)
        w1 = rand_unitary_float(rng, r)
        a2 = rand_matrix(rng, r, q, FLOAT, lo=-1, hi=1).scale(0.5)
        w2 = rand_matrix(rng, r, p, FLOAT, lo=-1, hi=1).scale(0.5)
    else:
        a1 = rand_invertible(rng, r)
        w1 = rand_invertible(rng, r)
        a2 = rand_matrix(rng, r, q)
        w2 = rand_matrix(rng, r, p)
    a3 = [[GaussianRational(0)] * q for _ in range(p)]
    for t in range(kappa - 1):
        a3[t][t + 1] = GaussianRational(1)
    a3 = Matrix.from_rows(a3, EXACT) if p and q else Matrix.zeros(p, q)
    w3 = [[GaussianRational(1 if i == j else 0) for j in range(p)]
          for i in range(q)]
    w3 = Matrix.from_rows(w3, EXACT) if p and q else Matrix.zeros(q, p)
    if backend == FLOAT:
        a3, w3 = a3.to_float(), w3.to_float()
    a_blk = block([[a1, a2], [Matrix.zeros(p, r, backend), a3]])
    w_blk = block([[w1, w2], [Matrix.zeros(q, r, backend), w3]])
    if backend == FLOAT:
        u = rand_unitary_float(rng, m)
        v = rand_unitary_float(rng, n)
        a = u @ a_blk @ v.H
        w = v @ w_blk @ u.H
    else:
        u = rand_invertible(rng, m)
        v = rand_invertible(rng, n)
        a = u @ a_blk @ inverse(v)
        w = v @ w_blk @ inverse(u)
    ctx = make_context(a, w)
    if ctx.kappa != kappa:
        raise AssertionError(f"generator produced kappa={ctx.kappa}, wanted {kappa}")
    return ctx


def rand_square_context(rng, n, backend=EXACT, kappa_max=2) -> WeightedContext:
    """Square context with invertible W (so rank(WAW) == rank(A)); suited to
    bilateral-inverse suites where weighted inner inverses must exist."""
    a = rand_matrix(rng, n, n)
    if index(a) > kappa_max:
        a = rand_index_le1(rng, n)
    w = rand_invertible(rng, n)
    if backend == FLOAT:
        a, w = a.to_float(), w.to_float()
    return make_context(a, w)


def rand_w1_member(ctx, rng, tries=25) -> Matrix:
    """A member of A{1^W}: a {1}-inverse H of WAW with AWHWA == A."""
    b = ctx.w @ ctx.a @ ctx.w
    bdag = moore_penrose(b)
    m, n = ctx.a.shape
    for _ in range(tries):
        z = rand_matrix(rng, m, n, ctx.backend, lo=-1, hi=1)
        h = bdag + z - bdag @ b @ z @ b @ bdag
        if axioms.check("1W", ctx.a, h, ctx=ctx).holds:
            return h
    raise ValueError("could not generate a {1^W} member "
                     "(is rank(WAW) == rank(A)?)")


def rand_w2_member(ctx, rng, tries=25) -> Matrix:
    """A member of A{2^W} via an outer inverse of WAW with random factors."""
    b = ctx.w @ ctx.a @ ctx.w
    m, n = ctx.a.shape
    smax = max(1, min(rank(b), 3))
    for _ in range(tries):
        s = rng.randint(1, smax)
        f = rand_matrix(rng, m, s, ctx.backend)
        g = rand_matrix(rng, s, n, ctx.backend)
        mid = g @ b @ f
        if rank(mid) == s:
            x = f @ inverse(mid) @ g
            if axioms.check("2W", ctx.a, x, ctx=ctx).holds:
                return x
    raise ValueError("could not generate a {2^W} member")


def rand_a2_ba_pair(rng, n, backend=EXACT, tries=60):
    """Pair (a, b) with a^2 == b a, both of index 1, b != a.

    b = a + (a^2 x) y* for y in the null space of a* and a^2 x nonzero.
    """
    from .matrix import null_basis
    for _ in range(tries):
        a = rand_index_le1(rng, n, r=rng.randint(1, n - 1))
        ns = null_basis(a.H)
        if ns.cols == 0:
            continue
        y = ns.sub(0, n, 0, 1)
        x = rand_matrix(rng, n, 1)
        a2x = a @ a @ x
        if a2x.is_zero():
            continue
        b = a + a2x @ y.H
        if index(b) != 1:
            continue
        if backend == FLOAT:
            return a.to_float(), b.to_float()
        return a, b
    raise ValueError("failed to build an A^2 == BA pair")


def rand_perturbation(rng, rows, cols, backend=EXACT) -> Matrix:
    return rand_nonzero_matrix(rng, rows, cols, backend, lo=-1, hi=1,
                               density=0.4)
