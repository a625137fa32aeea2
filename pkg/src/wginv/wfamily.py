"""W-weighted Drazin and core-EP inverses, the weighted core-EP
decomposition, and the {1,2,3,1^k}^W / {1,2,4,^k1}^W inverse families.

Family members X of A (m x n) with weight W (n x m) satisfy the
{1,2,3}-equations of the product WAW together with the power condition
XW(AW)^{k+1} = (AW)^k (or its dual).  Canonical members are built from
the Moore-Penrose inverse of WAW plus a Drazin correction; all
constructors verify membership before returning.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import axioms
from .axioms import EquationLabel, VerificationReport
from .classical import core_ep, drazin, moore_penrose
from .matrix import (EXACT, FLOAT, FLOAT_EQ_TOL, FLOAT_RANK_EPS, BackendError,
                     Matrix, ShapeError, VerificationError, WeightedContext,
                     equal, index, inverse, is_hermitian, mat_pow, rank)

# -- cached per-context building blocks --------------------------------------


def wa_drazin(ctx: WeightedContext) -> Matrix:
    return ctx.cached("wa_drazin", lambda: drazin(ctx.wa))


def aw_drazin(ctx: WeightedContext) -> Matrix:
    return ctx.cached("aw_drazin", lambda: drazin(ctx.aw))


def a_mp(ctx: WeightedContext) -> Matrix:
    return ctx.cached("a_mp", lambda: moore_penrose(ctx.a))


def waw(ctx: WeightedContext) -> Matrix:
    return ctx.cached("waw", lambda: ctx.w @ ctx.a @ ctx.w)


def waw_mp(ctx: WeightedContext) -> Matrix:
    return ctx.cached("waw_mp", lambda: moore_penrose(waw(ctx)))


# -- W-weighted Drazin / core-EP ----------------------------------------------


def w_drazin(ctx: WeightedContext) -> Matrix:
    """W-weighted Drazin inverse A((WA)^D)^2.

    Asserts agreement with ((AW)^D)^2 A and the defining conditions
    (outer w.r.t. W, commutation, power identity at kappa).
    """
    def build():
        d = wa_drazin(ctx)
        x = ctx.a @ d @ d
        d2 = aw_drazin(ctx)
        if not equal(x, d2 @ d2 @ ctx.a):
            raise VerificationError("A((WA)^D)^2 != ((AW)^D)^2 A")
        rep = axioms.check_all(["2W", "5W",
                                EquationLabel("1kW", ctx.kappa)],
                               ctx.a, x, ctx=ctx)
        if not rep.overall:
            raise VerificationError(f"weighted Drazin conditions failed: {rep}")
        return x
    return ctx.cached("w_drazin", build)


def w_core_ep(ctx: WeightedContext) -> Matrix:
    """W-weighted core-EP inverse A[(WA) core-EP]^2.

    At kappa = 1 this is the W-weighted core inverse.  The defining
    conditions (Hermitian WAWX, A(WX)^2 = X, power identity) are asserted.
    """
    def build():
        g = core_ep(ctx.wa)
        x = ctx.a @ g @ g
        rep = axioms.check_all(["3W", "6W",
                                EquationLabel("1kW", ctx.kappa)],
                               ctx.a, x, ctx=ctx)
        if not rep.overall:
            raise VerificationError(f"weighted core-EP conditions failed: {rep}")
        return x
    return ctx.cached("w_core_ep", build)


def w_core_condition_sets(ctx: WeightedContext, x: Matrix, tol=None) -> dict:
    """The five equivalent condition sets for the W-weighted core inverse
    (kappa = 1), each evaluated independently.  Returns label -> bool plus
    an ``all_equal`` verdict.
    """
    def chk(tag, k=None):
        return axioms.check(EquationLabel(tag, k), ctx.a, x, ctx=ctx, tol=tol).holds

    b = waw(ctx)
    one = axioms.check("1", b, x, tol=tol).holds        # WAWXWAW == WAW
    two = chk("2W")
    three = chk("3W")
    onek = chk("1kW", 1)
    six = chk("6W")
    sets = {
        "i": equal(x, w_core_ep(ctx)),
        "ii": one and two and three and onek and six,
        "iii": one and three and six,
        "iv": three and two and onek,
        "v": three and onek and six,
    }
    sets["all_equal"] = len({v for k, v in sets.items()}) == 1
    return sets


# -- family membership reports -------------------------------------------------


def _family_report(ctx, x, k, hermitian_tag, power_tag, tol):
    if x.shape != ctx.a.shape:
        raise ShapeError(f"candidate must have shape {ctx.a.shape}")
    b = waw(ctx)
    entries = (
        axioms.check("1", b, x, tol=tol),
        axioms.check("2", b, x, tol=tol),
        axioms.check(hermitian_tag, b, x, tol=tol),
        axioms.check(EquationLabel(power_tag, k), ctx.a, x, ctx=ctx, tol=tol),
    )
    return VerificationReport(entries)


def is_w1231k(ctx: WeightedContext, x: Matrix, k: int,
              tol=None) -> VerificationReport:
    """Check the four {1,2,3,1^k}^W conditions: the {1,2,3}-equations of
    WAW plus XW(AW)^{k+1} = (AW)^k."""
    return _family_report(ctx, x, k, "3", "1kW", tol)


def is_w124k1(ctx: WeightedContext, x: Matrix, k: int,
              tol=None) -> VerificationReport:
    """Dual membership check: {1,2,4}-equations of WAW plus
    (WA)^{k+1}WX = (WA)^k."""
    return _family_report(ctx, x, k, "4", "kW1", tol)


def canonical_w1231k(ctx: WeightedContext) -> Matrix:
    """Canonical {1,2,3,1^kappa}^W member: (WAW)^+ plus a Drazin correction.

    Built as X + (I - X WAW) A^{D,W} WAW X with X = (WAW)^+, the base
    point of the {1,2,3}^W parametrization; membership is asserted.
    """
    def build():
        x = waw_mp(ctx)
        b = waw(ctx)
        eye_m = Matrix.eye(ctx.a.rows, ctx.backend)
        cand = x + (eye_m - x @ b) @ w_drazin(ctx) @ b @ x
        rep = is_w1231k(ctx, cand, ctx.kappa)
        if not rep.overall:
            raise VerificationError(f"canonical {{1,2,3,1^k}}^W member failed: {rep}")
        return cand
    return ctx.cached("canonical_w1231k", build)


def canonical_w124k1(ctx: WeightedContext) -> Matrix:
    """Canonical {1,2,4,^kappa 1}^W member (dual of canonical_w1231k)."""
    def build():
        x = waw_mp(ctx)
        b = waw(ctx)
        eye_n = Matrix.eye(ctx.a.cols, ctx.backend)
        cand = x + x @ b @ w_drazin(ctx) @ (eye_n - b @ x)
        rep = is_w124k1(ctx, cand, ctx.kappa)
        if not rep.overall:
            raise VerificationError(f"canonical {{1,2,4,^k1}}^W member failed: {rep}")
        return cand
    return ctx.cached("canonical_w124k1", build)


def _family_tail(ctx) -> Matrix:
    # (WAW)^+ - (WAW)^+ WAW A^{D,W} WAW (WAW)^+ , the parameter multiplier
    def build():
        x = waw_mp(ctx)
        b = waw(ctx)
        return x - x @ b @ w_drazin(ctx) @ b @ x
    return ctx.cached("family_tail", build)


def family_member_w1231k(ctx: WeightedContext, mparam: Matrix) -> Matrix:
    """Parametrized {1,2,3,1^kappa}^W member for an m x m parameter."""
    m = ctx.a.rows
    if mparam.shape != (m, m):
        raise ShapeError(f"parameter must be {m}x{m}")
    awd = ctx.cached("aw_mp", lambda: moore_penrose(ctx.aw))
    eye_m = Matrix.eye(m, ctx.backend)
    cand = canonical_w1231k(ctx) + (eye_m - awd @ ctx.aw) @ mparam @ _family_tail(ctx)
    rep = is_w1231k(ctx, cand, ctx.kappa)
    if not rep.overall:
        raise VerificationError(f"family member failed verification: {rep}")
    return cand


def family_member_w124k1(ctx: WeightedContext, nparam: Matrix) -> Matrix:
    """Parametrized {1,2,4,^kappa 1}^W member for an n x n parameter."""
    n = ctx.a.cols
    if nparam.shape != (n, n):
        raise ShapeError(f"parameter must be {n}x{n}")
    wad = ctx.cached("wa_mp", lambda: moore_penrose(ctx.wa))
    eye_n = Matrix.eye(n, ctx.backend)
    cand = canonical_w124k1(ctx) + _family_tail(ctx) @ nparam @ (eye_n - ctx.wa @ wad)
    rep = is_w124k1(ctx, cand, ctx.kappa)
    if not rep.overall:
        raise VerificationError(f"dual family member failed verification: {rep}")
    return cand


# -- weighted core-EP decomposition ---------------------------------------------


@dataclass(frozen=True)
class WCepDecomposition:
    """Simultaneous unitary block-triangularization of (A, W).

    A = U [[a1, a2], [0, a3]] V*,  W = V [[w1, w2], [0, w3]] U*, with a1,
    w1 invertible r x r and a3 w3, w3 a3 nilpotent.  Derived blocks follow
    the products AW = U [[c, e], [0, nblk]] U* and WA = V [[rblk, sblk],
    [0, tblk]] V*; ehat is the (1,2) block of (AW)^{kappa+1} and delta the
    inverse Gram block used by Moore-Penrose representations.
    """

    ctx: WeightedContext
    u: Matrix
    v: Matrix
    r_split: int
    a1: Matrix
    a2: Matrix
    a3: Matrix
    w1: Matrix
    w2: Matrix
    w3: Matrix
    c: Matrix
    e: Matrix
    nblk: Matrix
    rblk: Matrix
    sblk: Matrix
    tblk: Matrix
    ehat: Matrix
    delta: Matrix

    @property
    def kappa(self):
        return self.ctx.kappa

    def assemble(self, x11: Matrix, x12: Matrix, x21: Matrix,
                 x22: Matrix) -> Matrix:
        """U [[x11, x12], [x21, x22]] V* for blocks split at r_split."""
        from .matrix import block
        return self.u @ block([[x11, x12], [x21, x22]]) @ self.v.H


def _block_pinv(b: Matrix, scale: float) -> Matrix:
    """Moore-Penrose inverse of a float block, with the rank cutoff tied to
    the parent matrix scale so noise-level blocks invert to zero."""
    rows, cols = b.shape
    if rows == 0 or cols == 0:
        return Matrix.zeros(cols, rows, FLOAT)
    arr = b.to_numpy()
    u, s, vh = np.linalg.svd(arr)
    cutoff = max(rows, cols) * FLOAT_RANK_EPS * max(float(s[0]) if s.size else 0.0,
                                                    scale)
    r = int(np.count_nonzero(s > cutoff))
    if r == 0:
        return Matrix.zeros(cols, rows, FLOAT)
    inv_part = (vh[:r].conj().T / s[:r]) @ u[:, :r].conj().T
    return Matrix(cols, rows, inv_part, FLOAT)


def wcep_decompose(ctx: WeightedContext, tol: float | None = None) -> WCepDecomposition:
    """Weighted core-EP decomposition (float backend only).

    U's leading columns span R((AW)^kappa), V's span R((WA)^kappa); both
    come from singular vectors, so U, V are exactly unitary.  The block
    structure, invertibility of the leading blocks and nilpotency of the
    trailing products are verified within tolerance.
    """
    if ctx.backend != FLOAT:
        raise BackendError("wcep_decompose requires the float backend "
                           "(unitary factors are irrational in general)")
    if tol is None:
        tol = FLOAT_EQ_TOL
    m, n = ctx.a.shape
    kap = max(ctx.kappa, 1)
    awk = mat_pow(ctx.aw, kap)
    wak = mat_pow(ctx.wa, kap)
    r = rank(awk)
    if rank(wak) != r:
        raise VerificationError("rank((AW)^k) != rank((WA)^k)")
    # left singular vectors: leading r columns span the range of the power
    u = Matrix(m, m, np.linalg.svd(awk.to_numpy())[0], FLOAT)
    v = Matrix(n, n, np.linalg.svd(wak.to_numpy())[0], FLOAT)

    a_blk = u.H @ ctx.a @ v
    w_blk = v.H @ ctx.w @ u
    scale = max(ctx.a.norm(), ctx.w.norm(), 1.0)
    if a_blk.sub(r, m, 0, r).norm() > tol * scale or \
       w_blk.sub(r, n, 0, r).norm() > tol * scale:
        raise VerificationError("block triangular structure not achieved")

    a1, a2, a3 = a_blk.sub(0, r, 0, r), a_blk.sub(0, r, r, n), a_blk.sub(r, m, r, n)
    w1, w2, w3 = w_blk.sub(0, r, 0, r), w_blk.sub(0, r, r, m), w_blk.sub(r, n, r, m)
    if rank(a1) < r or rank(w1) < r:
        raise VerificationError("leading blocks are singular")
    c = a1 @ w1
    e = a1 @ w2 + a2 @ w3
    nblk = a3 @ w3
    rblk = w1 @ a1
    sblk = w1 @ a2 + w2 @ a3
    tblk = w3 @ a3
    if mat_pow(nblk, kap).norm() > tol * max(1.0, scale ** kap) or \
       mat_pow(tblk, kap).norm() > tol * max(1.0, scale ** kap):
        raise VerificationError("trailing blocks are not nilpotent")

    kappa = ctx.kappa
    ehat = Matrix.zeros(r, m - r, FLOAT)
    for i in range(kappa):
        ehat = ehat + mat_pow(c, kappa - i) @ e @ mat_pow(nblk, i)
    a3_pinv = _block_pinv(a3, scale)
    eye_q = Matrix.eye(n - r, FLOAT)
    gram = a1 @ a1.H + a2 @ (eye_q - a3_pinv @ a3) @ a2.H
    delta = inverse(gram) if r else Matrix.zeros(0, 0, FLOAT)
    return WCepDecomposition(ctx=ctx, u=u, v=v, r_split=r, a1=a1, a2=a2,
                             a3=a3, w1=w1, w2=w2, w3=w3, c=c, e=e, nblk=nblk,
                             rblk=rblk, sblk=sblk, tblk=tblk, ehat=ehat,
                             delta=delta)


def block_form_w1231k(dec: WCepDecomposition, x4: Matrix,
                      x2: Matrix | None = None) -> Matrix:
    """Assemble a {1,2,3,1^kappa}^W member from its free trailing block.

    ``x4`` must be a {1,2,3}-inverse of W3 N (verified).  ``x2`` defaults
    to the value forced by Hermitian-ness of WAWX; a supplied ``x2`` must
    satisfy x2 == x2 W3 N x4.  The assembled member is verified before
    being returned.
    """
    ctx = dec.ctx
    m, n = ctx.a.shape
    r = dec.r_split
    if x4.shape != (m - r, n - r):
        raise ShapeError(f"x4 must be {(m - r, n - r)}")
    w3n = dec.w3 @ dec.nblk
    rep = axioms.check_all(["1", "2", "3"], w3n, x4)
    if not rep.overall:
        raise ValueError(f"x4 is not a {{1,2,3}}-inverse of W3 N: {rep}")
    w1c = dec.w1 @ dec.c
    forced = -inverse(w1c) @ (dec.w1 @ dec.e + dec.w2 @ dec.nblk) @ x4
    if x2 is None:
        x2 = forced
    elif x2.shape != (r, n - r):
        raise ShapeError(f"x2 must be {(r, n - r)}")
    if not equal(x2, x2 @ w3n @ x4):
        raise ValueError("x2 does not satisfy x2 == x2 W3 N x4")
    x11 = inverse(dec.w1 @ dec.a1 @ dec.w1)
    cand = dec.assemble(x11, x2, Matrix.zeros(m - r, r, ctx.backend), x4)
    rep = is_w1231k(ctx, cand, ctx.kappa)
    if not rep.overall:
        raise VerificationError(f"assembled member failed verification: {rep}")
    return cand


# -- recovery and EP checks -----------------------------------------------------


def recover_from_member(ctx: WeightedContext, x: Matrix, k: int):
    """Recover (A^{D,W}, A^{D,+,W}, A^{c,+,W}) from any {1,2,3,1^k}^W member.

    The recovered triple is member-independent; the first component is
    asserted to equal w_drazin(ctx).
    """
    rep = is_w1231k(ctx, x, k)
    if not rep.overall:
        raise ValueError(f"x is not a {{1,2,3,1^k}}^W-inverse: {rep}")
    a, w = ctx.a, ctx.w
    adag = a_mp(ctx)
    xw = x @ w
    wx = w @ x
    d_w = mat_pow(xw, k + 2) @ mat_pow(ctx.aw, k) @ a
    dmp_w = mat_pow(wx, k + 1) @ mat_pow(ctx.wa, k + 1) @ adag
    cmp_w = adag @ a @ mat_pow(wx, k + 1) @ mat_pow(ctx.wa, k + 1) @ adag
    if not equal(d_w, w_drazin(ctx)):
        raise VerificationError("recovered weighted Drazin inverse disagrees")
    return d_w, dmp_w, cmp_w


@dataclass(frozen=True)
class EpReport:
    """EP-ness flags for a weighted pair plus the collapse equalities."""

    generalized_ep: bool
    k_ep_aw: bool
    k_ep_wa: bool
    collapse: tuple | None    # ((WAW)+ == canonical 123, canonical 123 == 124)


def ep_checks(ctx: WeightedContext, x: Matrix, k: int) -> EpReport:
    """Generalized-EP and k-EP style checks driven by a family member."""
    rep = is_w1231k(ctx, x, k)
    if not rep.overall:
        raise ValueError(f"x is not a {{1,2,3,1^k}}^W-inverse: {rep}")
    xw_awk = mat_pow(x @ ctx.w, k) @ mat_pow(ctx.aw, k)
    gep = is_hermitian(xw_awk) if xw_awk.rows == xw_awk.cols else False

    def k_ep(mat):
        j = index(mat)
        mdag = moore_penrose(mat)
        mk = mat_pow(mat, j)
        return equal(mk @ mdag, mdag @ mk)

    ep_aw = k_ep(ctx.aw)
    ep_wa = k_ep(ctx.wa)
    collapse = None
    if ep_aw and ep_wa:
        collapse = (equal(waw_mp(ctx), canonical_w1231k(ctx)),
                    equal(canonical_w1231k(ctx), canonical_w124k1(ctx)))
    return EpReport(generalized_ep=gep, k_ep_aw=ep_aw, k_ep_wa=ep_wa,
                    collapse=collapse)
