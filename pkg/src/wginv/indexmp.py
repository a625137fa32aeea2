"""W-weighted index-MP, MP-index and MP-index-MP matrices.

For A (m x n), weight W (n x m) and kappa = max(ind(AW), ind(WA)):

  * W-kappa-MP      (WA)^{kappa+1} A^+
  * W-MP-kappa      A^+ (AW)^{kappa+1}
  * W-MP-kappa-MP   A^+ (AW)^{kappa+1} A A^+

Each definition is asserted against its uniqueness system; the module
also evaluates every characterization system of these matrices, their
projector identities, and the decomposition-based block representations.
"""

from __future__ import annotations

from .classical import moore_penrose
from .matrix import (Matrix, ShapeError, VerificationError, WeightedContext,
                     block, equal, mat_pow, null_basis, null_equal,
                     projector_onto, range_basis, range_equal, range_subset,
                     rank)
from .wfamily import (WCepDecomposition, _block_pinv, a_mp, aw_drazin,
                      w_drazin, wa_drazin)

INDEX_MP_KINDS = ("k-mp", "mp-k", "mp-k-mp")


# -- composite helpers (WDMP / WMPD / WCMP) -----------------------------------


def w_dmp(ctx: WeightedContext) -> Matrix:
    """Weighted DMP matrix W A^{D,W} W A A^+."""
    return ctx.cached(
        "w_dmp", lambda: ctx.w @ w_drazin(ctx) @ ctx.w @ ctx.a @ a_mp(ctx))


def w_mpd(ctx: WeightedContext) -> Matrix:
    """Weighted MPD matrix A^+ A W A^{D,W} W."""
    return ctx.cached(
        "w_mpd", lambda: a_mp(ctx) @ ctx.a @ ctx.w @ w_drazin(ctx) @ ctx.w)


def w_cmp(ctx: WeightedContext) -> Matrix:
    """Weighted CMP matrix A^+ A W A^{D,W} W A A^+."""
    return ctx.cached(
        "w_cmp",
        lambda: a_mp(ctx) @ ctx.a @ ctx.w @ w_drazin(ctx) @ ctx.w @ ctx.a @ a_mp(ctx))


# -- the three index-MP style inverses ----------------------------------------


def _pieces(ctx):
    k = ctx.kappa
    adag = a_mp(ctx)
    wad = wa_drazin(ctx)
    awd = aw_drazin(ctx)
    kmat = ctx.a @ mat_pow(wad, k + 1)       # A ((WA)^D)^{k+1},  m x n
    kpmat = mat_pow(awd, k + 1) @ ctx.a      # ((AW)^D)^{k+1} A,  m x n
    return k, adag, wad, awd, kmat, kpmat


def w_k_mp(ctx: WeightedContext) -> Matrix:
    """(WA)^{kappa+1} A^+, asserted against its three-equation system."""
    def build():
        k, adag, wad, awd, kmat, _ = _pieces(ctx)
        x = mat_pow(ctx.wa, k + 1) @ adag
        ok = (equal(x @ kmat @ x, x)
              and equal(kmat @ x, ctx.a @ wad @ ctx.w @ ctx.a @ adag)
              and equal(x @ ctx.a, mat_pow(ctx.wa, k + 1)))
        if not ok:
            raise VerificationError("W-kappa-MP uniqueness system failed")
        return x
    return ctx.cached("w_k_mp", build)


def w_mp_k(ctx: WeightedContext) -> Matrix:
    """A^+ (AW)^{kappa+1}, asserted against its three-equation system."""
    def build():
        k, adag, wad, awd, _, kpmat = _pieces(ctx)
        x = adag @ mat_pow(ctx.aw, k + 1)
        ok = (equal(x @ kpmat @ x, x)
              and equal(x @ kpmat, adag @ ctx.a @ ctx.w @ awd @ ctx.a)
              and equal(ctx.a @ x, mat_pow(ctx.aw, k + 1)))
        if not ok:
            raise VerificationError("W-MP-kappa uniqueness system failed")
        return x
    return ctx.cached("w_mp_k", build)


def w_mp_k_mp(ctx: WeightedContext) -> Matrix:
    """A^+ (AW)^{kappa+1} A A^+, asserted against its system."""
    def build():
        k, adag, wad, awd, kmat, _ = _pieces(ctx)
        x = adag @ mat_pow(ctx.aw, k + 1) @ ctx.a @ adag
        ok = (equal(x @ kmat @ x, x)
              and equal(x @ kmat, adag @ ctx.a @ ctx.w @ ctx.a @ wad)
              and equal(ctx.a @ x, mat_pow(ctx.aw, k + 1) @ ctx.a @ adag))
        if not ok:
            raise VerificationError("W-MP-kappa-MP uniqueness system failed")
        return x
    return ctx.cached("w_mp_k_mp", build)


# -- characterization systems ---------------------------------------------------


def check_characterizations(ctx: WeightedContext, which: str,
                            x: Matrix) -> dict:
    """Evaluate every characterization system for one of the three
    inverses on a candidate x.

    Returns {system name: bool} plus ``all_equal`` (the equivalence
    verdict: every system agrees).  System (i) is direct equality with
    the definition formula.
    """
    if which not in INDEX_MP_KINDS:
        raise ValueError(f"which must be one of {INDEX_MP_KINDS}")
    a, w = ctx.a, ctx.w
    if x.shape != (a.cols, a.rows):
        raise ShapeError(f"candidate must be {(a.cols, a.rows)}")
    k, adag, wad, awd, kmat, kpmat = _pieces(ctx)
    aw, wa = ctx.aw, ctx.wa
    adw = w_drazin(ctx)
    pw = mat_pow(wa, k + 1)
    pa = mat_pow(aw, k + 1)
    wak = mat_pow(wa, k)
    awk = mat_pow(aw, k)

    if which == "k-mp":
        target = w_k_mp(ctx)
        proj = w @ adw @ w @ a            # W A^{D,W} W A,  n x n
        systems = {
            "thm_ii": (equal(kmat @ x @ kmat, kmat)
                       and equal(x @ kmat @ x, x)
                       and equal(kmat @ x, a @ wad @ w @ a @ adag)
                       and equal(x @ a, pw)),
            "thm_iii": (equal(x @ kmat @ x, x)
                        and equal(kmat @ x, a @ wad @ w @ a @ adag)
                        and equal(x @ kmat, proj)),
            "thm_iv": (equal(proj @ x, x)
                       and equal(a @ x, pa @ a @ adag)),
            "cor_ii": (equal(proj @ x, x)
                       and equal(kmat @ x, a @ w @ adw @ w @ a @ adag)),
            "cor_iii": (equal(x @ a @ adag, x) and equal(x @ a, pw)),
            "cor_iv": (equal(x @ a @ wad @ w @ a @ adag, x)
                       and equal(x @ kmat, proj)),
            "cor_v": (equal(x @ kmat @ wak, wak)
                      and equal(x @ a @ wad @ w @ a @ adag, x)),
            "cor_vi": (equal(proj @ x, x)
                       and equal(wad @ x, wak @ adag)),
        }
    elif which == "mp-k":
        target = w_mp_k(ctx)
        proj = a @ w @ adw @ w            # A W A^{D,W} W,  m x m
        systems = {
            "thm_ii": (equal(kpmat @ x @ kpmat, kpmat)
                       and equal(x @ kpmat @ x, x)
                       and equal(x @ kpmat, adag @ a @ w @ awd @ a)
                       and equal(a @ x, pa)),
            "thm_iii": (equal(x @ kpmat @ x, x)
                        and equal(x @ kpmat, adag @ a @ w @ awd @ a)
                        and equal(kpmat @ x, proj)),
            "thm_iv": (equal(x @ proj, x)
                       and equal(x @ a, adag @ a @ pw)),
            "cor_ii": (equal(x @ proj, x)
                       and equal(x @ kpmat, adag @ a @ w @ awd @ a)),
            "cor_iii": (equal(adag @ a @ x, x) and equal(a @ x, pa)),
            "cor_iv": (equal(adag @ a @ w @ awd @ a @ x, x)
                       and equal(kpmat @ x, proj)),
            "cor_v": (equal(awk @ kpmat @ x, awk)
                      and equal(adag @ a @ w @ awd @ a @ x, x)),
            "cor_vi": (equal(x @ proj, x)
                       and equal(x @ awd, adag @ awk)),
        }
    else:
        target = w_mp_k_mp(ctx)
        systems = {
            "thm_ii": (equal(x @ kpmat @ x, x)
                       and equal(kpmat @ x, awd @ aw @ a @ adag)
                       and equal(a @ x, pa @ a @ adag)),
            "thm_iii": (equal(x @ kpmat @ x, x)
                        and equal(kpmat @ x, awd @ aw @ a @ adag)
                        and equal(x @ kmat, adag @ a @ w @ a @ wad)),
            "thm_iv": (equal(adag @ a @ x, x)
                       and equal(a @ x, pa @ a @ adag)),
            "cor_ii": (equal(x @ a, adag @ a @ pw)
                       and equal(x @ a @ adag, x)),
            "cor_iii": (equal(x @ awd @ aw @ a @ adag, x)
                        and equal(x @ kmat, adag @ a @ w @ a @ wad)),
            "cor_iv": (equal(x @ awd @ aw @ a @ adag, x)
                       and equal(x @ kmat @ wak, adag @ a @ wak)),
            "cor_v": (equal(adag @ awd @ aw @ a @ x, x)
                      and equal(kpmat @ x, awd @ aw @ a @ adag)),
            "cor_vi": (equal(adag @ awd @ aw @ a @ x, x)
                       and equal(awk @ kpmat @ x, awk @ a @ adag)),
        }
    systems["definition"] = equal(x, target)
    verdicts = set(systems.values())
    systems["all_equal"] = len(verdicts) == 1
    return systems


# -- decomposition-based representations ----------------------------------------


def via_decomposition(dec: WCepDecomposition, which: str,
                      tol: float = 1e-8) -> Matrix:
    """Assemble the block representation of one of the three inverses from
    a weighted core-EP decomposition and check it against the direct
    definition.

    The W-kappa-MP off-diagonal sum uses every power term of the
    triangular product (the single-term display truncation in the source
    material does not reproduce the definition for kappa >= 2).
    """
    if which not in INDEX_MP_KINDS:
        raise ValueError(f"which must be one of {INDEX_MP_KINDS}")
    ctx = dec.ctx
    kap = dec.kappa
    m, n = ctx.a.shape
    r = dec.r_split
    scale = max(ctx.a.norm(), ctx.w.norm(), 1.0)
    a1, a2, a3 = dec.a1, dec.a2, dec.a3
    a3p = _block_pinv(a3, scale)
    eye_q = Matrix.eye(n - r, ctx.backend)
    delta = dec.delta
    g2 = (eye_q - a3p @ a3) @ a2.H @ delta
    g4 = a3p - (eye_q - a3p @ a3) @ a2.H @ delta @ a2 @ a3p

    if which == "k-mp":
        rk1 = mat_pow(dec.rblk, kap + 1)
        shat = Matrix.zeros(r, n - r, ctx.backend)
        for i in range(kap):
            shat = shat + mat_pow(dec.rblk, kap - i) @ dec.sblk @ mat_pow(dec.tblk, i)
        top_left = rk1 @ a1.H @ delta + shat @ g2
        top_right = -(rk1 @ a1.H @ delta @ a2 @ a3p) + shat @ g4
        blocks = [[top_left, top_right],
                  [Matrix.zeros(n - r, r, ctx.backend),
                   Matrix.zeros(n - r, m - r, ctx.backend)]]
        direct = w_k_mp(ctx)
    else:
        ck1 = mat_pow(dec.c, kap + 1)
        if which == "mp-k":
            tail = dec.ehat
        else:
            tail = dec.ehat @ a3 @ a3p        # projector keeps only R(A3)
        blocks = [[a1.H @ delta @ ck1, a1.H @ delta @ tail],
                  [g2 @ ck1, g2 @ tail]]
        direct = w_mp_k(ctx) if which == "mp-k" else w_mp_k_mp(ctx)
    cand = dec.v @ block(blocks) @ dec.u.H
    if not equal(cand, direct, tol=tol):
        raise VerificationError(
            f"decomposition representation of {which} does not match the "
            f"direct definition")
    return cand


# -- projector identities ---------------------------------------------------------


def projector_checks(ctx: WeightedContext) -> dict:
    """Verify the projector/outer-inverse identities of the three inverses.

    Returns a {check name: bool} record; ``all`` is their conjunction.
    The m x m projector of the W-kappa-MP pair has range R((AW)^kappa)
    (the proof's chain), not the n-dimensional label of the statement.
    """
    k, adag, wad, awd, kmat, kpmat = _pieces(ctx)
    x1 = w_k_mp(ctx)
    x2 = w_mp_k(ctx)
    x3 = w_mp_k_mp(ctx)
    adw = w_drazin(ctx)
    awk = mat_pow(ctx.aw, k)
    wak = mat_pow(ctx.wa, k)
    dmp = adw @ adag                   # A^{D,W} A^+,  m x m
    mpd = adag @ adw                   # A^+ A^{D,W},  n x n

    out = {}

    def projector(name, p, range_of, null_of):
        out[f"{name}_idempotent"] = equal(p @ p, p)
        out[f"{name}_range"] = range_equal(p, range_of).holds
        out[f"{name}_null"] = null_equal(p, null_of).holds

    projector("kmp_left", kmat @ x1, awk, dmp)
    projector("kmp_right", x1 @ kmat, wak, wak)
    projector("mpk_left", kpmat @ x2, awk, awk)
    projector("mpk_right", x2 @ kpmat, mpd, wak)
    projector("mpkmp_left", kpmat @ x3, awk, dmp)
    projector("mpkmp_right", x3 @ kmat, mpd, wak)
    out["kmp_outer"] = equal(x1 @ kmat @ x1, x1)
    out["kmp_inner"] = equal(kmat @ x1 @ kmat, kmat)
    out["rank_equalities"] = (rank(x1) == rank(x2) == rank(kmat))
    out["all"] = all(out.values())
    return out


def solve_projector_system(ctx: WeightedContext, which: str) -> Matrix:
    """Solve the projector-equation system whose unique solution is the
    W-kappa-MP (``"k-mp"``) or W-MP-kappa (``"mp-k"``) matrix.

    The projector target is built independently from range/null bases and
    the system is solved by restricting the unknown to its prescribed
    column space; nothing here reuses the definition formulas.
    """
    if which not in ("k-mp", "mp-k"):
        raise ValueError("which must be 'k-mp' or 'mp-k'")
    k, adag, wad, awd, kmat, kpmat = _pieces(ctx)
    adw = w_drazin(ctx)
    if which == "k-mp":
        coeff = kmat                                    # A((WA)^D)^{k+1}
        proj = projector_onto(range_basis(mat_pow(ctx.aw, k)),
                              null_basis(adw @ adag))
        col_space = range_basis(mat_pow(ctx.wa, k))
    else:
        coeff = kpmat                                   # ((AW)^D)^{k+1}A
        proj = projector_onto(range_basis(mat_pow(ctx.aw, k)),
                              null_basis(mat_pow(ctx.aw, k)))
        col_space = range_basis(adag @ adw)
    reduced = coeff @ col_space
    z = moore_penrose(reduced) @ proj
    x = col_space @ z
    if not equal(coeff @ x, proj):
        raise VerificationError("projector system is inconsistent")
    if not range_subset(x, col_space).holds:
        raise VerificationError("solution leaves the prescribed column space")
    return x
