"""Weighted generalized bilateral inverses X1 W A W X2 and their duals.

X1 and X2 are weighted inner ({1^W}: AWXWA = A) and/or outer
({2^W}: XWAWX = X) inverses of A.  Class membership is verified when a
spec is constructed, so downstream theorems can dispatch on the declared
classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import axioms
from .matrix import (Matrix, ShapeError, SubspaceRelation, VerificationError,
                     WeightedContext, equal, null_subset, range_subset)

INNER = "1W"
OUTER = "2W"


@dataclass(frozen=True)
class BilateralSpec:
    """A verified (X1, X2) pair with their inverse-class memberships."""

    x1: Matrix
    x2: Matrix
    x1_class: frozenset
    x2_class: frozenset


def _detect_classes(ctx, x):
    classes = set()
    if axioms.check("1W", ctx.a, x, ctx=ctx).holds:
        classes.add(INNER)
    if axioms.check("2W", ctx.a, x, ctx=ctx).holds:
        classes.add(OUTER)
    return frozenset(classes)


def bilateral_spec(ctx: WeightedContext, x1: Matrix, x2: Matrix,
                   x1_class=None, x2_class=None) -> BilateralSpec:
    """Build a BilateralSpec, verifying the declared class memberships.

    With classes omitted, memberships are detected; each factor must lie
    in A{1^W} or A{2^W}.
    """
    for x in (x1, x2):
        if x.shape != ctx.a.shape:
            raise ShapeError("bilateral factors must have the shape of A")
    found1 = _detect_classes(ctx, x1)
    found2 = _detect_classes(ctx, x2)
    want1 = frozenset(x1_class) if x1_class is not None else found1
    want2 = frozenset(x2_class) if x2_class is not None else found2
    if not want1 or not want1 <= found1:
        raise VerificationError(
            f"x1 class {set(want1)} not verified (found {set(found1)})")
    if not want2 or not want2 <= found2:
        raise VerificationError(
            f"x2 class {set(want2)} not verified (found {set(found2)})")
    return BilateralSpec(x1=x1, x2=x2, x1_class=want1, x2_class=want2)


def bilateral(ctx: WeightedContext, spec: BilateralSpec) -> Matrix:
    """X1 W A W X2."""
    return spec.x1 @ ctx.w @ ctx.a @ ctx.w @ spec.x2


def dual_bilateral(ctx: WeightedContext, spec: BilateralSpec) -> Matrix:
    """X2 W A W X1."""
    return spec.x2 @ ctx.w @ ctx.a @ ctx.w @ spec.x1


def solve_bilateral_system(ctx: WeightedContext, spec: BilateralSpec) -> Matrix:
    """For X1 in A{2^W}, X2 in A{1^W}: the system

        X W A W X = X,   X W A = X1 W A,   A W X W A W X = A W (X1 W A W X2)

    has the bilateral product as its unique solution; the product is
    returned after all three equations are verified.
    """
    if OUTER not in spec.x1_class or INNER not in spec.x2_class:
        raise ValueError("requires x1 in A{2^W} and x2 in A{1^W}")
    g = bilateral(ctx, spec)
    w, a = ctx.w, ctx.a
    ok = (equal(g @ w @ a @ w @ g, g)
          and equal(g @ w @ a, spec.x1 @ w @ a)
          and equal(a @ w @ g @ w @ a @ w @ g, a @ w @ g))
    if not ok:
        raise VerificationError("bilateral uniqueness system failed")
    return g


def solve_dual_bilateral_system(ctx: WeightedContext,
                                spec: BilateralSpec) -> Matrix:
    """Dual system for X2 W A W X1 (X1 in A{2^W}, X2 in A{1^W}):

        X W A W X = X,   A W X = A W X1,   X W A W X W A = (X2 W A W X1) W A

    The third equation is the left-right mirror of the primal system's;
    the printed source form (which right-multiplies by the product) is
    dimensionally consistent but fails on plain examples, so the mirror
    is what gets verified.
    """
    if OUTER not in spec.x1_class or INNER not in spec.x2_class:
        raise ValueError("requires x1 in A{2^W} and x2 in A{1^W}")
    g = dual_bilateral(ctx, spec)
    w, a = ctx.w, ctx.a
    ok = (equal(g @ w @ a @ w @ g, g)
          and equal(a @ w @ g, a @ w @ spec.x1)
          and equal(g @ w @ a @ w @ g @ w @ a, g @ w @ a))
    if not ok:
        raise VerificationError("dual bilateral uniqueness system failed")
    return g


@dataclass(frozen=True)
class SelfDualityReport:
    """Self-duality verdict with the theorem conditions computed
    independently; ``equivalent`` says every computed condition agreed."""

    variant: str                      # outer-inner | inner-inner | outer-x2
    self_dual: bool
    cond_ii: bool | None
    cond_iii: tuple | None            # pair of SubspaceRelation
    equivalent: bool


def self_duality(ctx: WeightedContext, spec: BilateralSpec) -> SelfDualityReport:
    """Evaluate the self-duality criteria matching the spec's classes.

    outer-inner (X1 in {2^W}, X2 in {1^W}):
        (ii) X1 == both products; (iii) N(WAWX2) <= N(X1) and
        R(X1) <= R(X2 WAW).
    inner-inner (both {1^W}): (ii) AWX2 == AWX1 and X1WA == X2WA.
    outer-x2 (X2 in {2^W}): (ii) N(X2) <= N(dual) and R(primal) <= R(X2).
    """
    w, a = ctx.w, ctx.a
    g = bilateral(ctx, spec)
    d = dual_bilateral(ctx, spec)
    self_dual = equal(g, d)
    if OUTER in spec.x1_class and INNER in spec.x2_class:
        variant = "outer-inner"
        cond_ii = equal(spec.x1, g) and equal(spec.x1, d)
        rel1 = null_subset(w @ a @ w @ spec.x2, spec.x1)
        rel2 = range_subset(spec.x1, spec.x2 @ w @ a @ w)
        cond_iii = (rel1, rel2)
        agree = (self_dual == cond_ii == (rel1.holds and rel2.holds))
    elif spec.x1_class == frozenset({INNER}) and INNER in spec.x2_class:
        variant = "inner-inner"
        cond_ii = (equal(a @ w @ spec.x2, a @ w @ spec.x1)
                   and equal(spec.x1 @ w @ a, spec.x2 @ w @ a))
        cond_iii = None
        agree = self_dual == cond_ii
    elif OUTER in spec.x2_class:
        variant = "outer-x2"
        rel1 = null_subset(spec.x2, d)
        rel2 = range_subset(g, spec.x2)
        cond_ii = None
        cond_iii = (rel1, rel2)
        agree = self_dual == (rel1.holds and rel2.holds)
    else:
        raise ValueError("spec classes match no self-duality theorem")
    return SelfDualityReport(variant=variant, self_dual=self_dual,
                             cond_ii=cond_ii, cond_iii=cond_iii,
                             equivalent=agree)
