"""M-weighted core and N-weighted dual-core inverses, plus the
reverse-order-law condition checker for them.

The M-weighted core inverse of an index-1 matrix A is the unique X with
(MAX)* = MAX, XA^2 = A and AX^2 = X.  Two computation routes are offered:
a closed form through the Moore-Penrose inverse of A*MA^2, and the
echelon-based route with a free parameter block; uniqueness makes them
agree, which the test-suite exploits.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import axioms
from .classical import group_inverse, moore_penrose
from .matrix import (ExistenceError, Matrix, MetricMatrix, ShapeError,
                     SubspaceRelation, VerificationError, equal, index,
                     inverse, one_inverse, range_equal, range_subset)

VARIANTS = ("closed-form", "algorithm1")


def m_weighted_core(a: Matrix, m: MetricMatrix, variant: str = "closed-form",
                    l: Matrix | None = None) -> Matrix:
    """M-weighted core inverse of an index <= 1 matrix.

    ``variant`` picks the {1}-inverse used for A (A*MA^2)^(1) A*M:
    ``"closed-form"`` takes the Moore-Penrose inverse, ``"algorithm1"``
    runs echelon elimination with the free block ``l``.  The result is
    verified against the defining equations; failure (possible for
    indefinite metrics) raises ExistenceError.
    """
    if a.rows != a.cols:
        raise ShapeError("M-weighted core inverse needs a square matrix")
    if m.dim != a.rows:
        raise ShapeError("metric dimension mismatch")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if index(a) > 1:
        raise ExistenceError("no M-weighted core inverse: index exceeds 1")
    b = a.H @ m.m @ a @ a
    q = moore_penrose(b) if variant == "closed-form" else one_inverse(b, l)
    x = a @ q @ a.H @ m.m
    if not _is_m_core(a, m, x):
        raise ExistenceError("M-weighted core inverse does not exist "
                             "for this metric")
    return x


def _is_m_core(a, m, x):
    return (axioms.check("3M", a, x, metric=m).holds
            and axioms.check("6", a, x).holds
            and axioms.check("7", a, x).holds)


def _is_n_dual_core(a, n, x):
    return (axioms.check("4N", a, x, metric_n=n).holds
            and axioms.check("8", a, x).holds
            and axioms.check("9", a, x).holds)


def n_weighted_dual_core(a: Matrix, n: MetricMatrix) -> Matrix:
    """N-weighted dual core inverse: unique X with (NXA)* = NXA,
    A^2 X = A, X^2 A = X.

    Computed as the conjugate-transpose dual of the M-weighted core:
    X is the N-dual core of A iff X* is the (N^-1)-weighted core of A*.
    """
    if a.rows != a.cols:
        raise ShapeError("N-weighted dual core inverse needs a square matrix")
    if n.dim != a.rows:
        raise ShapeError("metric dimension mismatch")
    dual_metric = MetricMatrix(n.inv())
    x = m_weighted_core(a.H, dual_metric).H
    if not _is_n_dual_core(a, n, x):
        raise ExistenceError("N-weighted dual core inverse does not exist "
                             "for this metric")
    return x


def m_core_from_13M(a: Matrix, m: MetricMatrix, x: Matrix) -> Matrix:
    """Rebuild the M-weighted core inverse from any x in A{1, 3^M}.

    Returns A^# A x and checks it equals m_weighted_core(a, m).
    """
    if not (axioms.check("1", a, x).holds
            and axioms.check("3M", a, x, metric=m).holds):
        raise ValueError("x is not a {1, 3^M}-inverse of a")
    result = group_inverse(a) @ a @ x
    expected = m_weighted_core(a, m)
    if not equal(result, expected):
        raise VerificationError("A^# A x disagrees with the M-weighted core")
    return result


@dataclass(frozen=True)
class RolReport:
    """Reverse-order-law evidence for a pair (a, b) under a metric.

    Every field is computed from first principles; none is inferred
    from the others.
    """

    rol_holds: bool
    range_incl_1: SubspaceRelation     # R(B-core A) subseteq R(AB)
    range_incl_2: SubspaceRelation     # R(AB) subseteq R(BA)
    commute_m: bool                    # M B B-core A A-core == M A A-core B B-core
    commute_plain: bool                # same without the metric factor
    c_membership: tuple                # (in C{3^M}, in C{6}) for C = A B B-core
    range_star_cond: bool              # R(A* M B) == R(M B A*)
    indices: tuple                     # (ind a, ind b, ind ab)


def check_rol_m_core(a: Matrix, b: Matrix, m: MetricMatrix) -> RolReport:
    """Evaluate the reverse-order-law conditions for the M-weighted core.

    Requires index <= 1 for a, b and ab (the cores must exist).
    """
    if a.shape != b.shape or a.rows != a.cols:
        raise ShapeError("a, b must be square and of equal size")
    ind_a, ind_b = index(a), index(b)
    ab = a @ b
    ind_ab = index(ab)
    a_core = m_weighted_core(a, m)
    b_core = m_weighted_core(b, m)
    ab_core = m_weighted_core(ab, m)

    rol = equal(ab_core, b_core @ a_core)
    incl1 = range_subset(b_core @ a, ab)
    incl2 = range_subset(ab, b @ a)
    bbc = b @ b_core
    aac = a @ a_core
    commute_m = equal(m.m @ bbc @ aac, m.m @ aac @ bbc)
    commute_plain = equal(bbc @ aac, aac @ bbc)
    c = a @ bbc
    xc = bbc @ a_core
    membership = (axioms.check("3M", c, xc, metric=m).holds,
                  axioms.check("6", c, xc).holds)
    star = range_equal(a.H @ m.m @ b, m.m @ b @ a.H).holds
    return RolReport(rol_holds=rol, range_incl_1=incl1, range_incl_2=incl2,
                     commute_m=commute_m, commute_plain=commute_plain,
                     c_membership=membership, range_star_cond=star,
                     indices=(ind_a, ind_b, ind_ab))


def check_rol_n_dual(a: Matrix, b: Matrix, n: MetricMatrix) -> RolReport:
    """Dual reverse-order-law check for the N-weighted dual core.

    X is the N-dual core of A iff X* is the N^-1 core of A*, so the dual
    statement for (a, b, N) is the primal statement for (b*, a*, N^-1);
    the report fields are the primal fields of that conjugate problem.
    """
    dual_metric = MetricMatrix(n.inv())
    return check_rol_m_core(b.H, a.H, dual_metric)
