"""Machine-checkable evaluation of the defining equations for generalized
inverses, both plain and weighted.

Each label names one matrix identity (``"1"`` for AZA = A, ``"3M"`` for
(MAZ)* = MAZ, ``"1kW"`` for ZW(AW)^{k+1} = (AW)^k, ...).  ``check``
evaluates a single label, ``classify`` evaluates every label whose shape
constraints are satisfiable and reports the rest as skipped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import (FLOAT_EQ_TOL, EXACT, BackendError, Matrix, MetricMatrix,
                     ShapeError, WeightedContext, index, mat_pow)

PLAIN_LABELS = ("1", "2", "3", "4", "3M", "4N", "5", "1k", "6", "7", "8", "9")
WEIGHTED_LABELS = ("1W", "2W", "3W", "4W", "5W", "6W", "1kW", "kW1")
ALL_LABELS = PLAIN_LABELS + WEIGHTED_LABELS

_SQUARE_ONLY = {"5", "1k", "6", "7", "8", "9"}
_K_LABELS = {"1k", "1kW", "kW1"}


@dataclass(frozen=True)
class EquationLabel:
    """A Table-1/Table-2 equation tag plus the optional exponent k."""

    tag: str
    k: int | None = None

    def __post_init__(self):
        if self.tag not in ALL_LABELS:
            raise ValueError(f"unknown equation label {self.tag!r}")
        if self.k is not None and self.k < 0:
            raise ValueError("k must be non-negative")

    def __str__(self):
        if self.tag in _K_LABELS and self.k is not None:
            return f"{self.tag}[k={self.k}]"
        return self.tag


@dataclass(frozen=True)
class LabelCheck:
    """Verdict for one equation label."""

    label: str
    holds: bool
    residual: float
    k: int | None = None


@dataclass(frozen=True)
class VerificationReport:
    """Per-label verdicts; ``overall`` is their conjunction."""

    entries: tuple
    skipped: tuple = ()

    @property
    def overall(self) -> bool:
        return all(e.holds for e in self.entries)

    @property
    def held(self) -> set:
        return {e.label for e in self.entries if e.holds}

    def entry(self, label: str) -> LabelCheck:
        for e in self.entries:
            if e.label == label:
                return e
        raise KeyError(label)

    def __str__(self):
        parts = [f"{e.label}={'pass' if e.holds else 'FAIL'}" for e in self.entries]
        if self.skipped:
            parts.append("skipped:" + ",".join(self.skipped))
        return " ".join(parts)


def _as_label(label, k=None) -> EquationLabel:
    if isinstance(label, EquationLabel):
        return label if k is None else EquationLabel(label.tag, k)
    return EquationLabel(str(label), k)


def residual_norm(lhs: Matrix, rhs: Matrix) -> float:
    """Frobenius norm of LHS-RHS normalized by max(1, ||LHS||_F)."""
    return (lhs - rhs).norm() / max(1.0, lhs.norm())


def _sides(tag, a, x, w, m_metric, n_metric, k):
    if tag == "1":
        return a @ x @ a, a
    if tag == "2":
        return x @ a @ x, x
    if tag == "3":
        p = a @ x
        return p, p.H
    if tag == "4":
        p = x @ a
        return p, p.H
    if tag == "3M":
        p = m_metric.m @ a @ x
        return p, p.H
    if tag == "4N":
        p = n_metric.m @ x @ a
        return p, p.H
    if tag == "5":
        return a @ x, x @ a
    if tag == "1k":
        return x @ mat_pow(a, k + 1), mat_pow(a, k)
    if tag == "6":
        return x @ a @ a, a
    if tag == "7":
        return a @ x @ x, x
    if tag == "8":
        return a @ a @ x, a
    if tag == "9":
        return x @ x @ a, x
    if tag == "1W":
        return a @ w @ x @ w @ a, a
    if tag == "2W":
        return x @ w @ a @ w @ x, x
    if tag == "3W":
        p = w @ a @ w @ x
        return p, p.H
    if tag == "4W":
        p = x @ w @ a @ w
        return p, p.H
    if tag == "5W":
        return a @ w @ x, x @ w @ a
    if tag == "6W":
        wx = w @ x
        return a @ wx @ wx, x
    if tag == "1kW":
        aw = a @ w
        return x @ w @ mat_pow(aw, k + 1), mat_pow(aw, k)
    if tag == "kW1":
        wa = w @ a
        return mat_pow(wa, k + 1) @ w @ x, mat_pow(wa, k)
    raise ValueError(f"unknown equation label {tag!r}")


def _shape_ok(tag, a, x, ctx, m_metric, n_metric):
    if tag in WEIGHTED_LABELS:
        if ctx is None:
            return False
        w = ctx.w
        if w.rows != a.cols or w.cols != a.rows:
            return False
        return x.shape == a.shape
    if x.shape != (a.cols, a.rows):
        return False
    if tag in _SQUARE_ONLY and a.rows != a.cols:
        return False
    if tag == "3M" and (m_metric is None or m_metric.dim != a.rows):
        return False
    if tag == "4N" and (n_metric is None or n_metric.dim != a.cols):
        return False
    return True


def _default_k(tag, a, ctx):
    if tag == "1k":
        return index(a)
    return ctx.kappa


def check(label, a: Matrix, x: Matrix, ctx: WeightedContext | None = None,
          metric: MetricMatrix | None = None,
          metric_n: MetricMatrix | None = None,
          tol: float | None = None) -> LabelCheck:
    """Evaluate one equation label for the pair (a, x).

    ``metric`` feeds the 3M slot, ``metric_n`` the 4N slot.  For k-indexed
    labels a missing k defaults to index(a) (plain) or ctx.kappa (weighted).
    Raises on missing metric/context or inconsistent shapes.
    """
    lab = _as_label(label)
    tag = lab.tag
    m_metric = metric
    n_metric = metric_n if metric_n is not None else (
        metric if tag == "4N" else None)
    if tag in WEIGHTED_LABELS:
        if ctx is None:
            raise ValueError(f"label {tag} requires a WeightedContext")
        if ctx.w.rows != a.cols or ctx.w.cols != a.rows:
            raise ShapeError("weight shape incompatible with matrix")
        if x.shape != a.shape:
            raise ShapeError(f"candidate must be {a.shape} for label {tag}")
        if ctx.backend != a.backend or x.backend != a.backend:
            raise BackendError("mixed backends in weighted check")
        w = ctx.w
    else:
        if x.shape != (a.cols, a.rows):
            raise ShapeError(
                f"candidate must be {(a.cols, a.rows)} for label {tag}")
        if tag in _SQUARE_ONLY and a.rows != a.cols:
            raise ShapeError(f"label {tag} requires a square matrix")
        if tag == "3M":
            if m_metric is None:
                raise ValueError("label 3M requires a metric")
            if m_metric.dim != a.rows:
                raise ShapeError("3M metric dimension mismatch")
        if tag == "4N":
            if n_metric is None:
                raise ValueError("label 4N requires a metric")
            if n_metric.dim != a.cols:
                raise ShapeError("4N metric dimension mismatch")
        w = None
    k = lab.k
    if tag in _K_LABELS and k is None:
        k = _default_k(tag, a, ctx)
    lhs, rhs = _sides(tag, a, x, w, m_metric, n_metric, k)
    if a.backend == EXACT:
        return LabelCheck(tag, lhs == rhs, 0.0, k)
    res = residual_norm(lhs, rhs)
    if tol is None:
        tol = FLOAT_EQ_TOL
    return LabelCheck(tag, res <= tol, res, k)


def check_all(labels, a, x, ctx=None, metric=None, metric_n=None,
              tol=None) -> VerificationReport:
    """check() over a list of labels, bundled into one report."""
    return VerificationReport(tuple(
        check(lab, a, x, ctx=ctx, metric=metric, metric_n=metric_n, tol=tol)
        for lab in labels))


def classify(a: Matrix, x: Matrix, ctx: WeightedContext | None = None,
             metric: MetricMatrix | None = None,
             metric_n: MetricMatrix | None = None,
             k: int | None = None, tol: float | None = None) -> VerificationReport:
    """Evaluate every label whose shape constraints are satisfiable.

    Returns a report whose ``held`` set collects the labels that hold;
    labels that cannot apply (wrong shapes, missing metric or context)
    are listed in ``skipped``.
    """
    entries = []
    skipped = []
    for tag in ALL_LABELS:
        if not _shape_ok(tag, a, x, ctx, metric, metric_n):
            skipped.append(tag)
            continue
        kk = k if tag in _K_LABELS else None
        entries.append(check(EquationLabel(tag, kk), a, x, ctx=ctx,
                             metric=metric, metric_n=metric_n, tol=tol))
    return VerificationReport(tuple(entries), tuple(skipped))
