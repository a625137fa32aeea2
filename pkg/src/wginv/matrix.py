"""Dense complex matrices over two scalar backends plus rank/index machinery.

Backends:
  * ``"exact"``  -- entries are :class:`~wginv.scalars.GaussianRational`;
    every operation is exact, rank comes from fraction-free elimination.
  * ``"float"``  -- entries are complex128 (numpy); rank uses a singular
    value threshold.

All matrix values are immutable after construction and safe to share.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .scalars import GaussianRational

EXACT = "exact"
FLOAT = "float"

# Float-backend tolerances (module-level knobs, see module docstring of cli
# for how they surface on the command line).
FLOAT_RANK_EPS = 2.0 ** -52     # rank: sigma < max(m,n)*eps*sigma_max is zero
FLOAT_EQ_TOL = 1e-9             # ||X-Y||_F <= tol*max(1, ||X||_F, ||Y||_F)
FLOAT_HERM_TOL = 1e-12          # ||M-M*||_F <= tol*||M||_F


class ShapeError(ValueError):
    """Operand shapes are incompatible."""


class BackendError(TypeError):
    """Mixed-backend arithmetic or an unsupported backend was requested."""


class SingularMatrixError(ArithmeticError):
    """A matrix that must be invertible is singular."""


class ExistenceError(ArithmeticError):
    """The requested generalized inverse does not exist for this input."""


class VerificationError(ArithmeticError):
    """A defining identity that must hold for a computed result failed."""


def _coerce_exact(value):
    return GaussianRational.coerce(value)


class Matrix:
    """Immutable dense complex matrix tagged with its scalar backend."""

    __slots__ = ("rows", "cols", "backend", "_data", "_rank")

    def __init__(self, rows, cols, data, backend):
        if rows < 0 or cols < 0:
            raise ShapeError("negative matrix dimension")
        self.rows = rows
        self.cols = cols
        self.backend = backend
        self._rank = None
        if backend == EXACT:
            entries = tuple(_coerce_exact(x) for x in data)
            if len(entries) != rows * cols:
                raise ShapeError("entry count does not match rows*cols")
            self._data = entries
        elif backend == FLOAT:
            arr = np.array(data, dtype=np.complex128).reshape(rows, cols)
            if arr.size and not (np.all(np.isfinite(arr.real))
                                 and np.all(np.isfinite(arr.imag))):
                raise ValueError("NaN/Inf entries are not admitted")
            arr.flags.writeable = False
            self._data = arr
        else:
            raise BackendError(f"unknown backend {backend!r}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows_of_entries, backend=EXACT):
        rows = len(rows_of_entries)
        cols = len(rows_of_entries[0]) if rows else 0
        if any(len(r) != cols for r in rows_of_entries):
            raise ShapeError("ragged rows")
        flat = [x for row in rows_of_entries for x in row]
        return cls(rows, cols, flat, backend)

    @classmethod
    def zeros(cls, rows, cols, backend=EXACT):
        if backend == FLOAT:
            return cls(rows, cols, np.zeros((rows, cols), dtype=np.complex128), FLOAT)
        return cls(rows, cols, [GaussianRational(0)] * (rows * cols), EXACT)

    @classmethod
    def eye(cls, n, backend=EXACT):
        if backend == FLOAT:
            return cls(n, n, np.eye(n, dtype=np.complex128), FLOAT)
        data = [GaussianRational(1) if i == j else GaussianRational(0)
                for i in range(n) for j in range(n)]
        return cls(n, n, data, EXACT)

    # -- basic access --------------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        if self.backend == FLOAT:
            return complex(self._data[i, j])
        return self._data[i * self.cols + j]

    def row(self, i):
        return [self[i, j] for j in range(self.cols)]

    def tolist(self):
        return [self.row(i) for i in range(self.rows)]

    def to_numpy(self) -> np.ndarray:
        if self.backend == FLOAT:
            return np.array(self._data, copy=True)
        return np.array(
            [[complex(self._data[i * self.cols + j]) for j in range(self.cols)]
             for i in range(self.rows)],
            dtype=np.complex128,
        ).reshape(self.rows, self.cols)

    def to_float(self) -> "Matrix":
        if self.backend == FLOAT:
            return self
        return Matrix(self.rows, self.cols, self.to_numpy(), FLOAT)

    def to_exact(self) -> "Matrix":
        """Exact lift; float entries convert via their binary values."""
        if self.backend == EXACT:
            return self
        data = [GaussianRational(Fraction(z.real), Fraction(z.imag))
                for z in self._data.ravel()]
        return Matrix(self.rows, self.cols, data, EXACT)

    # -- arithmetic ----------------------------------------------------------

    def _check_backend(self, other):
        if self.backend != other.backend:
            raise BackendError("mixed-backend arithmetic is rejected")

    def __add__(self, other):
        self._check_backend(other)
        if self.shape != other.shape:
            raise ShapeError(f"add {self.shape} vs {other.shape}")
        if self.backend == FLOAT:
            return Matrix(self.rows, self.cols, self._data + other._data, FLOAT)
        data = [a + b for a, b in zip(self._data, other._data)]
        return Matrix(self.rows, self.cols, data, EXACT)

    def __sub__(self, other):
        self._check_backend(other)
        if self.shape != other.shape:
            raise ShapeError(f"sub {self.shape} vs {other.shape}")
        if self.backend == FLOAT:
            return Matrix(self.rows, self.cols, self._data - other._data, FLOAT)
        data = [a - b for a, b in zip(self._data, other._data)]
        return Matrix(self.rows, self.cols, data, EXACT)

    def __neg__(self):
        if self.backend == FLOAT:
            return Matrix(self.rows, self.cols, -self._data, FLOAT)
        return Matrix(self.rows, self.cols, [-a for a in self._data], EXACT)

    def scale(self, s):
        if self.backend == FLOAT:
            return Matrix(self.rows, self.cols, complex(s) * self._data, FLOAT)
        s = _coerce_exact(s)
        return Matrix(self.rows, self.cols, [s * a for a in self._data], EXACT)

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    def __matmul__(self, other):
        self._check_backend(other)
        if self.cols != other.rows:
            raise ShapeError(f"matmul {self.shape} @ {other.shape}")
        if self.backend == FLOAT:
            prod = self._data @ other._data if self.cols else \
                np.zeros((self.rows, other.cols), dtype=np.complex128)
            return Matrix(self.rows, other.cols, prod, FLOAT)
        m, k, n = self.rows, self.cols, other.cols
        a, b = self._data, other._data
        zero = GaussianRational(0)
        out = []
        for i in range(m):
            arow = a[i * k:(i + 1) * k]
            for j in range(n):
                acc = zero
                for t in range(k):
                    x = arow[t]
                    if x.re or x.im:
                        acc = acc + x * b[t * n + j]
                out.append(acc)
        return Matrix(m, n, out, EXACT)

    @property
    def H(self) -> "Matrix":
        """Conjugate transpose."""
        if self.backend == FLOAT:
            return Matrix(self.cols, self.rows, self._data.conj().T, FLOAT)
        data = [self._data[i * self.cols + j].conjugate()
                for j in range(self.cols) for i in range(self.rows)]
        return Matrix(self.cols, self.rows, data, EXACT)

    def norm(self) -> float:
        """Frobenius norm (float on both backends)."""
        if self.backend == FLOAT:
            return float(np.linalg.norm(self._data)) if self._data.size else 0.0
        return math.sqrt(sum(float(a.abs2()) for a in self._data))

    def is_zero(self) -> bool:
        if self.backend == FLOAT:
            return bool(self._data.size == 0 or not self._data.any())
        return all(not a for a in self._data)

    def __eq__(self, other):
        """Strict structural equality (same backend, shape, entries)."""
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.backend != other.backend or self.shape != other.shape:
            return False
        if self.backend == FLOAT:
            return bool(np.array_equal(self._data, other._data))
        return self._data == other._data

    def __hash__(self):
        if self.backend == FLOAT:
            return hash((self.shape, self._data.tobytes()))
        return hash((self.shape, self._data))

    def __repr__(self):
        body = "; ".join(
            " ".join(str(self[i, j]) for j in range(self.cols))
            for i in range(self.rows))
        return f"Matrix[{self.backend} {self.rows}x{self.cols}: {body}]"

    def sub(self, r0, r1, c0, c1) -> "Matrix":
        """Contiguous submatrix with rows [r0, r1) and columns [c0, c1)."""
        if not (0 <= r0 <= r1 <= self.rows and 0 <= c0 <= c1 <= self.cols):
            raise ShapeError("submatrix bounds out of range")
        if self.backend == FLOAT:
            return Matrix(r1 - r0, c1 - c0, self._data[r0:r1, c0:c1], FLOAT)
        data = [self._data[i * self.cols + j]
                for i in range(r0, r1) for j in range(c0, c1)]
        return Matrix(r1 - r0, c1 - c0, data, EXACT)

    def take_cols(self, idx) -> "Matrix":
        if self.backend == FLOAT:
            return Matrix(self.rows, len(idx), self._data[:, list(idx)], FLOAT)
        data = [self._data[i * self.cols + j] for i in range(self.rows) for j in idx]
        return Matrix(self.rows, len(idx), data, EXACT)


def hcat(a: Matrix, b: Matrix) -> Matrix:
    a._check_backend(b)
    if a.rows != b.rows:
        raise ShapeError("hcat row counts differ")
    if a.backend == FLOAT:
        return Matrix(a.rows, a.cols + b.cols,
                      np.hstack([a._data, b._data]), FLOAT)
    data = []
    for i in range(a.rows):
        data.extend(a._data[i * a.cols:(i + 1) * a.cols])
        data.extend(b._data[i * b.cols:(i + 1) * b.cols])
    return Matrix(a.rows, a.cols + b.cols, data, EXACT)


def vcat(a: Matrix, b: Matrix) -> Matrix:
    a._check_backend(b)
    if a.cols != b.cols:
        raise ShapeError("vcat column counts differ")
    if a.backend == FLOAT:
        return Matrix(a.rows + b.rows, a.cols,
                      np.vstack([a._data, b._data]), FLOAT)
    return Matrix(a.rows + b.rows, a.cols, a._data + b._data, EXACT)


def block(rows_of_blocks) -> Matrix:
    """Assemble a block matrix; zero-dimension blocks are allowed."""
    strips = []
    for brow in rows_of_blocks:
        strip = brow[0]
        for b in brow[1:]:
            strip = hcat(strip, b)
        strips.append(strip)
    out = strips[0]
    for s in strips[1:]:
        out = vcat(out, s)
    return out


def equal(a: Matrix, b: Matrix, tol: float | None = None) -> bool:
    """Backend-aware matrix equality.

    Exact backend: entrywise exact.  Float backend:
    ||a-b||_F <= tol * max(1, ||a||_F, ||b||_F) with tol defaulting to
    :data:`FLOAT_EQ_TOL`.
    """
    a._check_backend(b)
    if a.shape != b.shape:
        return False
    if a.backend == EXACT:
        return a._data == b._data
    if tol is None:
        tol = FLOAT_EQ_TOL
    return (a - b).norm() <= tol * max(1.0, a.norm(), b.norm())


def is_hermitian(a: Matrix, tol: float | None = None) -> bool:
    if a.rows != a.cols:
        return False
    if a.backend == EXACT:
        return a == a.H
    if tol is None:
        tol = FLOAT_HERM_TOL
    return (a - a.H).norm() <= tol * max(1.0, a.norm())


# ---------------------------------------------------------------------------
# rank / index / rref
# ---------------------------------------------------------------------------

def _gi_mul(x, y):
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c)


def _gi_div_exact(x, y):
    a, b = x
    c, d = y
    den = c * c + d * d
    re, rr = divmod(a * c + b * d, den)
    im, ri = divmod(b * c - a * d, den)
    if rr or ri:
        raise ArithmeticError("inexact division in fraction-free elimination")
    return (re, im)


def _exact_int_rows(a: Matrix):
    """Clear denominators row-wise, yielding Gaussian-integer rows."""
    out = []
    for i in range(a.rows):
        row = a._data[i * a.cols:(i + 1) * a.cols]
        lcm = 1
        for g in row:
            lcm = lcm * g.re.denominator // math.gcd(lcm, g.re.denominator)
            lcm = lcm * g.im.denominator // math.gcd(lcm, g.im.denominator)
        out.append([(int(g.re * lcm), int(g.im * lcm)) for g in row])
    return out


def _rank_exact(a: Matrix) -> int:
    # Bareiss fraction-free elimination over Gaussian integers.
    m, n = a.rows, a.cols
    if m == 0 or n == 0:
        return 0
    mat = _exact_int_rows(a)
    prev = (1, 0)
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if mat[i][c] != (0, 0)), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        p = mat[r][c]
        for i in range(r + 1, m):
            x = mat[i][c]
            row_i, row_r = mat[i], mat[r]
            for j in range(c, n):
                num = _gi_mul(p, row_i[j])
                sub = _gi_mul(x, row_r[j])
                row_i[j] = _gi_div_exact((num[0] - sub[0], num[1] - sub[1]), prev)
            row_i[c] = (0, 0)
        prev = p
        r += 1
        if r == m:
            break
    return r


def rank(a: Matrix, tol: float | None = None) -> int:
    """Rank; exact backend counts fraction-free pivots, float thresholds SVD."""
    if a._rank is not None and tol is None:
        return a._rank
    if a.backend == EXACT:
        r = _rank_exact(a)
    else:
        if a.rows == 0 or a.cols == 0 or not a._data.any():
            r = 0
        else:
            s = np.linalg.svd(a._data, compute_uv=False)
            cutoff = tol if tol is not None else \
                max(a.rows, a.cols) * FLOAT_RANK_EPS * float(s[0])
            r = int(np.count_nonzero(s > cutoff))
    if tol is None:
        a._rank = r
    return r


def index(a: Matrix) -> int:
    """Smallest k >= 0 with rank(A^k) == rank(A^(k+1)); requires square A."""
    if a.rows != a.cols:
        raise ShapeError("index requires a square matrix")
    n = a.rows
    prev_rank = n          # rank(A^0)
    power = a
    k = 0
    while True:
        r = rank(power)
        if r == prev_rank:
            return k
        prev_rank = r
        k += 1
        if k > n:           # cannot happen; guards float rank misjudgement
            raise ArithmeticError("index iteration failed to stabilise")
        power = power @ a


def mat_pow(a: Matrix, k: int) -> Matrix:
    if a.rows != a.cols:
        raise ShapeError("power of a non-square matrix")
    if k < 0:
        raise ValueError("negative power")
    out = Matrix.eye(a.rows, a.backend)
    base = a
    while k:
        if k & 1:
            out = out @ base
        k >>= 1
        if k:
            base = base @ base
    return out


def _float_zero_tol(a: Matrix) -> float:
    scale = float(np.max(np.abs(a._data))) if a._data.size else 0.0
    return max(a.rows, a.cols) * FLOAT_RANK_EPS * max(scale, 1.0) * 16


def rref(a: Matrix):
    """Reduced row-echelon form.  Returns (R, pivot_columns).

    Exact backend is fully rational; float uses partial pivoting with a
    scaled zero threshold (prefer the exact backend when echelon structure
    matters).
    """
    m, n = a.rows, a.cols
    if a.backend == FLOAT:
        mat = a.to_numpy()
        tol = _float_zero_tol(a)
        pivots = []
        r = 0
        for c in range(n):
            if r == m:
                break
            piv = r + int(np.argmax(np.abs(mat[r:, c])))
            if abs(mat[piv, c]) <= tol:
                continue
            mat[[r, piv]] = mat[[piv, r]]
            mat[r] = mat[r] / mat[r, c]
            for i in range(m):
                if i != r and mat[i, c] != 0:
                    mat[i] = mat[i] - mat[i, c] * mat[r]
            pivots.append(c)
            r += 1
        return Matrix(m, n, mat, FLOAT), pivots
    rows = [list(a._data[i * n:(i + 1) * n]) for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Matrix.from_rows(rows, EXACT), pivots


def rref_augmented(a: Matrix) -> Matrix:
    """rref of [A | I_n] for square A (n x 2n result)."""
    if a.rows != a.cols:
        raise ShapeError("rref_augmented requires a square matrix")
    r, _ = rref(hcat(a, Matrix.eye(a.rows, a.backend)))
    return r


def inverse(a: Matrix) -> Matrix:
    if a.rows != a.cols:
        raise ShapeError("inverse of a non-square matrix")
    n = a.rows
    if n == 0:
        return a
    if a.backend == FLOAT:
        if rank(a) < n:
            raise SingularMatrixError("matrix is singular")
        return Matrix(n, n, np.linalg.inv(a._data), FLOAT)
    r, pivots = rref(hcat(a, Matrix.eye(n, EXACT)))
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return r.sub(0, n, n, 2 * n)


def one_inverse(b: Matrix, l: Matrix | None = None) -> Matrix:
    """A {1}-inverse Q of square b (bQb == b) via echelon elimination.

    The free block ``l`` (shape (n-r) x (n-r)) parametrises the non-unique
    part; omitted means zero.
    """
    if b.rows != b.cols:
        raise ShapeError("one_inverse expects a square matrix")
    n = b.rows
    if n == 0:
        return b
    aug = rref_augmented(b)
    e = aug.sub(0, n, n, 2 * n)          # E @ b == rref(b)
    _, pivots = rref(b)
    r = len(pivots)
    if l is None:
        l = Matrix.zeros(n - r, n - r, b.backend)
    if l.shape != (n - r, n - r):
        raise ShapeError(f"free block must be {(n - r, n - r)}, got {l.shape}")
    if l.backend != b.backend:
        raise BackendError("free block backend differs from matrix backend")
    perm = pivots + [c for c in range(n) if c not in pivots]
    # P: columns of (E b) reordered pivots-first, i.e. (E b P)[:, j] = (E b)[:, perm[j]]
    pdata = [[0] * n for _ in range(n)]
    for j, c in enumerate(perm):
        pdata[c][j] = 1
    p = Matrix.from_rows(pdata, EXACT)
    if b.backend == FLOAT:
        p = p.to_float()
    middle = block([
        [Matrix.eye(r, b.backend), Matrix.zeros(r, n - r, b.backend)],
        [Matrix.zeros(n - r, r, b.backend), l],
    ])
    q = p @ middle @ e
    resid = b @ q @ b - b
    if b.backend == EXACT:
        if not resid.is_zero():
            raise VerificationError("one_inverse failed bQb == b")
    elif resid.norm() > FLOAT_EQ_TOL * max(1.0, b.norm()):
        raise VerificationError("one_inverse failed bQb == b within tolerance")
    return q


# ---------------------------------------------------------------------------
# full-rank factorization, bases, projectors
# ---------------------------------------------------------------------------

def full_rank_factorization(a: Matrix):
    """A = F @ G with F (m x r) of full column rank and G (r x n) of full row rank.

    Exact: F = pivot columns of A, G = nonzero rows of rref(A).
    Float: SVD-based (F = U_r S_r, G = V_r^*).
    """
    r = rank(a)
    if a.backend == EXACT:
        rr, pivots = rref(a)
        f = a.take_cols(pivots)
        g = rr.sub(0, r, 0, a.cols)
        return f, g
    if r == 0:
        return Matrix.zeros(a.rows, 0, FLOAT), Matrix.zeros(0, a.cols, FLOAT)
    u, s, vh = np.linalg.svd(a._data)
    f = u[:, :r] * s[:r]
    g = vh[:r, :]
    return Matrix(a.rows, r, f, FLOAT), Matrix(r, a.cols, g, FLOAT)


def range_basis(a: Matrix) -> Matrix:
    """Columns form a basis of the range of A (orthonormal on float)."""
    r = rank(a)
    if a.backend == EXACT:
        _, pivots = rref(a)
        return a.take_cols(pivots)
    if r == 0:
        return Matrix.zeros(a.rows, 0, FLOAT)
    u = np.linalg.svd(a._data)[0]
    return Matrix(a.rows, r, u[:, :r], FLOAT)


def null_basis(a: Matrix) -> Matrix:
    """Columns form a basis of the null space of A."""
    n = a.cols
    r = rank(a)
    if a.backend == FLOAT:
        if n == 0:
            return Matrix.zeros(0, 0, FLOAT)
        vh = np.linalg.svd(a._data)[2] if a._data.size else np.eye(n)
        return Matrix(n, n - r, np.asarray(vh, dtype=np.complex128).conj().T[:, r:], FLOAT)
    rr, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    cols = []
    for fcol in free:
        v = [GaussianRational(0)] * n
        v[fcol] = GaussianRational(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rr[i, fcol]
        cols.append(v)
    data = [cols[j][i] for i in range(n) for j in range(len(free))]
    return Matrix(n, len(free), data, EXACT)


def projector_onto(range_cols: Matrix, null_cols: Matrix) -> Matrix:
    """Projector with the prescribed range and null space (must be complementary)."""
    if range_cols.rows != null_cols.rows:
        raise ShapeError("basis row counts differ")
    n = range_cols.rows
    if range_cols.cols + null_cols.cols != n:
        raise ShapeError("range and null space dimensions do not sum to n")
    basis = hcat(range_cols, null_cols)
    try:
        binv = inverse(basis)
    except SingularMatrixError:
        raise ShapeError("range and null space are not complementary") from None
    padded = hcat(range_cols,
                  Matrix.zeros(n, null_cols.cols, range_cols.backend))
    return padded @ binv


# ---------------------------------------------------------------------------
# subspace relations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubspaceRelation:
    """Outcome of a range/null inclusion test with its rank witnesses."""

    kind: str              # range-subset | range-equal | null-subset | null-equal
    holds: bool
    ranks: tuple           # (rank(a), rank(b), rank of the joined matrix)


def range_subset(a: Matrix, b: Matrix) -> SubspaceRelation:
    """R(a) subseteq R(b), decided by rank([b | a]) == rank(b)."""
    if a.rows != b.rows:
        raise ShapeError("range_subset needs equal row counts")
    ra, rb = rank(a), rank(b)
    rj = rank(hcat(b, a))
    return SubspaceRelation("range-subset", rj == rb, (ra, rb, rj))


def null_subset(a: Matrix, b: Matrix) -> SubspaceRelation:
    """N(a) subseteq N(b), decided by rank(stack(a, b)) == rank(a)."""
    if a.cols != b.cols:
        raise ShapeError("null_subset needs equal column counts")
    ra, rb = rank(a), rank(b)
    rj = rank(vcat(a, b))
    return SubspaceRelation("null-subset", rj == ra, (ra, rb, rj))


def range_equal(a: Matrix, b: Matrix) -> SubspaceRelation:
    r1 = range_subset(a, b)
    r2 = range_subset(b, a)
    return SubspaceRelation("range-equal", r1.holds and r2.holds, r1.ranks)


def null_equal(a: Matrix, b: Matrix) -> SubspaceRelation:
    r1 = null_subset(a, b)
    r2 = null_subset(b, a)
    return SubspaceRelation("null-equal", r1.holds and r2.holds, r1.ranks)


def outer_from_full_rank(f: Matrix, g: Matrix, core: Matrix) -> Matrix:
    """X = f (g core f)^{-1} g; guarantees X core X == X."""
    mid = g @ core @ f
    if mid.rows != mid.cols:
        raise ShapeError("g @ core @ f must be square")
    try:
        x = f @ inverse(mid) @ g
    except SingularMatrixError:
        raise SingularMatrixError("g @ core @ f is singular") from None
    return x


# ---------------------------------------------------------------------------
# metric matrices and weighted contexts
# ---------------------------------------------------------------------------

class MetricMatrix:
    """Invertible Hermitian metric used by the (3^M)/(4^N) equations."""

    __slots__ = ("m", "_inv")

    def __init__(self, m: Matrix):
        if m.rows != m.cols:
            raise ShapeError("metric must be square")
        if not is_hermitian(m):
            raise ValueError("metric is not Hermitian")
        if rank(m) < m.rows:
            raise SingularMatrixError("metric is singular")
        self.m = m
        self._inv = None

    @property
    def dim(self):
        return self.m.rows

    def inv(self) -> Matrix:
        if self._inv is None:
            self._inv = inverse(self.m)
        return self._inv

    def __repr__(self):
        return f"MetricMatrix({self.m!r})"


@dataclass(frozen=True, eq=False)
class WeightedContext:
    """Pair (A, W) with cached index data kappa = max(ind(AW), ind(WA))."""

    a: Matrix
    w: Matrix
    kappa: int
    ind_aw: int
    ind_wa: int
    aw: Matrix = field(repr=False)
    wa: Matrix = field(repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def backend(self):
        return self.a.backend

    def cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]


def make_context(a: Matrix, w: Matrix) -> WeightedContext:
    """Build a WeightedContext, computing ind(AW), ind(WA) and kappa."""
    if w.rows != a.cols or w.cols != a.rows:
        raise ShapeError(
            f"weight must be {a.cols}x{a.rows} for a {a.rows}x{a.cols} matrix")
    if w.is_zero():
        raise ValueError("weight matrix must be nonzero")
    aw = a @ w
    wa = w @ a
    ind_aw = index(aw)
    ind_wa = index(wa)
    kappa = max(ind_aw, ind_wa)
    if rank(mat_pow(aw, kappa)) != rank(mat_pow(wa, kappa)):
        raise VerificationError("rank((AW)^k) != rank((WA)^k) at k = kappa")
    return WeightedContext(a=a, w=w, kappa=kappa, ind_aw=ind_aw,
                           ind_wa=ind_wa, aw=aw, wa=wa)
