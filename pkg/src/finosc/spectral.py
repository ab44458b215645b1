"""Independent spectral oracle for symmetric tridiagonal matrices with zero diagonal.

Deliberately built without the analytic eigenvector formulas or any dual Hahn
code (and without LAPACK): eigenvalues come from Sturm-sequence sign counts
plus bisection, eigenvectors from shifted inverse iteration, and for rational
data the characteristic polynomial is formed exactly over the rationals.
"""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

_PIVMIN = 1e-150   # pivot floor: keeps 1/q finite without disturbing sign counts


def _count_below(offdiag_sq: np.ndarray, xs: np.ndarray) -> np.ndarray:
    """Number of eigenvalues strictly below each probe, by Sturm sign agreement.

    Uses the standard pivoted recurrence q_{k+1} = -x - e_k^2 / q_k for the
    zero-diagonal case; the count of negative pivots equals the count of
    eigenvalues below x.
    """
    xs = np.asarray(xs, dtype=float)
    q = -xs.copy()
    count = (q < 0).astype(int)
    for e2 in offdiag_sq:
        q = np.where(np.abs(q) < _PIVMIN, -_PIVMIN, q)
        q = -xs - e2 / q
        count += q < 0
    return count


def count_below(t, x: float) -> int:
    """Sturm count of eigenvalues of t strictly below the probe x."""
    e2 = np.asarray(t.offdiag, dtype=float) ** 2
    return int(_count_below(e2, np.array([x]))[0])


def sturm_eigenvalues(t, tol: float) -> np.ndarray:
    """All eigenvalues of the operator, ascending, each bracketed to width <= tol."""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    dim = t.dim
    e = np.asarray(t.offdiag, dtype=float)
    e2 = e * e
    # Gershgorin: zero diagonal, so the spectrum lies in [-r, r]
    row_sums = np.zeros(dim)
    row_sums[:-1] += e
    row_sums[1:] += e
    r = float(row_sums.max()) + 1.0
    lo = np.full(dim, -r)
    hi = np.full(dim, r)
    idx = np.arange(1, dim + 1)
    steps = int(np.ceil(np.log2(2 * r / tol))) + 1
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        counts = _count_below(e2, mid)
        go_left = counts >= idx
        hi = np.where(go_left, mid, hi)
        lo = np.where(go_left, lo, mid)
    return 0.5 * (lo + hi)


def _solve_shifted(offdiag: np.ndarray, shift: float, rhs: np.ndarray) -> np.ndarray:
    """Solve (T - shift*I) x = rhs by banded Gaussian elimination with partial pivoting.

    T has zero diagonal and the given symmetric off-diagonal; pivoting fills a
    second superdiagonal.  Exactly singular pivots are floored so that inverse
    iteration can drive the solution into the eigenvector direction.
    """
    n = len(rhs)
    a = np.zeros(n)          # subdiagonal (row k holds entry (k, k-1))
    d = np.full(n, -shift)   # diagonal
    c = np.zeros(n)          # first superdiagonal
    f = np.zeros(n)          # fill-in second superdiagonal
    a[1:] = offdiag
    c[:-1] = offdiag
    x = rhs.astype(float).copy()
    for k in range(n - 1):
        if abs(a[k + 1]) > abs(d[k]):
            d[k], a[k + 1] = a[k + 1], d[k]
            c[k], d[k + 1] = d[k + 1], c[k]
            f[k], c[k + 1] = c[k + 1], f[k]
            x[k], x[k + 1] = x[k + 1], x[k]
        piv = d[k] if abs(d[k]) >= _PIVMIN else (-_PIVMIN if d[k] < 0 else _PIVMIN)
        ratio = a[k + 1] / piv
        d[k + 1] -= ratio * c[k]
        c[k + 1] -= ratio * f[k]
        x[k + 1] -= ratio * x[k]
        d[k] = piv
    if abs(d[n - 1]) < _PIVMIN:
        d[n - 1] = -_PIVMIN if d[n - 1] < 0 else _PIVMIN
    out = np.zeros(n)
    out[n - 1] = x[n - 1] / d[n - 1]
    if n >= 2:
        out[n - 2] = (x[n - 2] - c[n - 2] * out[n - 1]) / d[n - 2]
    for k in range(n - 3, -1, -1):
        out[k] = (x[k] - c[k] * out[k + 1] - f[k] * out[k + 2]) / d[k]
    return out


def _sign_normalize(v: np.ndarray) -> np.ndarray:
    scale = np.max(np.abs(v))
    for comp in v:
        if abs(comp) > 1e-8 * scale:
            return -v if comp < 0 else v
    return v


def inverse_iteration_vector(t, lam: float, tol: float, max_iter: int = 50) -> np.ndarray:
    """Unit eigenvector for the (simple) eigenvalue lam, within tol of a true one.

    Sign convention: the first component that is not negligible is positive.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    e = np.asarray(t.offdiag, dtype=float)
    if t.dim > 1:
        row_sums = np.zeros(t.dim)
        row_sums[:-1] += e
        row_sums[1:] += e
        norm_t = float(row_sums.max())
    else:
        norm_t = 0.0
    v = np.ones(t.dim) / np.sqrt(t.dim)
    dense = t.dense()
    for _ in range(max_iter):
        w = _solve_shifted(e, lam, v)
        w_norm = np.linalg.norm(w)
        if not np.isfinite(w_norm) or w_norm == 0:
            raise ValueError(f"inverse iteration broke down at shift {lam}")
        v = w / w_norm
        residual = np.linalg.norm(dense @ v - lam * v)
        if residual < tol * max(norm_t, 1.0):
            return _sign_normalize(v)
    raise ValueError(
        f"inverse iteration did not converge in {max_iter} steps at shift {lam}; "
        "the shift may be inaccurate or the eigenvalue clustered"
    )


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial with exact rational coefficients (ascending powers)."""
    coefficients: tuple

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = Fraction(0)
        for coef in reversed(self.coefficients):
            acc = acc * x + coef
        return acc


def char_poly_exact(t) -> CharPoly:
    """det(lambda*I - T) by the three-term recurrence, in exact rational arithmetic."""
    if t.offdiag_sq is None:
        raise ValueError("operator has no exact rational off-diagonal squares; use the float path")
    prev = [Fraction(1)]            # p_0
    cur = [Fraction(0), Fraction(1)]  # p_1 = lambda
    for sq in t.offdiag_sq:
        sq = Fraction(sq)
        nxt = [Fraction(0)] + cur   # lambda * p_k
        for i, coef in enumerate(prev):
            nxt[i] -= sq * coef
        prev, cur = cur, nxt
    return CharPoly(tuple(cur))


def poly_mul(a, b):
    """Product of two rational coefficient lists (ascending powers)."""
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for k, bk in enumerate(b):
            out[i + k] += Fraction(ai) * Fraction(bk)
    return out
