"""Finite oscillator on the odd-dimensional representations: operators, eigenvectors, wavefunctions.

Position and momentum act as the tridiagonal matrices M^q (= 2*qhat) and
M^p (= 2i*phat) with off-diagonal sequence M_k depending on the deformation
c ("ctilde" here, |ctilde| < 1).  Their spectrum is the equidistant set
{-2j, ..., 2j} independently of ctilde; the eigenvector matrices U (orthogonal)
and V = J U (unitary) have closed-form entries built from two interleaved dual
Hahn families, and the level-n rows are the discrete wavefunctions.
"""
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .orthopoly import (
    DualHahnParams,
    NormalizedDualHahn,
    dual_hahn_normalized,
    parabose_wavefunction,
)

_JPHASE = (-1j, 1 + 0j, 1j, -1 + 0j)  # -i * i**k, exact by k mod 4


def _check_model(j, ctilde):
    if not (isinstance(j, int) and j >= 1):
        raise ValueError(f"model requires integer j >= 1 (odd dimension), got j={j}")
    if not abs(ctilde) < 1:
        raise ValueError(f"inadmissible representation: need |ctilde| < 1, got ctilde={ctilde}")


def _mk_sq(k: int, j: int, ctilde):
    """Exact square of M_k; generic in the numeric type of ctilde."""
    if k % 2 == 0:
        return (k + 1 - ctilde) * (2 * j - k)
    return (k + 1) * (2 * j - k + ctilde)


def mk_coeff(k: int, j: int, ctilde: float) -> float:
    """Off-diagonal entry M_k of the position matrix 2*qhat, 0 <= k <= 2j-1."""
    _check_model(j, ctilde)
    if not 0 <= k <= 2 * j - 1:
        raise ValueError(f"k={k} out of range 0..{2 * j - 1}")
    return math.sqrt(_mk_sq(k, j, float(ctilde)))


@dataclass(frozen=True)
class TridiagonalOperator:
    """Symmetric tridiagonal matrix with zero diagonal (the matrix 2*qhat).

    Model-built instances (position_operator) have strictly positive entries,
    M_k > 0 for |ctilde| < 1; the type itself also admits degenerate zero
    entries so the spectral oracle can be exercised on reducible matrices.
    offdiag_sq carries the exact rational squares whenever ctilde was rational,
    which is what the exact characteristic-polynomial oracle consumes.
    """
    dim: int
    offdiag: tuple
    offdiag_sq: tuple = None

    def __post_init__(self):
        if len(self.offdiag) != self.dim - 1:
            raise ValueError(f"need {self.dim - 1} off-diagonal entries, got {len(self.offdiag)}")
        if any(m < 0 for m in self.offdiag):
            raise ValueError("off-diagonal entries must be nonnegative")

    def dense(self) -> np.ndarray:
        m = np.zeros((self.dim, self.dim))
        e = np.asarray(self.offdiag, dtype=float)
        idx = np.arange(self.dim - 1)
        m[idx, idx + 1] = e
        m[idx + 1, idx] = e
        return m


def position_operator(j: int, ctilde) -> TridiagonalOperator:
    """Matrix of 2*qhat; equals J+ + J- of the dimension-(2j+1) representation with eps=+1."""
    _check_model(j, ctilde)
    if isinstance(ctilde, (int, Fraction)):
        sq = tuple(_mk_sq(k, j, Fraction(ctilde)) for k in range(2 * j))
        assert all(s > 0 for s in sq), f"nonpositive M_k^2 inside |ctilde| < 1: {sq}"
        return TridiagonalOperator(2 * j + 1, tuple(math.sqrt(s) for s in sq), sq)
    sq = tuple(_mk_sq(k, j, float(ctilde)) for k in range(2 * j))
    assert all(s > 0 for s in sq), f"nonpositive M_k^2 inside |ctilde| < 1: {sq}"
    return TridiagonalOperator(2 * j + 1, tuple(math.sqrt(s) for s in sq))


def momentum_operator(j: int, ctilde) -> np.ndarray:
    """Real matrix M^p of 2i*phat: +M_k above the diagonal, -M_k below."""
    t = position_operator(j, ctilde)
    m = np.zeros((t.dim, t.dim))
    e = np.asarray(t.offdiag, dtype=float)
    idx = np.arange(t.dim - 1)
    m[idx, idx + 1] = e
    m[idx + 1, idx] = -e
    return m


def hamiltonian_spectrum(j: int) -> tuple:
    """Energies n + 1/2 for n = 0..2j, independent of the deformation."""
    if not (isinstance(j, int) and j >= 1):
        raise ValueError(f"model requires integer j >= 1, got j={j}")
    return tuple(n + 0.5 for n in range(2 * j + 1))


def _families(j: int, ctilde):
    """Accurate evaluators for the two interleaved dual Hahn families of the model.

    A rational ctilde (int/Fraction) is kept exact, which makes the rational
    escalation path far cheaper than for a binary-float parameter.
    """
    if not isinstance(ctilde, (int, Fraction)):
        ctilde = float(ctilde)
    even = NormalizedDualHahn(DualHahnParams.even_family(ctilde, j))
    odd = NormalizedDualHahn(DualHahnParams.odd_family(ctilde, j - 1))
    return even, odd


def analytic_U(j: int, ctilde: float) -> np.ndarray:
    """Orthogonal eigenvector matrix of the position operator; column l = j+q.

    Even rows 2r come from the degenerate dual Hahn family ((-c-1)/2, (c-1)/2, j),
    odd rows 2r+1 from ((1-c)/2, (c+1)/2, j-1); satisfies M^q U = U D^q with
    D^q = diag(-2j, ..., 2j) in steps of 2.
    """
    _check_model(j, ctilde)
    dim = 2 * j + 1
    u = np.zeros((dim, dim))
    isq2 = 1 / math.sqrt(2)
    fam_even, fam_odd = _families(j, ctilde)   # rational ctilde stays exact

    for r in range(j + 1):
        sign = -1.0 if r % 2 else 1.0
        u[2 * r, j] = sign * fam_even.tilde(r, 0)
        for s in range(1, j + 1):
            val = sign * isq2 * fam_even.tilde(r, s)
            u[2 * r, j - s] = val
            u[2 * r, j + s] = val

    for r in range(j):
        sign = -1.0 if r % 2 else 1.0
        for s in range(j):
            val = sign * isq2 * fam_odd.tilde(r, s)
            u[2 * r + 1, j + s + 1] = val
            u[2 * r + 1, j - s - 1] = -val
    return u


def analytic_V(j: int, ctilde: float) -> np.ndarray:
    """Unitary eigenvector matrix of the momentum operator: V = J U with J = -i diag(i^k).

    Satisfies (M^p / 2i) V = V D with D = diag(-j, ..., j).
    """
    u = analytic_U(j, ctilde)
    phases = np.array([_JPHASE[k % 4] for k in range(2 * j + 1)])
    return phases[:, None] * u


def _wavefunction_value(kind, n, q, j, ctilde, fam_even, fam_odd):
    """Evaluate the printed closed forms, escalating to exact arithmetic on cancellation.

    Even levels 2m: (+-) W(m,q)^(1/2) / sqrt(2 - delta_q0) times the terminating
    3F2 (-q, q, -m; (1-c)/2, -j), which is R_m of the even family at |q|.
    Odd levels 2m+1: prefactor q sqrt((2m+1-c)(j-m)) / ((1-c)j) times W^(1/2)
    times the 3F2 (-q+1, q+1, -m; (3-c)/2, -j+1), i.e. R_m of the odd family at
    |q|-1; W(m,q) = w(|q|)/h_m of the even family in both.
    """
    m, is_odd = divmod(n, 2)
    if not is_odd:
        val = fam_even.tilde(m, abs(q)) / math.sqrt(2 - (q == 0))
        if kind == "position":
            return (-1) ** m * val
        return -1j * val
    if q == 0:
        return 0.0 if kind == "position" else 0j
    rval, rerr = fam_odd.r_float_info(m, abs(q) - 1)
    root_w = math.sqrt(fam_even.w[abs(q)] / fam_even.h[m])
    pref = q * math.sqrt((2 * m + 1 - ctilde) * (j - m)) / ((1 - ctilde) * j)
    if rerr * abs(pref) * root_w <= NormalizedDualHahn.TARGET:
        val = pref * root_w * rval
    else:
        r = fam_odd.exact_R(m, abs(q) - 1)
        if r == 0:
            val = 0.0
        else:
            ct = -1 - 2 * fam_even.exact_params.gamma   # the family's exact ctilde
            inner = (q * q * (2 * m + 1 - ct) * (j - m) * fam_even.w_exact[abs(q)] * r * r
                     / (fam_even.h_exact[m] * (1 - ct) ** 2 * j * j))
            sign = (1 if q > 0 else -1) * (1 if r > 0 else -1)
            val = sign * math.sqrt(float(inner))
    if kind == "position":
        return (-1) ** m * val
    return complex(val)


def wavefunction(kind: str, n: int, point: int, j: int, ctilde: float):
    """Closed-form wavefunction value: position phi_n(q) (real) or momentum psi_n(p) (complex).

    Equals the (n, j+point) entry of analytic_U resp. analytic_V.
    """
    if kind not in ("position", "momentum"):
        raise ValueError(f"kind must be 'position' or 'momentum', got {kind!r}")
    _check_model(j, ctilde)
    if not 0 <= n <= 2 * j:
        raise ValueError(f"level n={n} out of range 0..{2 * j}")
    if not -j <= point <= j:
        raise ValueError(f"grid point {point} out of range -{j}..{j}")
    fam_even, fam_odd = _families(j, ctilde)
    return _wavefunction_value(kind, n, point, j, float(ctilde), fam_even, fam_odd)


@dataclass(frozen=True)
class WavefunctionTable:
    """Wavefunction values for a set of levels on the grid q = -j..j."""
    two_j: int
    ctilde: float
    kind: str
    levels: tuple
    grid: tuple
    values: np.ndarray   # shape (len(levels), len(grid))

    def row_norms(self) -> np.ndarray:
        return np.sqrt(np.sum(np.abs(self.values) ** 2, axis=1))

    def to_csv(self) -> str:
        lines = ["q,n,re,im"]
        for row, n in enumerate(self.levels):
            for col, q in enumerate(self.grid):
                v = complex(self.values[row, col])
                lines.append(f"{q},{n},{format(v.real, '.17g')},{format(v.imag, '.17g')}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        def arr(vals, fmt=lambda v: format(v, ".17g")):
            return "[" + ", ".join(fmt(v) for v in vals) + "]"
        rows_re = ", ".join(arr([complex(v).real for v in row]) for row in self.values)
        rows_im = ", ".join(arr([complex(v).imag for v in row]) for row in self.values)
        return (
            "{"
            f'"two_j": {self.two_j}, '
            f'"ctilde": {format(self.ctilde, ".17g")}, '
            f'"kind": "{self.kind}", '
            f'"levels": {arr(self.levels, str)}, '
            f'"grid": {arr(self.grid, str)}, '
            f'"re": [{rows_re}], '
            f'"im": [{rows_im}]'
            "}"
        )


def wavefunction_table(kind: str, levels, j: int, ctilde: float) -> WavefunctionTable:
    """Tabulate wavefunctions for the given levels; each row is checked to have unit norm."""
    if kind not in ("position", "momentum"):
        raise ValueError(f"kind must be 'position' or 'momentum', got {kind!r}")
    _check_model(j, ctilde)
    levels = tuple(levels)
    for n in levels:
        if not 0 <= n <= 2 * j:
            raise ValueError(f"level n={n} out of range 0..{2 * j}")
    grid = tuple(range(-j, j + 1))
    dtype = complex if kind == "momentum" else float
    vals = np.empty((len(levels), len(grid)), dtype=dtype)
    fam_even, fam_odd = _families(j, ctilde)
    for row, n in enumerate(levels):
        for col, q in enumerate(grid):
            vals[row, col] = _wavefunction_value(kind, n, q, j, float(ctilde), fam_even, fam_odd)
    table = WavefunctionTable(2 * j, float(ctilde), kind, levels, grid, vals)
    norms = table.row_norms()
    if not np.allclose(norms, 1.0, rtol=0, atol=1e-8):
        raise AssertionError(f"wavefunction row norms deviate from 1: {norms}")
    return table


@dataclass(frozen=True)
class BoundaryLimitReport:
    side: int
    j: int
    eps: float
    max_deviation: float
    worst: tuple   # (n, q) achieving the max


def boundary_limit_check(side: int, j: int, eps: float) -> BoundaryLimitReport:
    """Probe the parameter-boundary relations of the normalized dual Hahn functions.

    side=-1: R~_n(lam(q); -1+eps, 0, j) against -R~_{n-1}(lam(q-1); 1, 0, j-1)
             (the n=0 limit is 0);
    side=+1: R~_n(lam(q); 0, -1+eps, j) against  R~_n(lam(q-1); 0, 1, j-1).
    Deviations are O(eps) for q = 1..j.
    """
    if side not in (-1, +1):
        raise ValueError(f"side must be -1 or +1, got {side}")
    if not 0 < eps < 1:
        raise ValueError(f"need 0 < eps < 1, got {eps}")
    worst = (0.0, (0, 0))
    if side == -1:
        near = DualHahnParams(-1 + eps, 0.0, j)
        target = DualHahnParams(1.0, 0.0, j - 1)
        for n in range(j + 1):
            for q in range(1, j + 1):
                lhs = dual_hahn_normalized(n, q, near)
                rhs = 0.0 if n == 0 else -dual_hahn_normalized(n - 1, q - 1, target)
                dev = abs(lhs - rhs)
                if dev > worst[0]:
                    worst = (dev, (n, q))
    else:
        near = DualHahnParams(0.0, -1 + eps, j)
        target = DualHahnParams(0.0, 1.0, j - 1)
        for n in range(j):
            for q in range(1, j + 1):
                lhs = dual_hahn_normalized(n, q, near)
                rhs = dual_hahn_normalized(n, q - 1, target)
                dev = abs(lhs - rhs)
                if dev > worst[0]:
                    worst = (dev, (n, q))
    return BoundaryLimitReport(side, j, eps, worst[0], worst[1])


def scaled_limit_error(n: int, j: int, ctilde: float) -> float:
    """Max over the grid of |j^(1/4) phi_n(q) - Psi_n^(a)(q/sqrt(j))| with a = (1-ctilde)/2.

    The limit holds pointwise in the scaled variable x = q/sqrt(j) away from
    x = 0.  For even levels with a != 1/2 the parabose envelope |x|^(a-1/2) is
    singular (a < 1/2) or merely Hoelder (a > 1/2) at the origin, where grid
    convergence is non-uniform: those lattice points, |q| < sqrt(j)/4, are left
    out of the comparison.  For a = 1/2 and for all odd levels the whole grid
    participates.
    """
    _check_model(j, ctilde)
    if not 0 <= n <= 2 * j:
        raise ValueError(f"level n={n} out of range 0..{2 * j}")
    fam_even, fam_odd = _families(j, ctilde)
    ctilde = float(ctilde)
    a = (1 - ctilde) / 2
    scale = j ** 0.25
    root_j = math.sqrt(j)
    origin_cut = root_j / 4 if (n % 2 == 0 and a != 0.5) else 0.0
    worst = 0.0
    for q in range(-j, j + 1):
        if abs(q) < origin_cut:
            continue
        discrete = scale * _wavefunction_value("position", n, q, j, ctilde, fam_even, fam_odd)
        continuum = parabose_wavefunction(n, a, q / root_j)
        worst = max(worst, abs(discrete - continuum))
    return worst
