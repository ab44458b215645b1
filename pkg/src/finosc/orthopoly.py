"""Terminating hypergeometric sums, dual Hahn polynomials, Krawtchouk and parabose functions.

All evaluators use generic arithmetic: feed them ``fractions.Fraction`` parameters
and they return exact rationals (except the normalized/parabose functions, which
take a square root at the very end).
"""
import math
from dataclasses import dataclass
from fractions import Fraction


def pochhammer(a, k):
    """Rising factorial (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1."""
    out = 1
    for i in range(k):
        out = out * (a + i)
    return out


def _is_nonpos_int(v) -> bool:
    if isinstance(v, float):
        return v <= 0 and v == int(v)
    if isinstance(v, Fraction):
        return v <= 0 and v.denominator == 1
    return isinstance(v, int) and v <= 0


def _terminating_sum(nums, dens, arg, terms=None):
    """Sum a hypergeometric series with argument `arg` by term-ratio recurrence.

    Terminates at the smallest k with a numerator parameter equal to -k.
    Exact for Fraction/int inputs; float inputs are accumulated with fsum.
    """
    K = None
    for a in nums:
        if _is_nonpos_int(a):
            k = int(-a)
            K = k if K is None else min(K, k)
    if K is None:
        raise ValueError("series does not terminate: no nonpositive-integer numerator parameter")
    if terms is not None and K + 1 > terms:
        raise ValueError(f"series needs {K + 1} summands, more than the allowed {terms}")

    exact = not any(isinstance(v, float) for v in (*nums, *dens, arg))
    term = Fraction(1) if exact else 1.0
    out = [term]
    for k in range(K):
        for b in dens:
            if b + k == 0:
                raise ValueError(f"denominator parameter {b} hits zero at summand k={k + 1}")
        for a in nums:
            term = term * (a + k)
        for b in dens:
            term = term / (b + k)
        term = term * arg / (k + 1)
        out.append(term)
    if any(isinstance(t, float) for t in out):
        return math.fsum(out)
    return sum(out)


def hyp3f2_unit(a1, a2, a3, b1, b2, terms=None):
    """Terminating 3F2(a1,a2,a3; b1,b2; 1).

    One numerator parameter must be a nonpositive integer; a denominator
    parameter reaching zero before the terminating index is rejected.
    """
    return _terminating_sum((a1, a2, a3), (b1, b2), 1, terms)


def _hyp2f1(a1, a2, b1, z):
    return _terminating_sum((a1, a2), (b1,), z)


@dataclass(frozen=True)
class DualHahnParams:
    """Dual Hahn parameter triple (gamma, delta, N) on the lattice x(x+gamma+delta+1).

    The degenerate flag marks gamma+delta+1 = 0, where the lattice collapses to
    x**2 and the weight needs a removable-singularity limit.  The factories
    :meth:`even_family` / :meth:`odd_family` build the two parametrizations used
    by the odd-dimensional oscillator model.
    """
    gamma: object
    delta: object
    N: int
    degenerate: bool = None

    def __post_init__(self):
        if self.N < 0 or self.N != int(self.N):
            raise ValueError(f"N must be a nonnegative integer, got {self.N}")
        g, d = self.gamma, self.delta
        if not ((g > -1 and d > -1) or (g < -self.N and d < -self.N)):
            raise ValueError(f"inadmissible dual Hahn parameters gamma={g}, delta={d}, N={self.N}")
        if self.degenerate is None:
            object.__setattr__(self, "degenerate", g + d + 1 == 0)

    @classmethod
    def even_family(cls, ctilde, N: int) -> "DualHahnParams":
        """Parameters ((-c-1)/2, (c-1)/2, N); degenerate by construction."""
        gamma = (-ctilde - 1) / 2 if isinstance(ctilde, float) else Fraction(-ctilde - 1, 2)
        delta = -1 - gamma
        return cls(gamma, delta, N, degenerate=True)

    @classmethod
    def odd_family(cls, ctilde, N: int) -> "DualHahnParams":
        """Parameters ((1-c)/2, (c+1)/2, N); gamma+delta+1 = 2."""
        gamma = (1 - ctilde) / 2 if isinstance(ctilde, float) else Fraction(1 - ctilde, 2)
        delta = 1 - gamma
        return cls(gamma, delta, N, degenerate=False)

    def lattice(self, x: int):
        """Lattice point lambda(x)."""
        return x * x if self.degenerate else x * (x + self.gamma + self.delta + 1)


def _check_range(name, v, hi):
    if not (isinstance(v, int) and 0 <= v <= hi):
        raise ValueError(f"{name}={v} out of range 0..{hi}")


def _div(num, den):
    """Quotient that stays exact for rational operands."""
    if isinstance(num, float) or isinstance(den, float):
        return num / den
    return Fraction(num, den)


def dual_hahn_R(n: int, x: int, p: DualHahnParams):
    """Dual Hahn polynomial R_n(lambda(x); gamma, delta, N) as a terminating 3F2."""
    _check_range("n", n, p.N)
    _check_range("x", x, p.N)
    a2 = x if p.degenerate else x + p.gamma + p.delta + 1
    return hyp3f2_unit(-x, a2, -n, p.gamma + 1, -p.N)


def dual_hahn_weight(x: int, p: DualHahnParams):
    """Orthogonality weight w(x; gamma, delta, N).

    In the degenerate case gamma+delta+1 = 0 the printed weight is 0/0 at every
    x; the removable limit (delta -> delta+t, t -> 0) gives w(0) = 1 and, for
    x >= 1, the factor 2/(x+1)_N in place of (2x+g+d+1)/(x+g+d+1)_{N+1}.
    """
    _check_range("x", x, p.N)
    g, d, N = p.gamma, p.delta, p.N
    if p.degenerate:
        if x == 0:
            return 1
        num = 2 * pochhammer(g + 1, x) * pochhammer(N - x + 1, x) * math.factorial(N)
        den = pochhammer(x + 1, N) * pochhammer(d + 1, x) * math.factorial(x)
    else:
        s = g + d + 1
        num = (2 * x + s) * pochhammer(g + 1, x) * pochhammer(N - x + 1, x) * math.factorial(N)
        den = pochhammer(x + s, N + 1) * pochhammer(d + 1, x) * math.factorial(x)
    if den == 0:
        raise ValueError(f"weight pole at x={x}: gamma+delta+1={g + d + 1} is a nonpositive integer")
    return _div(num, den)


def dual_hahn_norm(n: int, p: DualHahnParams):
    """Squared norm h_n = [binom(gamma+n, n) binom(N+delta-n, N-n)]^{-1}."""
    _check_range("n", n, p.N)
    den = pochhammer(p.gamma + 1, n) * pochhammer(p.delta + 1, p.N - n)
    if den == 0:
        raise ValueError(f"h_{n} has a pole: a generalized binomial vanishes")
    num = math.factorial(n) * math.factorial(p.N - n)
    return _div(num, den)


def dual_hahn_normalized(n: int, x: int, p: DualHahnParams) -> float:
    """Orthonormal function sqrt(w(x)/h_n) R_n(lambda(x)); rows satisfy sum_x R~_m R~_n = delta_mn."""
    w = dual_hahn_weight(x, p)
    h = dual_hahn_norm(n, p)
    if w < 0 or h <= 0:
        raise ValueError(f"inadmissible parameters: w({x})={w}, h_{n}={h}")
    return math.sqrt(w / h) * dual_hahn_R(n, x, p)


def krawtchouk_symmetric(n: int, x: int, j: int):
    """Symmetric Krawtchouk value 2F1(-n, -x; -2j; 2) on x = 0..2j."""
    _check_range("n", n, 2 * j)
    _check_range("x", x, 2 * j)
    return _hyp2f1(-n, -x, -2 * j, 2)


def laguerre(m: int, alpha: float, t: float) -> float:
    """Generalized Laguerre L_m^(alpha)(t) by the three-term recurrence in degree."""
    if m == 0:
        return 1.0
    prev, cur = 1.0, 1.0 + alpha - t
    for k in range(1, m):
        prev, cur = cur, ((2 * k + 1 + alpha - t) * cur - (k + alpha) * prev) / (k + 1)
    return cur


def hermite(n: int, x: float) -> float:
    """Physicists' Hermite H_n(x) by recurrence."""
    if n == 0:
        return 1.0
    prev, cur = 1.0, 2.0 * x
    for k in range(1, n):
        prev, cur = cur, 2.0 * x * cur - 2.0 * k * prev
    return cur


def parabose_wavefunction(n: int, a: float, x: float) -> float:
    """Parabose oscillator wavefunction Psi_n^(a)(x), orthonormal on the line.

    Even levels carry |x|^(a-1/2) L_m^(a-1)(x^2); odd levels x|x|^(a-1/2) L_m^(a)(x^2).
    For a < 1/2 the even-level functions diverge at x = 0 (returns inf there).
    """
    if a <= 0:
        raise ValueError(f"parabose parameter must be positive, got a={a}")
    m, odd = divmod(n, 2)
    envelope = math.exp(-x * x / 2)
    if odd:
        amp = math.sqrt(math.factorial(m) / math.gamma(a + m + 1))
        radial = math.copysign(abs(x) ** (a + 0.5), x) if x != 0 else 0.0
        return (-1) ** m * amp * radial * envelope * laguerre(m, a, x * x)
    amp = math.sqrt(math.factorial(m) / math.gamma(a + m))
    if x == 0:
        if a == 0.5:
            radial = 1.0
        else:
            radial = 0.0 if a > 0.5 else math.inf
    else:
        radial = abs(x) ** (a - 0.5)
    return (-1) ** m * amp * radial * envelope * laguerre(m, a - 1, x * x)


def dual_hahn_recurrence_table(p: DualHahnParams) -> list:
    """All R_n(lambda(x)), 0 <= n, x <= N, via the three-term recurrence in the degree.

    rows[n][x] = R_n(lambda(x)); exact for rational parameters.  Serves both as
    an independent cross-check on the hypergeometric summation and as the
    rational-mode workhorse behind the accurate evaluator below.
    """
    N = p.N
    exact = not (isinstance(p.gamma, float) or isinstance(p.delta, float))
    one = Fraction(1) if exact else 1.0
    lam = [p.lattice(x) for x in range(N + 1)]
    rows = [[one] * (N + 1)]
    coeff_a = [(n + p.gamma + 1) * (n - N) for n in range(N)]
    coeff_c = [n * (n - p.delta - 1 - N) for n in range(N)]
    for n in range(N):
        prev = rows[-2] if n >= 1 else None
        cur = rows[-1]
        nxt = []
        for x in range(N + 1):
            acc = (lam[x] + coeff_a[n] + coeff_c[n]) * cur[x]
            if n >= 1:
                acc -= coeff_c[n] * prev[x]
            nxt.append(_div(acc, coeff_a[n]))
        rows.append(nxt)
    return rows


def _exact_view(p: DualHahnParams) -> DualHahnParams:
    """Exact-rational twin of a (possibly float) parameter set.

    Degenerate families keep gamma+delta+1 = 0 exactly; for the rest the float
    values are taken verbatim as binary rationals.
    """
    if not (isinstance(p.gamma, float) or isinstance(p.delta, float)):
        return p
    g = Fraction(p.gamma)
    if p.degenerate:
        return DualHahnParams(g, -1 - g, p.N, degenerate=True)
    return DualHahnParams(g, Fraction(p.delta), p.N)


class NormalizedDualHahn:
    """Accurate evaluator for the orthonormal functions sqrt(w(x)/h_n) R_n(lambda(x)).

    The float term-ratio sum carries a running cancellation monitor; whenever it
    cannot guarantee ~1e-13 absolute accuracy of the normalized value, the value
    is recomputed in exact rational arithmetic (weights, norms and the recurrence
    table are cached).  Weights and norms are always converted from their exact
    values, since near the parameter boundary their float evaluation alone costs
    more accuracy than the tight tolerances allow.
    """

    #: absolute accuracy target for one normalized value
    TARGET = 1e-13

    def __init__(self, params: DualHahnParams):
        self.exact_params = _exact_view(params)
        px = self.exact_params
        self.N = px.N
        self.gamma_f = float(px.gamma)
        self.a2_shift = 0 if px.degenerate else float(px.gamma + px.delta + 1)
        self.w_exact = [dual_hahn_weight(x, px) for x in range(px.N + 1)]
        self.h_exact = [dual_hahn_norm(n, px) for n in range(px.N + 1)]
        self.w = [float(v) for v in self.w_exact]
        self.h = [float(v) for v in self.h_exact]
        self._table = None

    def exact_R(self, n: int, x: int):
        if self._table is None:
            self._table = dual_hahn_recurrence_table(self.exact_params)
        return self._table[n][x]

    def r_float_info(self, n: int, x: int):
        """(value, absolute error estimate) of R_n(lambda(x)) in plain float."""
        terms = [1.0]
        term = 1.0
        biggest = 1.0
        a2 = x + self.a2_shift
        for k in range(min(n, x)):
            term *= (k - x) * (a2 + k) * (k - n)
            term /= (self.gamma_f + 1 + k) * (k - self.N) * (k + 1)
            terms.append(term)
            biggest = max(biggest, abs(term))
        return math.fsum(terms), biggest * len(terms) * 2.0 ** -50

    def tilde(self, n: int, x: int) -> float:
        """sqrt(w(x)/h_n) R_n(lambda(x)) to ~1e-13 absolute accuracy."""
        val, err = self.r_float_info(n, x)
        scale = math.sqrt(self.w[x] / self.h[n])
        if err * scale <= self.TARGET:
            return scale * val
        r = self.exact_R(n, x)
        if r == 0:
            return 0.0
        mag = math.sqrt(float(self.w_exact[x] * r * r / self.h_exact[n]))
        return -mag if r < 0 else mag


@dataclass(frozen=True)
class GridFunction:
    """Values of a function on the lattice x = 0..N."""
    params: DualHahnParams
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.params.N + 1:
            raise ValueError(f"expected {self.params.N + 1} values, got {len(self.values)}")

    def to_csv(self) -> str:
        lines = ["x,value"]
        for x, v in enumerate(self.values):
            lines.append(f"{x},{format(float(v), '.17g')}")
        return "\n".join(lines) + "\n"


def weight_table(p: DualHahnParams) -> GridFunction:
    return GridFunction(p, tuple(dual_hahn_weight(x, p) for x in range(p.N + 1)))
