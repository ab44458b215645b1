"""Unitary finite-dimensional representations of su(2) extended by a parity involution.

The algebra has generators J0, J+, J-, P with P^2 = 1, [P, J0] = 0, {P, J±} = 0,
[J0, J±] = ±J± and the deformed relation [J+, J-] = 2 J0 + c P.  Irreducible
unitary representations of dimension 2j+1 exist for integer j when 2j+1 > |c|
and for half-integer j when 2j > -c*eps; this module builds them and the
associated invariants (Casimir scalar, anticommutator-closed K generators).

Rational parameters are kept exact throughout: a representation built with a
Fraction (or int) deformation parameter carries exact squared off-diagonals,
so identity checks can run with zero tolerance (see :mod:`finosc.exact`).
"""
from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

from . import exact


@dataclass(frozen=True, order=True)
class HalfInt:
    """Integer or half-integer j, stored exactly as two_j."""
    two_j: int

    def __post_init__(self):
        if self.two_j < 0 or self.two_j != int(self.two_j):
            raise ValueError(f"two_j must be a nonnegative integer, got {self.two_j}")

    @property
    def j(self) -> float:
        return self.two_j / 2

    @property
    def is_integer(self) -> bool:
        return self.two_j % 2 == 0

    def __str__(self):
        return str(self.two_j // 2) if self.is_integer else f"{self.two_j}/2"


@dataclass(frozen=True)
class AlgebraParams:
    """Deformation parameter c and parity sign eps of the highest weight vector."""
    c: object
    epsilon: int = 1

    def __post_init__(self):
        if self.epsilon not in (+1, -1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon}")

    @property
    def exact(self) -> bool:
        return isinstance(self.c, (int, Fraction))


def admissible(j: HalfInt, params: AlgebraParams) -> bool:
    """Whether a unitary irreducible representation of dimension 2j+1 exists (strict inequalities)."""
    if j.is_integer:
        return j.two_j + 1 > abs(params.c)
    return j.two_j > -params.c * params.epsilon


def highest_weight(n: int, c, epsilon: int = 1):
    """Largest J0 eigenvalue in the (n+1)-dimensional representation.

    lambda = n/2 - c*eps/(2(n+1)) * (1+(-1)^n)/2: the deformation shifts the
    weight only in odd dimensions (n even).
    """
    if isinstance(c, float):
        return n / 2 - (c * epsilon / (2 * (n + 1))) * ((1 + (-1) ** n) // 2)
    lam = Fraction(n, 2)
    if n % 2 == 0:
        lam -= Fraction(c * epsilon, 2 * (n + 1))
    return lam


def coeff_A(k: int, n: int, c, epsilon: int = 1):
    """Coefficient A(k) in J+ v_{k+1} = A(k) v_k, for the (n+1)-dimensional module."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    ce = c * epsilon
    if n % 2 == 0:
        ct = ce / (n + 1) if isinstance(ce, float) else Fraction(ce, n + 1)
        if k % 2:
            return (k + 1) * (n - k - ct)
        return (k + 1 + ct) * (n - k)
    if k % 2:
        return (k + 1) * (n - k)
    return (k + 1) * (n - k) + ce


@dataclass(frozen=True)
class RepMatrices:
    """Banded storage of one irreducible representation in the basis |j,-j> ... |j,j>.

    J0 and P are diagonal; J+ has jplus_offdiag on the subdiagonal (row k+1,
    col k), J- the equal sequence on the superdiagonal, so J±^T = J∓.  When the
    deformation parameter is rational, offdiag_sq/j0_frac/ctilde_frac carry the
    exact values behind the float views.
    """
    two_j: int
    c: object
    epsilon: int
    dim: int
    ctilde: float
    j0_diag: tuple
    p_diag: tuple
    jplus_offdiag: tuple
    jminus_offdiag: tuple
    offdiag_sq: tuple = None      # Fractions, exact squares of the off-diagonal
    j0_frac: tuple = None
    ctilde_frac: object = None

    @property
    def exact(self) -> bool:
        return self.offdiag_sq is not None

    def j0_matrix(self) -> np.ndarray:
        return np.diag(np.asarray(self.j0_diag, dtype=float))

    def p_matrix(self) -> np.ndarray:
        return np.diag(np.asarray(self.p_diag, dtype=float))

    def jplus_matrix(self) -> np.ndarray:
        return np.diag(np.asarray(self.jplus_offdiag, dtype=float), k=-1)

    def jminus_matrix(self) -> np.ndarray:
        return np.diag(np.asarray(self.jminus_offdiag, dtype=float), k=1)

    def to_json(self) -> str:
        """JSON export with floats at 17 significant digits (byte-deterministic)."""
        def arr(vals):
            return "[" + ", ".join(format(float(v), ".17g") for v in vals) + "]"
        return (
            "{"
            f'"two_j": {self.two_j}, '
            f'"c": {format(float(self.c), ".17g")}, '
            f'"epsilon": {self.epsilon}, '
            f'"j0_diag": {arr(self.j0_diag)}, '
            f'"p_diag": {arr(self.p_diag)}, '
            f'"j_offdiag": {arr(self.jplus_offdiag)}'
            "}"
        )

    def exact_generators(self):
        """(ring, J0, Jp, Jm, P) over the surd ring; requires rational parameters."""
        if not self.exact:
            raise ValueError("representation was built with a non-rational parameter")
        ring = exact.SurdRing(self.offdiag_sq)
        jp = exact.from_tridiagonal(ring, sub_surds=True)
        jm = exact.from_tridiagonal(ring, super_surds=True)
        j0 = exact.from_tridiagonal(ring, diag=self.j0_frac)
        p = exact.from_tridiagonal(ring, diag=self.p_diag)
        return ring, j0, jp, jm, p


def _inadmissible_message(j: HalfInt, params: AlgebraParams) -> str:
    if j.is_integer:
        return (f"inadmissible: need 2j+1 > |c|, but {j.two_j + 1} > {abs(params.c)} fails "
                f"(j={j}, c={params.c})")
    return (f"inadmissible: need 2j > -c*eps, but {j.two_j} > {-params.c * params.epsilon} fails "
            f"(j={j}, c={params.c}, eps={params.epsilon})")


def build_representation(j: HalfInt, params: AlgebraParams) -> RepMatrices:
    """Construct the dimension-(2j+1) representation; rejects inadmissible parameters."""
    if not admissible(j, params):
        raise ValueError(_inadmissible_message(j, params))
    n = j.two_j
    dim = n + 1
    eps = params.epsilon

    # off-diagonal index k sits between basis states k and k+1; its square is A(n-1-k)
    if params.exact:
        sq = tuple(coeff_A(n - 1 - k, n, Fraction(params.c), eps) for k in range(n))
        for k, s in enumerate(sq):
            assert s > 0, f"A-coefficient not positive at offdiag {k}: {s}"
        offdiag = tuple(math.sqrt(s) for s in sq)
        if j.is_integer:
            ct = Fraction(Fraction(params.c) * eps, n + 1)
            j0f = tuple(Fraction(2 * i - n, 2) - ct / 2 for i in range(dim))
        else:
            ct = None
            j0f = tuple(Fraction(2 * i - n, 2) for i in range(dim))
        j0 = tuple(float(v) for v in j0f)
        ctilde = float(ct) if ct is not None else 0.0
    else:
        sq = None
        j0f = None
        ct = None
        sq_f = [coeff_A(n - 1 - k, n, float(params.c), eps) for k in range(n)]
        for k, s in enumerate(sq_f):
            assert s > 0, f"A-coefficient not positive at offdiag {k}: {s}"
        offdiag = tuple(math.sqrt(s) for s in sq_f)
        if j.is_integer:
            ctilde = params.c * eps / (n + 1)
            j0 = tuple((2 * i - n) / 2 - ctilde / 2 for i in range(dim))
        else:
            ctilde = 0.0
            j0 = tuple((2 * i - n) / 2 for i in range(dim))

    if j.is_integer:
        p = tuple(eps * (-1) ** i for i in range(dim))
    else:
        p = tuple(eps * (-1) ** (i + 1) for i in range(dim))

    return RepMatrices(
        two_j=n, c=params.c, epsilon=eps, dim=dim, ctilde=ctilde,
        j0_diag=j0, p_diag=p, jplus_offdiag=offdiag, jminus_offdiag=offdiag,
        offdiag_sq=sq, j0_frac=j0f, ctilde_frac=ct,
    )


def casimir_value(j: HalfInt, params: AlgebraParams):
    """Scalar of Omega = 2 J0^2 + J+J- + J-J+ on the representation."""
    if not admissible(j, params):
        raise ValueError(_inadmissible_message(j, params))
    if params.exact:
        jj1 = Fraction(j.two_j, 2) * Fraction(j.two_j + 2, 2)
        if j.is_integer:
            ct = Fraction(Fraction(params.c) * params.epsilon, j.two_j + 1)
            return 2 * jj1 + ct * ct / 2
        return 2 * jj1 + Fraction(params.c) * params.epsilon
    jj1 = j.j * (j.j + 1)
    if j.is_integer:
        ct = params.c * params.epsilon / (j.two_j + 1)
        return 2 * jj1 + ct * ct / 2
    return 2 * jj1 + params.c * params.epsilon


def bannai_ito_generators(rep: RepMatrices, c=None):
    """Dense K1 = (J+ + J-)/2, K2 = -(J+ - J-)P/2, K3 = J0 P.

    These close under anticommutators: {K1,K2} = K3 + c/2, {K2,K3} = K1,
    {K3,K1} = K2, and each K_i is symmetric.
    """
    if c is not None and c != rep.c:
        raise ValueError(f"parameter mismatch: rep has c={rep.c}, got c={c}")
    jp = rep.jplus_matrix()
    jm = rep.jminus_matrix()
    p = rep.p_matrix()
    k1 = (jp + jm) / 2
    k2 = -(jp - jm) @ p / 2
    k3 = rep.j0_matrix() @ p
    return k1, k2, k3


def verify_remark1(j: HalfInt, alpha) -> bool:
    """Check the factorized J± matrix elements of the half-integer representations.

    With c*eps = (2a+1)^2 + (2a+1)(2j+1), the squared off-diagonals must factor
    as (j-m+2a+1)(j+m+2a+2) on even j+m transitions, equivalently
    (j-m+2a+2)(j+m+2a+1) seen from the J- side.
    """
    if j.is_integer:
        raise ValueError(f"j={j} is an integer; the factorization concerns half-integer j")
    exact_mode = isinstance(alpha, (int, Fraction))
    a = Fraction(alpha) if exact_mode else alpha
    ce = (2 * a + 1) ** 2 + (2 * a + 1) * (j.two_j + 1)
    params = AlgebraParams(ce, 1)
    if not admissible(j, params):
        raise ValueError(_inadmissible_message(j, params))
    rep = build_representation(j, params)
    n = j.two_j
    for k in range(n):
        if k % 2:
            continue
        # transition index k: from m = k - j, so j+m = k and j-m = n-k
        plus_side = (n - k + 2 * a + 1) * (k + 2 * a + 2)
        minus_side = (n - (k + 1) + 2 * a + 2) * ((k + 1) + 2 * a + 1)
        got = rep.offdiag_sq[k] if exact_mode else rep.jplus_offdiag[k] ** 2
        if exact_mode:
            if got != plus_side or got != minus_side:
                return False
        elif abs(got - plus_side) > 1e-12 * max(1.0, abs(plus_side)) or \
                abs(got - minus_side) > 1e-12 * max(1.0, abs(minus_side)):
            return False
    return True
