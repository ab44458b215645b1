"""Reflection-differential realization on two-variable homogeneous polynomials.

The representation space is spanned by the monomials x^(j+m) y^(j-m); with
T_x = d/dx + (mu/x)(1 - R_x) and a companion T_y, the assignments
J+ = x T_y, J- = y T_x (plus a diagonal J0 and P = +/-R_x) satisfy the defining
relations.  Variant 1 (T_y = d/dy - (mu/y)(1 - R_x), P = R_x) is consistent for
integer j only; variant 2 (T_y = d/dy + (mu/y)(1 + R_x), P = -R_x) for
half-integer j only: in each case the formal 1/y term must annihilate x^(2j).

All monomial-basis matrices are exact over the rationals for rational mu.  The
monomial basis is not orthonormal for mu != 0, so comparison against the
orthonormal-basis matrices goes through diagonal-conjugation invariants.
"""
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

OPERATOR_NAMES = ("Tx", "Ty", "J0", "Jplus", "Jminus", "P")


@dataclass(frozen=True)
class HomogPolySpace:
    """Degree-2j homogeneous polynomials; index i holds the monomial x^i y^(2j-i)."""
    two_j: int

    def __post_init__(self):
        if self.two_j < 1:
            raise ValueError(f"need two_j >= 1, got {self.two_j}")

    @property
    def dim(self) -> int:
        return self.two_j + 1


@dataclass(frozen=True)
class RealizationVariant:
    variant: int
    mu: object

    def __post_init__(self):
        if self.variant not in (1, 2):
            raise ValueError(f"variant must be 1 or 2, got {self.variant}")

    @property
    def exact(self) -> bool:
        return isinstance(self.mu, (int, Fraction))


def _check_compat(space: HomogPolySpace, rv: RealizationVariant):
    if rv.variant == 1 and space.two_j % 2:
        raise ValueError(f"variant 1 needs integer j: (1-R_x)x^{space.two_j} does not vanish")
    if rv.variant == 2 and space.two_j % 2 == 0:
        raise ValueError(f"variant 2 needs half-integer j: (1+R_x)x^{space.two_j} does not vanish")


def _refl_minus(mu, a: int):
    """Scalar of (mu/.)(1 - R_x) acting through x^a: mu (1 - (-1)^a)."""
    return 2 * mu if a % 2 else 0 * mu


def _refl_plus(mu, a: int):
    """Scalar of (mu/.)(1 + R_x) acting through x^a: mu (1 + (-1)^a)."""
    return 0 * mu if a % 2 else 2 * mu


def operator_matrix(op: str, space: HomogPolySpace, rv: RealizationVariant):
    """Exact monomial-basis matrix of one generator (nested lists, column = input index).

    Tx and Ty map into the degree-(2j-1) monomial basis, so their matrices have
    one row fewer than the square generator matrices.
    """
    if op not in OPERATOR_NAMES:
        raise ValueError(f"unknown operator {op!r}; expected one of {OPERATOR_NAMES}")
    _check_compat(space, rv)
    n = space.two_j
    dim = space.dim

    if op == "J0":
        m = _zeros(dim, dim)
        for i in range(dim):
            val = Fraction(2 * i - n, 2) if rv.exact else (2 * i - n) / 2
            if rv.variant == 1:
                val = val + rv.mu
            m[i][i] = val
        return m
    if op == "P":
        m = _zeros(dim, dim)
        for i in range(dim):
            sign = -1 if i % 2 else 1
            m[i][i] = sign if rv.variant == 1 else -sign
        return m

    lowers_degree = op in ("Tx", "Ty")
    rows = dim - 1 if lowers_degree else dim
    m = _zeros(rows, dim)
    for i in range(dim):
        a, b = i, n - i
        if op in ("Tx", "Jminus"):
            coeff = a + _refl_minus(rv.mu, a)            # d/dx + (mu/x)(1-R_x)
            target = i - 1
        else:
            if rv.variant == 1:
                coeff = b - _refl_minus(rv.mu, a)        # d/dy - (mu/y)(1-R_x)
            else:
                coeff = b + _refl_plus(rv.mu, a)         # d/dy + (mu/y)(1+R_x)
            target = i if op == "Ty" else i + 1
        if coeff == 0:
            continue
        if not 0 <= target < rows:
            raise ValueError(
                f"operator {op} pushes monomial x^{a} y^{b} out of the space "
                f"(boundary condition violated)"
            )
        m[target][i] = coeff
    return m


def _zeros(rows, cols):
    return [[0 for _ in range(cols)] for _ in range(rows)]


def _mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = _zeros(rows, cols)
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            if ai[k]:
                bk = b[k]
                row = out[i]
                for c in range(cols):
                    if bk[c]:
                        row[c] += ai[k] * bk[c]
    return out


def _mat_diff_max(a, b):
    worst = 0
    for ra, rb in zip(a, b):
        for x, y in zip(ra, rb):
            worst = max(worst, abs(x - y))
    return worst


def apply_operator(op: str, vec, space: HomogPolySpace, rv: RealizationVariant):
    """Image of a monomial-coefficient vector; Tx/Ty return degree-(2j-1) coefficients."""
    m = operator_matrix(op, space, rv)
    if len(vec) != space.dim:
        raise ValueError(f"vector length {len(vec)} != space dimension {space.dim}")
    return [sum(row[c] * vec[c] for c in range(space.dim)) for row in m]


def monomial_to_schwinger(space: HomogPolySpace, vec) -> np.ndarray:
    """Convert monomial coefficients to the normalized basis x^a y^b / sqrt(a! b!)."""
    n = space.two_j
    return np.array([
        float(v) * math.sqrt(math.factorial(i) * math.factorial(n - i))
        for i, v in enumerate(vec)
    ])


def schwinger_to_monomial(space: HomogPolySpace, vec) -> list:
    n = space.two_j
    return [
        float(v) / math.sqrt(math.factorial(i) * math.factorial(n - i))
        for i, v in enumerate(vec)
    ]


def realization_c(space: HomogPolySpace, rv: RealizationVariant):
    """Deformation parameter realized on degree-2j polynomials.

    Variant 1: c = -2 mu (2j+1); variant 2: c = (2 mu)^2 + 2 mu (2j+1).
    """
    if rv.variant == 1:
        return -2 * rv.mu * (space.two_j + 1)
    return (2 * rv.mu) ** 2 + 2 * rv.mu * (space.two_j + 1)


@dataclass(frozen=True)
class RelationReport:
    two_j: int
    variant: int
    mu: object
    c: object
    exact: bool
    residuals: dict
    failed: tuple

    @property
    def passed(self) -> bool:
        return not self.failed


def verify_defining_relations(space: HomogPolySpace, rv: RealizationVariant) -> RelationReport:
    """Check every defining relation as a matrix identity on the space.

    Exact (zero-residual) for rational mu; the commutator [J+, J-] is compared
    against 2 J0 + c P with the variant's realized c.
    """
    _check_compat(space, rv)
    dim = space.dim
    j0 = operator_matrix("J0", space, rv)
    jp = operator_matrix("Jplus", space, rv)
    jm = operator_matrix("Jminus", space, rv)
    p = operator_matrix("P", space, rv)
    ident = _zeros(dim, dim)
    for i in range(dim):
        ident[i][i] = 1
    c = realization_c(space, rv)

    def comm(a, b):
        ab, ba = _mat_mul(a, b), _mat_mul(b, a)
        return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(ab, ba)]

    def acomm(a, b):
        ab, ba = _mat_mul(a, b), _mat_mul(b, a)
        return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(ab, ba)]

    zero = _zeros(dim, dim)
    rhs_jpjm = [[2 * j0[i][k] + c * p[i][k] for k in range(dim)] for i in range(dim)]
    checks = {
        "P^2 = 1": (_mat_mul(p, p), ident),
        "[P, J0] = 0": (comm(p, j0), zero),
        "{P, J+} = 0": (acomm(p, jp), zero),
        "{P, J-} = 0": (acomm(p, jm), zero),
        "[J0, J+] = +J+": (comm(j0, jp), jp),
        "[J0, J-] = -J-": (comm(j0, jm), [[-x for x in row] for row in jm]),
        "[J+, J-] = 2J0 + cP": (comm(jp, jm), rhs_jpjm),
    }
    residuals = {}
    failed = []
    for name, (got, want) in checks.items():
        residuals[name] = _mat_diff_max(got, want)
        ok = residuals[name] == 0 if rv.exact else residuals[name] <= 1e-12 * dim
        if not ok:
            failed.append(name)
    return RelationReport(space.two_j, rv.variant, rv.mu, c, rv.exact, residuals, tuple(failed))


def similarity_invariants_match(space: HomogPolySpace, rv: RealizationVariant, rep) -> bool:
    """Compare diagonal-conjugation invariants of the realization with a representation.

    Invariants: the J0 diagonal, the P diagonal, and the diagonals of J+J- and
    J-J+ (the products survive any diagonal basis rescaling even though the
    individual J+/J- entries do not).  Exact when both sides are rational.
    """
    if rep.dim != space.dim:
        raise ValueError(f"dimension mismatch: realization {space.dim}, representation {rep.dim}")
    _check_compat(space, rv)
    j0 = operator_matrix("J0", space, rv)
    jp = operator_matrix("Jplus", space, rv)
    jm = operator_matrix("Jminus", space, rv)
    p = operator_matrix("P", space, rv)
    jpjm = _mat_mul(jp, jm)
    jmjp = _mat_mul(jm, jp)
    dim = space.dim

    exact = rv.exact and rep.exact
    if exact:
        mine = (
            [j0[i][i] for i in range(dim)],
            [p[i][i] for i in range(dim)],
            [jpjm[i][i] for i in range(dim)],
            [jmjp[i][i] for i in range(dim)],
        )
        sq = list(rep.offdiag_sq)
        theirs = (
            list(rep.j0_frac),
            list(rep.p_diag),
            [Fraction(0)] + sq,
            sq + [Fraction(0)],
        )
        return all(list(map(Fraction, m)) == list(map(Fraction, t)) for m, t in zip(mine, theirs))

    sq = [float(v) ** 2 for v in rep.jplus_offdiag]
    pairs = [
        ([float(j0[i][i]) for i in range(dim)], list(rep.j0_diag)),
        ([float(p[i][i]) for i in range(dim)], [float(v) for v in rep.p_diag]),
        ([float(jpjm[i][i]) for i in range(dim)], [0.0] + sq),
        ([float(jmjp[i][i]) for i in range(dim)], sq + [0.0]),
    ]
    return all(
        abs(x - y) <= 1e-12 * max(1.0, abs(x), abs(y))
        for mine, theirs in pairs
        for x, y in zip(mine, theirs)
    )
