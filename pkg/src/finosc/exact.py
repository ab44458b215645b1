"""Exact matrix arithmetic over rationals extended by square roots.

The representation matrices have off-diagonal entries sqrt(r_k) with rational
r_k, so every product of generators lives in the ring
Q[a_0,...,a_{m-1}] / (a_k^2 - r_k).  An entry is stored as a dict mapping a
frozenset of surd indices to a Fraction coefficient; multiplication reduces
squared surds back to rationals.  This is what lets the defining relations be
checked with zero tolerance instead of a float threshold.
"""
from fractions import Fraction

ONE = frozenset()


class SurdRing:
    """Arithmetic context: radicands[k] is the exact square of surd a_k."""

    def __init__(self, radicands):
        self.radicands = [Fraction(r) for r in radicands]

    def mul_entries(self, x: dict, y: dict) -> dict:
        out = {}
        for sx, cx in x.items():
            for sy, cy in y.items():
                coef = cx * cy
                for i in sx & sy:
                    coef *= self.radicands[i]
                key = sx ^ sy
                acc = out.get(key, 0) + coef
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return out


def entry(coef, surds=ONE) -> dict:
    coef = Fraction(coef)
    return {frozenset(surds): coef} if coef else {}


def e_add(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, v in y.items():
        acc = out.get(k, 0) + v
        if acc:
            out[k] = acc
        elif k in out:
            del out[k]
    return out


def e_neg(x: dict) -> dict:
    return {k: -v for k, v in x.items()}


def zeros(dim):
    return [[{} for _ in range(dim)] for _ in range(dim)]


def identity(dim, scale=1):
    m = zeros(dim)
    for i in range(dim):
        m[i][i] = entry(scale)
    return m


def mat_add(a, b):
    return [[e_add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[e_add(x, e_neg(y)) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, coef):
    coef = Fraction(coef)
    return [[{k: coef * v for k, v in x.items()} if coef else {} for x in row] for row in a]


def mat_mul(ring: SurdRing, a, b):
    dim = len(a)
    out = zeros(dim)
    for i in range(dim):
        for k in range(dim):
            if not a[i][k]:
                continue
            for j in range(dim):
                if b[k][j]:
                    out[i][j] = e_add(out[i][j], ring.mul_entries(a[i][k], b[k][j]))
    return out


def commutator(ring, a, b):
    return mat_sub(mat_mul(ring, a, b), mat_mul(ring, b, a))


def anticommutator(ring, a, b):
    return mat_add(mat_mul(ring, a, b), mat_mul(ring, b, a))


def mat_is_zero(a) -> bool:
    return all(not x for row in a for x in row)


def mat_equal(a, b) -> bool:
    return mat_is_zero(mat_sub(a, b))


def is_symmetric(a) -> bool:
    dim = len(a)
    return all(a[i][j] == a[j][i] for i in range(dim) for j in range(i + 1, dim))


def from_tridiagonal(ring: SurdRing, diag=None, sub_surds=False, super_surds=False):
    """Matrix with rational diagonal and/or surd off-diagonals a_k at position k."""
    dim = len(ring.radicands) + 1
    m = zeros(dim)
    if diag is not None:
        for i, d in enumerate(diag):
            m[i][i] = entry(d)
    for k in range(dim - 1):
        if sub_surds:
            m[k + 1][k] = entry(1, {k})
        if super_surds:
            m[k][k + 1] = entry(1, {k})
    return m
