import math
from fractions import Fraction as F

import numpy as np
import pytest

from finosc.oscillator import TridiagonalOperator, analytic_U, position_operator
from finosc.spectral import (
    CharPoly,
    char_poly_exact,
    count_below,
    inverse_iteration_vector,
    poly_mul,
    sturm_eigenvalues,
)


def equidistant_poly(j):
    """lambda * prod_q (lambda^2 - 4 q^2), ascending coefficients."""
    out = [F(0), F(1)]
    for q in range(1, j + 1):
        out = poly_mul(out, [F(-4 * q * q), F(0), F(1)])
    return tuple(out)


# ---------------------------------------------------------------- Sturm bisection

def test_sturm_worked_j1():
    ev = sturm_eigenvalues(position_operator(1, 0.5), 1e-12)
    assert np.max(np.abs(ev - [-2.0, 0.0, 2.0])) < 1e-11


def test_sturm_zero_matrix():
    t = TridiagonalOperator(4, (0.0, 0.0, 0.0))
    assert np.max(np.abs(sturm_eigenvalues(t, 1e-12))) < 1e-11


def test_sturm_large_case():
    ev = sturm_eigenvalues(position_operator(40, 0.9), 1e-10)
    assert np.max(np.abs(ev - np.arange(-80, 81, 2))) < 1e-9


def test_sturm_rejects_bad_tol():
    with pytest.raises(ValueError):
        sturm_eigenvalues(position_operator(1, 0.0), 0.0)


def test_sturm_count_consistency():
    t = position_operator(9, -0.4)
    ev = sturm_eigenvalues(t, 1e-12)
    dense_ev = np.linalg.eigvalsh(t.dense())
    assert np.max(np.abs(np.sort(ev) - dense_ev)) < 1e-10
    # probes off the spectrum, where "strictly below" is well-posed in floats
    for probe in (-7.3, -0.5, 0.001, 2.1, 11.8):
        assert count_below(t, probe) == int(np.sum(dense_ev < probe))
    assert count_below(t, 0.0) == 9   # number of negative eigenvalues


# ---------------------------------------------------------------- inverse iteration

def test_inverse_iteration_worked_vectors():
    t = position_operator(1, 0.0)
    v = inverse_iteration_vector(t, 2.0, 1e-12)
    assert np.max(np.abs(v - [0.5, 1 / math.sqrt(2), 0.5])) < 1e-12
    v0 = inverse_iteration_vector(t, 0.0, 1e-12)
    assert np.max(np.abs(v0 - [1 / math.sqrt(2), 0.0, -1 / math.sqrt(2)])) < 1e-12


def test_inverse_iteration_residuals_j12():
    t = position_operator(12, -0.7)
    dense = t.dense()
    for lam in sturm_eigenvalues(t, 1e-12):
        v = inverse_iteration_vector(t, lam, 1e-12)
        assert abs(np.linalg.norm(v) - 1) < 1e-14
        assert np.linalg.norm(dense @ v - lam * v) < 1e-10


def test_inverse_iteration_sign_convention():
    t = position_operator(6, 0.2)
    for lam in sturm_eigenvalues(t, 1e-12):
        v = inverse_iteration_vector(t, lam, 1e-12)
        lead = v[np.abs(v) > 1e-8 * np.max(np.abs(v))][0]
        assert lead > 0


def test_inverse_iteration_rejects_bogus_shift():
    t = position_operator(1, 0.0)
    with pytest.raises(ValueError, match="converge"):
        inverse_iteration_vector(t, 1.0, 1e-12)   # midway between eigenvalues
    with pytest.raises(ValueError):
        inverse_iteration_vector(t, 2.0, -1.0)


def test_oracle_matches_analytic_columns():
    worst = 0.0
    for j, ct in ((3, 0.0), (10, 0.8), (20, -0.7)):
        t = position_operator(j, ct)
        u = analytic_U(j, ct)
        for i, lam in enumerate(range(-2 * j, 2 * j + 1, 2)):
            v = inverse_iteration_vector(t, float(lam), 1e-12)
            worst = max(worst, float(np.max(np.abs(v - u[:, i]))))
    assert worst < 1e-8


# ---------------------------------------------------------------- exact characteristic polynomial

def test_char_poly_worked_examples():
    cp = char_poly_exact(position_operator(1, F(1, 2)))
    assert cp.coefficients == (F(0), F(-4), F(0), F(1))        # l^3 - 4l
    assert cp.degree == 3
    cp = char_poly_exact(position_operator(2, F(0)))
    assert cp.coefficients == (F(0), F(64), F(0), F(-20), F(0), F(1))
    assert cp.coefficients == equidistant_poly(2)


@pytest.mark.parametrize("ct", [F(0), F(1, 3), F(-1, 3), F(9, 10), F(-9, 10)])
def test_char_poly_equidistance_identity(ct):
    for j in range(1, 9):
        cp = char_poly_exact(position_operator(j, ct))
        assert cp.coefficients == equidistant_poly(j)
        # roots are exactly the even integers
        for q in range(-j, j + 1):
            assert cp(2 * q) == 0


def test_char_poly_sign_flip_invariance():
    for j in (2, 5, 8):
        a = char_poly_exact(position_operator(j, F(7, 10))).coefficients
        b = char_poly_exact(position_operator(j, F(-7, 10))).coefficients
        assert a == b


def test_char_poly_parity_structure():
    # zero diagonal, odd dimension: p(-l) = -p(l), so even powers vanish
    cp = char_poly_exact(position_operator(4, F(1, 3)))
    assert cp.coefficients[-1] == 1
    assert all(c == 0 for c in cp.coefficients[0::2])


def test_char_poly_requires_rational_squares():
    with pytest.raises(ValueError, match="rational"):
        char_poly_exact(position_operator(2, 0.3))


def test_charpoly_eval():
    p = CharPoly((F(-4), F(0), F(1)))   # l^2 - 4
    assert p(2) == 0 and p(0) == -4 and p(F(1, 2)) == F(-15, 4)


def test_oracle_module_is_independent_of_analytic_code():
    # the whole point of the oracle is that it shares nothing with the dual Hahn
    # / analytic-eigenvector route; guard the dependency direction at the imports
    import ast
    import inspect
    import finosc.spectral as sp
    tree = ast.parse(inspect.getsource(sp))
    for node in ast.walk(tree):
        mods = []
        if isinstance(node, ast.Import):
            mods = [a.name for a in node.names]
        elif isinstance(node, ast.ImportFrom):
            mods = [node.module or ""]
        for mod in mods:
            assert "orthopoly" not in mod and "oscillator" not in mod and "algebra" not in mod
