import math
from fractions import Fraction as F

import numpy as np
import pytest

from finosc.algebra import AlgebraParams, HalfInt, build_representation
from finosc.dunkl import (
    HomogPolySpace,
    RealizationVariant,
    apply_operator,
    monomial_to_schwinger,
    operator_matrix,
    realization_c,
    schwinger_to_monomial,
    similarity_invariants_match,
    verify_defining_relations,
)

SQ2 = math.sqrt(2)


def test_space_and_variant_validation():
    with pytest.raises(ValueError):
        HomogPolySpace(0)
    with pytest.raises(ValueError):
        RealizationVariant(3, 0.5)
    assert HomogPolySpace(4).dim == 5
    assert RealizationVariant(1, F(1, 2)).exact
    assert not RealizationVariant(1, 0.5).exact


def test_parity_compatibility():
    with pytest.raises(ValueError, match="variant 2"):
        operator_matrix("J0", HomogPolySpace(2), RealizationVariant(2, F(1, 2)))
    with pytest.raises(ValueError, match="variant 1"):
        operator_matrix("J0", HomogPolySpace(3), RealizationVariant(1, F(1, 2)))
    with pytest.raises(ValueError, match="unknown operator"):
        operator_matrix("Jz", HomogPolySpace(2), RealizationVariant(1, F(0)))


def test_apply_jminus_worked():
    # J- on |1,1> = x^2/sqrt(2) gives sqrt(2) |1,0>, independently of mu
    space = HomogPolySpace(2)
    for mu in (F(0), F(-1, 4), F(2, 3)):
        rv = RealizationVariant(1, mu)
        vec = schwinger_to_monomial(space, [0.0, 0.0, 1.0])
        image = apply_operator("Jminus", vec, space, rv)
        assert monomial_to_schwinger(space, image) == pytest.approx([0.0, SQ2, 0.0], abs=1e-15)


def test_apply_jplus_worked():
    # J+ on |1,0> = xy gives (1 + ct) sqrt(2) |1,1> with mu = -ct/2
    space = HomogPolySpace(2)
    for ct in (F(0), F(1, 2), F(-3, 4)):
        rv = RealizationVariant(1, -ct / 2)
        vec = schwinger_to_monomial(space, [0.0, 1.0, 0.0])
        image = apply_operator("Jplus", vec, space, rv)
        assert monomial_to_schwinger(space, image) == pytest.approx(
            [0.0, 0.0, float(1 + ct) * SQ2], abs=1e-14)


def test_p_squares_to_identity():
    for two_j, variant in ((2, 1), (4, 1), (1, 2), (3, 2)):
        space = HomogPolySpace(two_j)
        rv = RealizationVariant(variant, F(1, 3))
        p = operator_matrix("P", space, rv)
        for i in range(space.dim):
            basis = [0] * space.dim
            basis[i] = 1
            once = apply_operator("P", basis, space, rv)
            twice = apply_operator("P", once, space, rv)
            assert twice == basis


def test_ty_annihilates_top_monomial():
    # the 1/y term is harmless exactly because (1 -/+ R_x) kills x^(2j)
    space = HomogPolySpace(4)
    rv = RealizationVariant(1, F(2, 5))
    top = [0] * 5 + []
    top[4] = 1
    image = apply_operator("Ty", top, space, rv)
    assert image == [0, 0, 0, 0]
    space = HomogPolySpace(3)
    rv = RealizationVariant(2, F(2, 5))
    top = [0, 0, 0, 1]
    assert apply_operator("Ty", top, space, rv) == [0, 0, 0]


def test_tx_ty_shapes():
    space = HomogPolySpace(4)
    rv = RealizationVariant(1, F(1, 7))
    tx = operator_matrix("Tx", space, rv)
    assert len(tx) == 4 and len(tx[0]) == 5
    vec = [1, 0, 0, 0, 0]   # y^4
    assert apply_operator("Tx", vec, space, rv) == [0, 0, 0, 0]


def test_apply_operator_length_check():
    with pytest.raises(ValueError):
        apply_operator("P", [1, 2], HomogPolySpace(2), RealizationVariant(1, F(0)))


def test_j0_diagonals():
    space = HomogPolySpace(4)
    rv = RealizationVariant(1, F(-1, 3))
    j0 = operator_matrix("J0", space, rv)
    assert [j0[i][i] for i in range(5)] == [F(2 * i - 4, 2) + F(-1, 3) for i in range(5)]
    space = HomogPolySpace(3)
    rv = RealizationVariant(2, F(1, 2))
    j0 = operator_matrix("J0", space, rv)
    assert [j0[i][i] for i in range(4)] == [F(2 * i - 3, 2) for i in range(4)]


def test_verify_relations_variant1_worked():
    report = verify_defining_relations(HomogPolySpace(2), RealizationVariant(1, F(-1, 4)))
    assert report.passed and report.exact
    assert report.c == F(3, 2)
    assert all(r == 0 for r in report.residuals.values())
    assert set(report.residuals) == {
        "P^2 = 1", "[P, J0] = 0", "{P, J+} = 0", "{P, J-} = 0",
        "[J0, J+] = +J+", "[J0, J-] = -J-", "[J+, J-] = 2J0 + cP"}


def test_verify_relations_variant2_worked():
    report = verify_defining_relations(HomogPolySpace(3), RealizationVariant(2, F(1, 2)))
    assert report.passed and report.c == 5


def test_verify_relations_float_mu():
    report = verify_defining_relations(HomogPolySpace(6), RealizationVariant(1, 0.21))
    assert report.passed and not report.exact
    assert max(report.residuals.values()) < 1e-12 * 7


@pytest.mark.parametrize("two_j", [2, 4, 6, 8, 10, 12])
def test_variant1_exact_relations_and_invariants(two_j):
    for mu in (F(0), F(-1, 6), F(2, 5)):
        if not abs(2 * mu) < 1:
            continue
        space = HomogPolySpace(two_j)
        rv = RealizationVariant(1, mu)
        report = verify_defining_relations(space, rv)
        assert report.passed
        assert report.c == -2 * mu * (two_j + 1) == realization_c(space, rv)
        rep = build_representation(HalfInt(two_j), AlgebraParams(report.c))
        assert similarity_invariants_match(space, rv, rep)


@pytest.mark.parametrize("two_j", [1, 3, 5, 7, 9, 11])
def test_variant2_exact_relations_and_invariants(two_j):
    for mu in (F(1, 2), F(1, 4), F(2), F(-1, 5)):
        space = HomogPolySpace(two_j)
        rv = RealizationVariant(2, mu)
        report = verify_defining_relations(space, rv)
        assert report.passed
        assert report.c == (2 * mu) ** 2 + 2 * mu * (two_j + 1)
        params = AlgebraParams(report.c)
        from finosc.algebra import admissible
        if admissible(HalfInt(two_j), params):
            rep = build_representation(HalfInt(two_j), params)
            assert similarity_invariants_match(space, rv, rep)


def test_jplus_jminus_diagonal_invariant_worked():
    # diagonal of J+J- on the top vector is 2(1+ct) in both pictures
    ct = F(2, 7)
    space = HomogPolySpace(2)
    rv = RealizationVariant(1, -ct / 2)
    jp = operator_matrix("Jplus", space, rv)
    jm = operator_matrix("Jminus", space, rv)
    top = sum(jp[2][k] * jm[k][2] for k in range(3))
    assert top == 2 * (1 + ct)
    rep = build_representation(HalfInt(2), AlgebraParams(ct * 3))
    assert rep.offdiag_sq[1] == 2 * (1 + ct)


def test_full_matrix_agreement_at_mu_zero():
    # mu = 0 is the classical realization; whole matrices agree in the
    # normalized basis, not just invariants
    space = HomogPolySpace(4)
    rv = RealizationVariant(1, F(0))
    rep = build_representation(HalfInt(4), AlgebraParams(F(0)))
    jp = operator_matrix("Jplus", space, rv)
    scale = [math.sqrt(math.factorial(i) * math.factorial(4 - i)) for i in range(5)]
    normalized = np.array([[scale[r] * float(jp[r][c]) / scale[c] for c in range(5)]
                           for r in range(5)])
    assert np.max(np.abs(normalized - rep.jplus_matrix())) < 1e-13


def test_invariants_dimension_mismatch():
    rep = build_representation(HalfInt(4), AlgebraParams(F(0)))
    with pytest.raises(ValueError, match="dimension"):
        similarity_invariants_match(HomogPolySpace(2), RealizationVariant(1, F(0)), rep)


def test_invariants_detect_wrong_parameter():
    # comparing against a representation with a different c must fail
    space = HomogPolySpace(2)
    rv = RealizationVariant(1, F(-1, 4))   # c = 3/2
    rep = build_representation(HalfInt(2), AlgebraParams(F(1, 2)))
    assert not similarity_invariants_match(space, rv, rep)
