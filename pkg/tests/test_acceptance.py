"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion report.
Tolerances are fixed here, not configurable.
"""
import math
import time
import xml.etree.ElementTree as ET
from fractions import Fraction as F

import numpy as np

from finosc import exact
from finosc.algebra import AlgebraParams, HalfInt, admissible, bannai_ito_generators, \
    build_representation, casimir_value
from finosc.orthopoly import (
    DualHahnParams,
    NormalizedDualHahn,
    dual_hahn_norm,
    dual_hahn_recurrence_table,
    dual_hahn_weight,
    krawtchouk_symmetric,
)
from finosc.oscillator import (
    analytic_U,
    analytic_V,
    boundary_limit_check,
    momentum_operator,
    position_operator,
    scaled_limit_error,
    wavefunction_table,
)
from finosc.spectral import char_poly_exact, inverse_iteration_vector, poly_mul, \
    sturm_eigenvalues
from finosc.dunkl import HomogPolySpace, RealizationVariant, similarity_invariants_match, \
    verify_defining_relations
from finosc import cli

CT_GRID = (0.0, 0.3, -0.3, 0.8, -0.8, 0.999, -0.999)
CT_GRID_FRAC = (F(0), F(3, 10), F(-3, 10), F(4, 5), F(-4, 5), F(999, 1000), F(-999, 1000))


def report(num: int, label: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    extra = f"  [{detail}]" if detail else ""
    print(f"[{status}] criterion {num}: {label}{extra}")
    assert ok, f"criterion {num} failed: {label} {extra}"


def test_criterion_01_equidistant_spectrum_oracle():
    start = time.monotonic()
    worst = 0.0
    for j in range(1, 41):
        target = np.arange(-j, j + 1)
        for ct in CT_GRID:
            ev = sturm_eigenvalues(position_operator(j, ct), 1e-10) / 2
            worst = max(worst, float(np.max(np.abs(ev - target))))
    elapsed = time.monotonic() - start
    report(1, "oracle spectrum of qhat is -j..j for j <= 40, 7 deformation values",
           worst < 1e-9 and elapsed < 10.0,
           f"max deviation {worst:.2e}, runtime {elapsed:.1f}s")


def test_criterion_02_exact_equidistance():
    ok = True
    for j in range(1, 9):
        want = [F(0), F(1)]
        for q in range(1, j + 1):
            want = poly_mul(want, [F(-4 * q * q), F(0), F(1)])
        for ct in (F(0), F(1, 3), F(-1, 3), F(9, 10), F(-9, 10)):
            cp = char_poly_exact(position_operator(j, ct))
            if cp.coefficients != tuple(want):
                ok = False
    report(2, "char poly of 2qhat is exactly l*prod(l^2-4q^2), j <= 8, rational ct", ok,
           "zero tolerance")


def test_criterion_03_analytic_diagonalization():
    start = time.monotonic()
    worst_eig_q = worst_eig_p = worst_orth_u = worst_orth_v = 0.0
    ok = True
    for j in range(1, 41):
        dim = 2 * j + 1
        dq = np.diag(np.arange(-2 * j, 2 * j + 1, 2, dtype=float))
        d = np.diag(np.arange(-j, j + 1, dtype=float))
        ident = np.eye(dim)
        for ct in CT_GRID_FRAC:
            u = analytic_U(j, ct)
            v = analytic_V(j, ct)
            mq = position_operator(j, ct).dense()
            mp = momentum_operator(j, ct)
            r_q = float(np.max(np.abs(mq @ u - u @ dq)))
            r_p = float(np.max(np.abs(mp / (2 * 1j) @ v - v @ d)))
            r_u = float(np.max(np.abs(u @ u.T - ident)))
            r_v = float(np.max(np.abs(v @ np.conj(v.T) - ident)))
            worst_eig_q = max(worst_eig_q, r_q)
            worst_eig_p = max(worst_eig_p, r_p)
            worst_orth_u = max(worst_orth_u, r_u)
            worst_orth_v = max(worst_orth_v, r_v)
            if r_q > 1e-10 * dim or r_p > 1e-10 * dim or r_u > 1e-11 or r_v > 1e-11:
                ok = False
    elapsed = time.monotonic() - start
    report(3, "analytic U/V diagonalize M^q and M^p/2i, orthogonal/unitary (j <= 40)", ok,
           f"eig residuals {worst_eig_q:.2e}/{worst_eig_p:.2e}, "
           f"orthogonality {worst_orth_u:.2e}/{worst_orth_v:.2e}, runtime {elapsed:.1f}s")


def test_criterion_04_oracle_eigenvectors_match_analytic():
    worst = 0.0
    for j in range(1, 21):
        for ct in (0.0, -0.7, 0.8):
            t = position_operator(j, ct)
            u = analytic_U(j, ct)
            for i, lam in enumerate(range(-2 * j, 2 * j + 1, 2)):
                v = inverse_iteration_vector(t, float(lam), 1e-12)
                worst = max(worst, float(np.max(np.abs(v - u[:, i]))))
    report(4, "inverse-iteration eigenvectors match analytic columns (j <= 20)",
           worst < 1e-8, f"max entrywise deviation {worst:.2e}")


def _exact_relations_hold(rep) -> bool:
    ring, j0, jp, jm, p = rep.exact_generators()
    dim = rep.dim
    c = F(rep.c)
    half = F(1, 2)
    k1 = exact.mat_scale(exact.mat_add(jp, jm), half)
    k2 = exact.mat_scale(exact.mat_mul(ring, exact.mat_sub(jp, jm), p), -half)
    k3 = exact.mat_mul(ring, j0, p)
    omega = exact.mat_add(exact.mat_scale(exact.mat_mul(ring, j0, j0), 2),
                          exact.mat_add(exact.mat_mul(ring, jp, jm), exact.mat_mul(ring, jm, jp)))
    scalar = casimir_value(HalfInt(rep.two_j), AlgebraParams(rep.c, rep.epsilon))
    checks = (
        exact.mat_equal(exact.mat_mul(ring, p, p), exact.identity(dim)),
        exact.mat_is_zero(exact.commutator(ring, p, j0)),
        exact.mat_is_zero(exact.anticommutator(ring, p, jp)),
        exact.mat_is_zero(exact.anticommutator(ring, p, jm)),
        exact.mat_equal(exact.commutator(ring, j0, jp), jp),
        exact.mat_equal(exact.commutator(ring, j0, jm), exact.mat_scale(jm, -1)),
        exact.mat_equal(exact.commutator(ring, jp, jm),
                        exact.mat_add(exact.mat_scale(j0, 2), exact.mat_scale(p, c))),
        exact.mat_equal(omega, exact.identity(dim, scalar)),
        exact.mat_equal(exact.anticommutator(ring, k1, k2),
                        exact.mat_add(k3, exact.identity(dim, c * half))),
        exact.mat_equal(exact.anticommutator(ring, k2, k3), k1),
        exact.mat_equal(exact.anticommutator(ring, k3, k1), k2),
    )
    return all(checks)


def _float_relations_residual(rep) -> float:
    j0, p = rep.j0_matrix(), rep.p_matrix()
    jp, jm = rep.jplus_matrix(), rep.jminus_matrix()
    ident = np.eye(rep.dim)
    c = float(rep.c)
    k1, k2, k3 = bannai_ito_generators(rep)
    omega = 2 * j0 @ j0 + jp @ jm + jm @ jp
    scalar = float(casimir_value(HalfInt(rep.two_j), AlgebraParams(rep.c, rep.epsilon)))
    return max(
        np.max(np.abs(j0 @ jp - jp @ j0 - jp)),
        np.max(np.abs(j0 @ jm - jm @ j0 + jm)),
        np.max(np.abs(jp @ jm - jm @ jp - 2 * j0 - c * p)),
        np.max(np.abs(p @ p - ident)),
        np.max(np.abs(p @ jp + jp @ p)),
        np.max(np.abs(p @ jm + jm @ p)),
        np.max(np.abs(p @ j0 - j0 @ p)),
        np.max(np.abs(omega - scalar * ident)),
        np.max(np.abs(k1 @ k2 + k2 @ k1 - k3 - c / 2 * ident)),
        np.max(np.abs(k2 @ k3 + k3 @ k2 - k1)),
        np.max(np.abs(k3 @ k1 + k1 @ k3 - k2)),
    )


def test_criterion_05_algebra_relations_and_casimir():
    ok = True
    for two_j in range(1, 13):   # j <= 6, exact rational mode
        if two_j % 2 == 0:
            cs = [F(ct) * (two_j + 1) for ct in (F(0), F(1, 3), F(-9, 10))]
        else:
            cs = [F(0), F(5, 2), F(-4, 5) * two_j]
        for c in cs:
            if not _exact_relations_hold(build_representation(HalfInt(two_j), AlgebraParams(c))):
                ok = False
    worst = 0.0
    for two_j in range(1, 81):   # float mode up to j = 40
        cs = [0.31 * (two_j + 1), -0.93 * (two_j + 1)] if two_j % 2 == 0 else [2.4, -0.85 * two_j]
        for c in cs:
            rep = build_representation(HalfInt(two_j), AlgebraParams(c))
            r = _float_relations_residual(rep)
            worst = max(worst, r / (1e-12 * rep.dim))
            if r > 1e-12 * rep.dim:
                ok = False
    report(5, "defining relations, Casimir scalarity, K-anticommutators (exact j<=6, float j<=40)",
           ok, f"worst float residual/tolerance {worst:.3f}")


def test_criterion_06_dual_hahn_orthogonality():
    # exact rational worked case first
    p2 = DualHahnParams(F(-1, 2), F(-1, 2), 2)
    ok = [dual_hahn_weight(x, p2) for x in range(3)] == [1, F(4, 3), F(1, 3)]
    ok = ok and dual_hahn_norm(0, p2) == F(8, 3)
    worst = 0.0
    for ct in CT_GRID_FRAC:
        for params in (DualHahnParams.even_family(ct, 40), DualHahnParams.odd_family(ct, 39)):
            fam = NormalizedDualHahn(params)
            nn = params.N
            tab = np.array([[fam.tilde(n, x) for x in range(nn + 1)] for n in range(nn + 1)])
            worst = max(worst, float(np.max(np.abs(tab @ tab.T - np.eye(nn + 1)))))
    ok = ok and worst < 1e-10
    report(6, "dual Hahn orthogonality incl. degenerate parametrization (N <= 40)", ok,
           f"worst residual {worst:.2e}; N=2 worked case exact")


def test_criterion_07_krawtchouk_reduction():
    ok = True
    for j in range(1, 21):
        even = DualHahnParams.even_family(F(0), j)
        odd = DualHahnParams.odd_family(F(0), j - 1)
        tab_e = dual_hahn_recurrence_table(even)
        tab_o = dual_hahn_recurrence_table(odd)
        for n in range(j + 1):
            ratio = F(math.comb(2 * j, 2 * n), math.comb(j, n))
            for q in range(-j, j + 1):
                if tab_e[n][abs(q)] != (-1) ** n * ratio * krawtchouk_symmetric(2 * n, j + q, j):
                    ok = False
        for n in range(j):
            ratio = F(math.comb(2 * j, 2 * n + 1), math.comb(j - 1, n))
            for q in range(-j, j + 1):
                lhs = 2 * q * (tab_o[n][abs(q) - 1] if q != 0 else 0)
                if lhs != -(-1) ** n * ratio * krawtchouk_symmetric(2 * n + 1, j + q, j):
                    ok = False
    sq2 = math.sqrt(2)
    want = np.array([[0.5, 1 / sq2, 0.5], [-1 / sq2, 0.0, 1 / sq2], [0.5, -1 / sq2, 0.5]])
    dev = float(np.max(np.abs(analytic_U(1, 0.0) - want)))
    ok = ok and dev < 1e-14
    report(7, "Krawtchouk reduction at ct=0 (exact, j <= 20); j=1 matrix matches worked example",
           ok, f"j=1 deviation {dev:.2e}")


def test_criterion_08_boundary_limits_and_concentration():
    ok = True
    worst = 0.0
    for side in (-1, +1):
        for j in range(2, 9):
            devs = [boundary_limit_check(side, j, eps).max_deviation
                    for eps in (1e-4, 1e-6, 1e-8)]
            worst = max(worst, devs[-1])
            if devs[-1] >= 1e-3 or not devs[0] > devs[1] > devs[2]:
                ok = False
    conc = abs(wavefunction_table("position", [64], 32, -0.999).values[0, 32]) ** 2
    ok = ok and conc > 0.9
    report(8, "boundary-limit relations (j <= 8) and q=0 concentration at ct = -0.999", ok,
           f"max deviation at eps=1e-8: {worst:.2e}; |phi_64(0)|^2 = {conc:.4f}")


def test_criterion_09_large_j_limits():
    ok = True
    final = 0.0
    for ct in (0.0, 0.8, -0.8):
        for n in (0, 1, 2):
            errs = [scaled_limit_error(n, j, ct) for j in (8, 32, 128)]
            final = max(final, errs[-1])
            if not (errs[0] > errs[1] > errs[2] and errs[2] < 0.05):
                ok = False
    report(9, "scaled wavefunctions approach parabose limits (j in 8,32,128; n <= 2)", ok,
           f"worst final error {final:.4f} < 0.05, strictly decreasing")


def test_criterion_10_dunkl_realizations():
    ok = True
    for two_j in (2, 4, 6, 8, 10, 12):   # variant 1, integer j <= 6, mu = -ct/2
        for ct in (F(0), F(1, 3), F(-9, 10)):
            space = HomogPolySpace(two_j)
            rv = RealizationVariant(1, -ct / 2)
            rep_report = verify_defining_relations(space, rv)
            if not (rep_report.passed and rep_report.exact):
                ok = False
            if rep_report.c != ct * (two_j + 1):
                ok = False
            rep = build_representation(HalfInt(two_j), AlgebraParams(rep_report.c))
            if not similarity_invariants_match(space, rv, rep):
                ok = False
    for two_j in (1, 3, 5, 7, 9, 11):    # variant 2, half-integer j <= 11/2
        for mu in (F(1, 2), F(1, 4), F(2)):
            space = HomogPolySpace(two_j)
            rv = RealizationVariant(2, mu)
            rep_report = verify_defining_relations(space, rv)
            want_c = (2 * mu) ** 2 + 2 * mu * (two_j + 1)
            if not (rep_report.passed and rep_report.exact and rep_report.c == want_c):
                ok = False
            if admissible(HalfInt(two_j), AlgebraParams(want_c)):
                rep = build_representation(HalfInt(two_j), AlgebraParams(want_c))
                if not similarity_invariants_match(space, rv, rep):
                    ok = False
    report(10, "reflection-operator realizations: relations exact, invariants match", ok)


def test_criterion_11_figure_regeneration(tmp_path):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot  # noqa: F401  (exclude one-time import cost from the budget)

    t0 = time.monotonic()
    rc1 = cli.main(["wavefunctions", "--preset", "fig1", "--out", str(tmp_path / "f1")])
    t1 = time.monotonic() - t0
    t0 = time.monotonic()
    rc2 = cli.main(["wavefunctions", "--preset", "fig2", "--out", str(tmp_path / "f2")])
    t2 = time.monotonic() - t0
    ok = rc1 == 0 and rc2 == 0 and t1 < 5.0 and t2 < 5.0

    svgs = sorted((tmp_path / "f1").glob("*.svg")) + sorted((tmp_path / "f2").glob("*.svg"))
    ok = ok and len(svgs) == 28 + 6
    for svg in svgs:
        root = ET.parse(svg).getroot()   # raises if malformed
        stems = [e for e in root.iter() if e.get("id", "").startswith("stem-q")]
        if len(stems) != 65:
            ok = False

    import csv
    for path in list((tmp_path / "f1").glob("*.csv")) + list((tmp_path / "f2").glob("*.csv")):
        with open(path) as fh:
            rows = list(csv.DictReader(fh))
        by_level = {}
        for r in rows:
            by_level.setdefault(r["n"], []).append((int(r["q"]), float(r["re"])))
        for n, pairs in by_level.items():
            pairs.sort()
            vals = dict(pairs)
            norm = sum(v * v for _, v in pairs)
            if abs(norm - 1.0) > 1e-10:
                ok = False
            parity = (-1) ** int(n)
            for q, v in pairs:
                if q > 0 and abs(vals[-q] - parity * v) > 1e-12:
                    ok = False
    report(11, "figure presets render valid SVG under 5 s; CSVs pass norm and parity", ok,
           f"fig1 {t1:.1f}s, fig2 {t2:.1f}s, {len(svgs)} panels")
