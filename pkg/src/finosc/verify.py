"""Verification suites: algebra relations, spectral oracle agreement, orthogonality,
boundary/large-j limits, and the reflection-operator realization.

Each suite returns a list of CheckResult; the CLI prints them and turns any
failure into a nonzero exit code.  Exact (rational) checks report a residual of
exactly 0 or fail.
"""
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exact
from .algebra import AlgebraParams, HalfInt, admissible, bannai_ito_generators, \
    build_representation, casimir_value, coeff_A, verify_remark1
from .orthopoly import (
    DualHahnParams,
    NormalizedDualHahn,
    dual_hahn_R,
    dual_hahn_norm,
    dual_hahn_recurrence_table,
    dual_hahn_weight,
    krawtchouk_symmetric,
)
from .oscillator import (
    analytic_U,
    analytic_V,
    boundary_limit_check,
    hamiltonian_spectrum,
    momentum_operator,
    position_operator,
    scaled_limit_error,
    wavefunction_table,
)
from .spectral import char_poly_exact, count_below, inverse_iteration_vector, poly_mul, \
    sturm_eigenvalues
from .dunkl import HomogPolySpace, RealizationVariant, similarity_invariants_match, \
    verify_defining_relations

SUITE_NAMES = ("algebra", "spectral", "orthogonality", "limits", "dunkl")

CTILDE_GRID = (0.0, 0.3, -0.3, 0.8, -0.8, 0.999, -0.999)
CTILDE_GRID_EXACT = (Fraction(0), Fraction(1, 3), Fraction(-1, 3),
                     Fraction(9, 10), Fraction(-9, 10))


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    residual: float = None
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        res = "" if self.residual is None else f"  max residual {format(self.residual, '.6g')}"
        det = f"  ({self.detail})" if self.detail else ""
        return f"[{status}] {self.suite}/{self.name}{res}{det}"


def _rep_relation_residuals(rep) -> dict:
    """Float residuals of the defining relations and companion identities."""
    j0, p = rep.j0_matrix(), rep.p_matrix()
    jp, jm = rep.jplus_matrix(), rep.jminus_matrix()
    dim = rep.dim
    ident = np.eye(dim)
    c = float(rep.c) * 1.0
    res = {
        "P^2 = 1": np.max(np.abs(p @ p - ident)),
        "[P, J0] = 0": np.max(np.abs(p @ j0 - j0 @ p)),
        "{P, J+} = 0": np.max(np.abs(p @ jp + jp @ p)),
        "{P, J-} = 0": np.max(np.abs(p @ jm + jm @ p)),
        "[J0, J+] = +J+": np.max(np.abs(j0 @ jp - jp @ j0 - jp)),
        "[J0, J-] = -J-": np.max(np.abs(j0 @ jm - jm @ j0 + jm)),
        "[J+, J-] = 2J0 + cP": np.max(np.abs(jp @ jm - jm @ jp - 2 * j0 - c * p)),
        "parity grading P J+ P = -J+": np.max(np.abs(p @ jp @ p + jp)),
    }
    omega = 2 * j0 @ j0 + jp @ jm + jm @ jp
    scalar = float(casimir_value(HalfInt(rep.two_j), AlgebraParams(rep.c, rep.epsilon)))
    res["Casimir scalar"] = np.max(np.abs(omega - scalar * ident))
    k1, k2, k3 = bannai_ito_generators(rep)
    res["{K1, K2} = K3 + c/2"] = np.max(np.abs(k1 @ k2 + k2 @ k1 - k3 - c / 2 * ident))
    res["{K2, K3} = K1"] = np.max(np.abs(k2 @ k3 + k3 @ k2 - k1))
    res["{K3, K1} = K2"] = np.max(np.abs(k3 @ k1 + k1 @ k3 - k2))
    res["K_i symmetric"] = max(np.max(np.abs(k - k.T)) for k in (k1, k2, k3))
    return res


def _exact_rep_checks(rep) -> dict:
    """Zero/nonzero (as 0.0/1.0) outcomes of the exact rational identity checks."""
    ring, j0, jp, jm, p = rep.exact_generators()
    dim = rep.dim
    c = Fraction(rep.c)
    ident = exact.identity(dim)
    out = {}
    out["P^2 = 1"] = exact.mat_equal(exact.mat_mul(ring, p, p), ident)
    out["[P, J0] = 0"] = exact.mat_is_zero(exact.commutator(ring, p, j0))
    out["{P, J+} = 0"] = exact.mat_is_zero(exact.anticommutator(ring, p, jp))
    out["{P, J-} = 0"] = exact.mat_is_zero(exact.anticommutator(ring, p, jm))
    out["[J0, J+] = +J+"] = exact.mat_equal(exact.commutator(ring, j0, jp), jp)
    out["[J0, J-] = -J-"] = exact.mat_equal(exact.commutator(ring, j0, jm), exact.mat_scale(jm, -1))
    rhs = exact.mat_add(exact.mat_scale(j0, 2), exact.mat_scale(p, c))
    out["[J+, J-] = 2J0 + cP"] = exact.mat_equal(exact.commutator(ring, jp, jm), rhs)
    omega = exact.mat_add(exact.mat_scale(exact.mat_mul(ring, j0, j0), 2),
                          exact.mat_add(exact.mat_mul(ring, jp, jm), exact.mat_mul(ring, jm, jp)))
    scalar = casimir_value(HalfInt(rep.two_j), AlgebraParams(rep.c, rep.epsilon))
    out["Casimir scalar"] = exact.mat_equal(omega, exact.identity(dim, scalar))
    half = Fraction(1, 2)
    k1 = exact.mat_scale(exact.mat_add(jp, jm), half)
    k2 = exact.mat_scale(exact.mat_mul(ring, exact.mat_sub(jp, jm), p), -half)
    k3 = exact.mat_mul(ring, j0, p)
    out["{K1, K2} = K3 + c/2"] = exact.mat_equal(
        exact.anticommutator(ring, k1, k2), exact.mat_add(k3, exact.identity(dim, c * half)))
    out["{K2, K3} = K1"] = exact.mat_equal(exact.anticommutator(ring, k2, k3), k1)
    out["{K3, K1} = K2"] = exact.mat_equal(exact.anticommutator(ring, k3, k1), k2)
    out["K_i symmetric"] = all(exact.is_symmetric(k) for k in (k1, k2, k3))
    return out


def _algebra_param_grid(two_j: int):
    """Admissible deformation parameters to exercise for one dimension."""
    if two_j % 2 == 0:
        return [ct * (two_j + 1) for ct in CTILDE_GRID]
    return [0.0, 1.7, 3.3, -0.9 * two_j]


def suite_algebra(two_j_max: int = 16, use_exact: bool = False, corrupt: bool = False):
    results = []
    worst = 0.0
    worst_at = ""
    ok = True
    for two_j in range(1, min(two_j_max, 80) + 1):
        j = HalfInt(two_j)
        for c in _algebra_param_grid(two_j):
            rep = build_representation(j, AlgebraParams(c))
            if corrupt:
                bad = list(rep.jplus_offdiag)
                bad[0] += 1e-3
                object.__setattr__(rep, "jplus_offdiag", tuple(bad))
                object.__setattr__(rep, "jminus_offdiag", tuple(bad))
                corrupt = False   # poison a single representation
            res = _rep_relation_residuals(rep)
            tol = 1e-12 * rep.dim
            for name, r in res.items():
                if r > worst:
                    worst, worst_at = r, f"{name} at two_j={two_j}, c={c}"
                if r > tol:
                    ok = False
    results.append(CheckResult("algebra", "defining relations + Casimir + K-identities (float)",
                               ok, worst, worst_at))

    if use_exact:
        ok = True
        for two_j in range(1, min(two_j_max, 12) + 1):
            j = HalfInt(two_j)
            cs = [Fraction(ct) * (two_j + 1) for ct in CTILDE_GRID_EXACT] if two_j % 2 == 0 \
                else [Fraction(0), Fraction(3, 2), Fraction(-9, 10) * two_j]
            for c in cs:
                rep = build_representation(j, AlgebraParams(c))
                checks = _exact_rep_checks(rep)
                if not all(checks.values()):
                    ok = False
        results.append(CheckResult("algebra", "defining relations + Casimir + K-identities (exact rational)",
                                   ok, 0.0 if ok else 1.0, "j <= 6, rational c"))

    # h_k positivity exactly characterizes admissibility
    ok = True
    for two_j in (1, 2, 3, 4, 5, 6):
        n = two_j
        probes = [Fraction(p, 4) for p in range(-4 * (n + 2), 4 * (n + 2) + 1)]
        for c in probes:
            for eps in (+1, -1):
                adm = admissible(HalfInt(two_j), AlgebraParams(c, eps))
                pos = all(coeff_A(k, n, c, eps) > 0 for k in range(n))
                if adm != pos:
                    ok = False
    results.append(CheckResult("algebra", "h_k > 0 iff admissible (exact scan)", ok,
                               0.0 if ok else 1.0))

    # J0 spectrum simple
    ok = True
    for two_j in range(1, min(two_j_max, 80) + 1):
        rep = build_representation(HalfInt(two_j), AlgebraParams(0.9))
        ok = ok and len(set(rep.j0_diag)) == rep.dim
    results.append(CheckResult("algebra", "J0 spectrum simple", ok))

    # half-integer representations factor through the shifted-parameter form
    ok = all(verify_remark1(HalfInt(two_j), alpha)
             for two_j in (1, 3, 5) for alpha in (Fraction(0), Fraction(1, 4), 1))
    results.append(CheckResult("algebra", "half-integer J+/J- factorization", ok))
    return results


def suite_spectral(two_j_max: int = 32, use_exact: bool = False):
    results = []
    j_max = max(1, min(two_j_max, 80) // 2)

    worst = 0.0
    for j in range(1, j_max + 1):
        for ct in CTILDE_GRID:
            ev = sturm_eigenvalues(position_operator(j, ct), 1e-10)
            worst = max(worst, float(np.max(np.abs(ev / 2 - np.arange(-j, j + 1)))))
    results.append(CheckResult("spectral", f"Sturm eigenvalues = -j..j (j <= {j_max})",
                               worst < 1e-9, worst))

    ok = True
    for j in (1, 2, 5, min(12, j_max)):
        t = position_operator(j, -0.7)
        if count_below(t, 0.0) != j:
            ok = False
    results.append(CheckResult("spectral", "Sturm count below 0 equals j", ok))

    worst = 0.0
    for j in range(1, min(j_max, 20) + 1):
        for ct in (0.0, -0.7, 0.8):
            t = position_operator(j, ct)
            u = analytic_U(j, ct)
            for i, lam in enumerate(range(-2 * j, 2 * j + 1, 2)):
                v = inverse_iteration_vector(t, float(lam), 1e-12)
                worst = max(worst, float(np.max(np.abs(v - u[:, i]))))
    results.append(CheckResult("spectral", "inverse iteration matches analytic eigenvectors",
                               worst < 1e-8, worst))

    ok = True
    worst = 0.0
    for j in range(1, j_max + 1):
        dim = 2 * j + 1
        dq = np.diag(np.arange(-2 * j, 2 * j + 1, 2, dtype=float))
        d = np.diag(np.arange(-j, j + 1, dtype=float))
        ident = np.eye(dim)
        for ct in CTILDE_GRID:
            u = analytic_U(j, ct)
            v = analytic_V(j, ct)
            mq = position_operator(j, ct).dense()
            mp = momentum_operator(j, ct)
            pairs = (
                (np.max(np.abs(mq @ u - u @ dq)), 1e-10 * dim),
                (np.max(np.abs(mp / (2 * 1j) @ v - v @ d)), 1e-10 * dim),
                (np.max(np.abs(u @ u.T - ident)), 1e-11),
                (np.max(np.abs(v @ np.conj(v.T) - ident)), 1e-11),
                (np.max(np.abs(np.abs(v) - np.abs(u))), 1e-13),
            )
            for r, tol in pairs:
                worst = max(worst, float(r / tol))
                if r > tol:
                    ok = False
    results.append(CheckResult("spectral", f"analytic diagonalization M^q U = U D^q, M^p/2i V = V D (j <= {j_max})",
                               ok, worst, "worst residual / tolerance"))

    if use_exact:
        ok = True
        for j in range(1, min(8, j_max) + 1):
            for ct in CTILDE_GRID_EXACT:
                cp = char_poly_exact(position_operator(j, ct))
                want = [Fraction(0), Fraction(1)]
                for q in range(1, j + 1):
                    want = poly_mul(want, [Fraction(-4 * q * q), Fraction(0), Fraction(1)])
                if tuple(want) != cp.coefficients:
                    ok = False
                if char_poly_exact(position_operator(j, -ct)).coefficients != cp.coefficients:
                    ok = False
        results.append(CheckResult("spectral", "char poly = l * prod(l^2 - 4q^2) exactly (j <= 8)",
                                   ok, 0.0 if ok else 1.0, "and invariant under ct -> -ct"))
    return results


def suite_orthogonality(two_j_max: int = 32, use_exact: bool = False):
    results = []
    n_max = max(2, min(two_j_max, 40))

    # accurate float residual of sum_x Rt_m Rt_n = delta_mn for both model families
    worst = 0.0
    for ct in CTILDE_GRID:
        for params in (DualHahnParams.even_family(ct, n_max),
                       DualHahnParams.odd_family(ct, max(1, n_max - 1))):
            fam = NormalizedDualHahn(params)
            nn = params.N
            tab = np.array([[fam.tilde(n, x) for x in range(nn + 1)] for n in range(nn + 1)])
            worst = max(worst, float(np.max(np.abs(tab @ tab.T - np.eye(nn + 1)))))
    results.append(CheckResult("orthogonality", f"normalized dual Hahn orthonormality (N = {n_max})",
                               worst < 1e-10, worst))

    if use_exact:
        ok = True
        for ct in CTILDE_GRID_EXACT:
            for params in (DualHahnParams.even_family(ct, min(16, n_max)),
                           DualHahnParams.odd_family(ct, min(15, n_max))):
                nn = params.N
                w = [dual_hahn_weight(x, params) for x in range(nn + 1)]
                h = [dual_hahn_norm(n, params) for n in range(nn + 1)]
                tab = dual_hahn_recurrence_table(params)
                for m in range(nn + 1):
                    for n in range(m, nn + 1):
                        s = sum(w[x] * tab[m][x] * tab[n][x] for x in range(nn + 1))
                        if s != (h[n] if m == n else 0):
                            ok = False
        results.append(CheckResult("orthogonality", "discrete orthogonality exact in rational mode",
                                   ok, 0.0 if ok else 1.0, "N <= 16"))

        ok = True
        for ct in CTILDE_GRID_EXACT:
            for params in (DualHahnParams.even_family(ct, 10), DualHahnParams.odd_family(ct, 9)):
                tab = dual_hahn_recurrence_table(params)
                for n in range(params.N + 1):
                    for x in range(params.N + 1):
                        if dual_hahn_R(n, x, params) != tab[n][x]:
                            ok = False
        results.append(CheckResult("orthogonality", "hypergeometric sum == recurrence (exact, N <= 10)",
                                   ok, 0.0 if ok else 1.0))

    # degenerate weight equals the delta -> delta + t limit of the generic formula
    # (|ct| kept moderate so the first-order term t * dlog(w)/ddelta stays inside the band)
    worst = 0.0
    t = 1e-6
    for ct in (0.0, 0.3, -0.3, 0.8):
        for nn in (2, 5, 12):
            params = DualHahnParams.even_family(ct, nn)
            shifted = DualHahnParams(params.gamma, float(params.delta) + t, nn)
            for x in range(nn + 1):
                w0 = float(dual_hahn_weight(x, params))
                w1 = float(dual_hahn_weight(x, shifted))
                worst = max(worst, abs(w0 - w1) / abs(w0))
    results.append(CheckResult("orthogonality", "degenerate weight = removable limit of generic weight",
                               worst < 1e-5, worst, f"delta shift t = {t}"))

    # Krawtchouk reduction of both families at ct = 0, exact rational comparison
    j_max = max(1, min(two_j_max // 2, 20))
    ok = True
    for j in range(1, j_max + 1):
        even = DualHahnParams.even_family(Fraction(0), j)
        odd = DualHahnParams.odd_family(Fraction(0), j - 1) if j >= 1 else None
        tab_e = dual_hahn_recurrence_table(even)
        tab_o = dual_hahn_recurrence_table(odd) if j >= 1 else None
        for n in range(j + 1):
            ratio = Fraction(math.comb(2 * j, 2 * n), math.comb(j, n))
            for q in range(-j, j + 1):
                lhs = tab_e[n][abs(q)]
                rhs = (-1) ** n * ratio * krawtchouk_symmetric(2 * n, j + q, j)
                if lhs != rhs:
                    ok = False
        for n in range(j):
            ratio = Fraction(math.comb(2 * j, 2 * n + 1), math.comb(j - 1, n))
            for q in range(-j, j + 1):
                lhs = 2 * q * (tab_o[n][abs(q) - 1] if q != 0 else 0)
                rhs = -(-1) ** n * ratio * krawtchouk_symmetric(2 * n + 1, j + q, j)
                if lhs != rhs:
                    ok = False
    results.append(CheckResult("orthogonality", f"Krawtchouk reduction at ct = 0 (exact, j <= {j_max})", ok,
                               0.0 if ok else 1.0))
    return results


def suite_limits(two_j_max: int = 32, use_exact: bool = False):
    results = []
    j_small = max(2, min(two_j_max // 2, 8))

    worst = 0.0
    ok = True
    for side in (-1, +1):
        for j in range(2, j_small + 1):
            devs = [boundary_limit_check(side, j, eps).max_deviation
                    for eps in (1e-4, 1e-6, 1e-8)]
            worst = max(worst, devs[-1])
            if devs[-1] >= 1e-3 or not devs[0] > devs[1] > devs[2]:
                ok = False
    results.append(CheckResult("limits", f"parameter-boundary relations (j <= {j_small})", ok, worst,
                               "deviation at eps = 1e-8, monotone in eps"))

    ok = True
    worst = 0.0
    for ct in (0.0, 0.8, -0.8):
        for n in (0, 1, 2):
            errs = [scaled_limit_error(n, j, ct) for j in (8, 32, 128)]
            worst = max(worst, errs[-1])
            if not (errs[0] > errs[1] > errs[2] and errs[2] < 0.05):
                ok = False
    results.append(CheckResult("limits", "large-j parabose limit (j in 8, 32, 128)", ok, worst,
                               "strict decrease, final < 0.05"))

    conc = abs(wavefunction_table("position", [64], 32, -0.999).values[0, 32]) ** 2
    conc_closer = abs(wavefunction_table("position", [64], 32, -0.9999).values[0, 32]) ** 2
    sym = abs(wavefunction_table("position", [0], 32, 0.999).values[0, 32]) ** 2
    ok = conc > 0.9 and conc_closer > conc and sym > 0.9
    results.append(CheckResult("limits", "boundary concentration at q = 0", ok, None,
                               f"|phi_64(0)|^2 = {conc:.6f} at ct = -0.999, j = 32"))

    ok = True
    for j in (4, 9):
        ev = hamiltonian_spectrum(j)
        if ev != tuple(n + 0.5 for n in range(2 * j + 1)):
            ok = False
        for ct in (0.0, 0.9):
            rep = build_representation(HalfInt(2 * j), AlgebraParams(ct * (2 * j + 1)))
            shifted = sorted(v + j + rep.ctilde / 2 + 0.5 for v in rep.j0_diag)
            if max(abs(a - b) for a, b in zip(shifted, ev)) > 1e-12:
                ok = False
    results.append(CheckResult("limits", "Hamiltonian spectrum n + 1/2, independent of ct", ok))
    return results


def suite_dunkl(two_j_max: int = 12, use_exact: bool = True):
    results = []
    ok = True
    worst_c = None
    mus = (Fraction(0), Fraction(-1, 6), Fraction(-9, 20), Fraction(1, 3))
    for two_j in range(2, min(two_j_max, 12) + 1, 2):
        for mu in mus:   # variant 1, mu = -ct/2 with |ct| < 1
            if not abs(2 * mu) < 1:
                continue
            space = HomogPolySpace(two_j)
            rv = RealizationVariant(1, mu)
            report = verify_defining_relations(space, rv)
            rep = build_representation(HalfInt(two_j), AlgebraParams(report.c))
            if not (report.passed and similarity_invariants_match(space, rv, rep)):
                ok = False
                worst_c = report.c
    for two_j in range(1, min(two_j_max, 11) + 1, 2):
        for mu in (Fraction(1, 2), Fraction(1, 4), Fraction(2)):
            space = HomogPolySpace(two_j)
            rv = RealizationVariant(2, mu)
            report = verify_defining_relations(space, rv)
            if not admissible(HalfInt(two_j), AlgebraParams(report.c)):
                continue
            rep = build_representation(HalfInt(two_j), AlgebraParams(report.c))
            if not (report.passed and similarity_invariants_match(space, rv, rep)):
                ok = False
                worst_c = report.c
    results.append(CheckResult("dunkl", "defining relations exact + invariants match (both variants)",
                               ok, 0.0 if ok else 1.0,
                               "" if ok else f"first failure at c = {worst_c}"))

    ok = True
    try:
        verify_defining_relations(HomogPolySpace(4), RealizationVariant(2, Fraction(1, 2)))
        ok = False
    except ValueError:
        pass
    try:
        verify_defining_relations(HomogPolySpace(3), RealizationVariant(1, Fraction(1, 2)))
        ok = False
    except ValueError:
        pass
    results.append(CheckResult("dunkl", "variant/parity mismatch rejected", ok))
    return results


_SUITES = {
    "algebra": suite_algebra,
    "spectral": suite_spectral,
    "orthogonality": suite_orthogonality,
    "limits": suite_limits,
    "dunkl": suite_dunkl,
}


def run_suites(names, two_j_max: int = 16, use_exact: bool = False, corrupt: bool = False):
    results = []
    for name in names:
        if name not in _SUITES:
            raise KeyError(name)
        kwargs = {"two_j_max": two_j_max, "use_exact": use_exact}
        if name == "algebra":
            kwargs["corrupt"] = corrupt
        results.extend(_SUITES[name](**kwargs))
    return results
