"""finosc command line tool.

Subcommands: rep (representation matrices as JSON), spectrum (position /
momentum / Hamiltonian eigenvalues as CSV), wavefunctions (CSV / JSON tables
and SVG stem plots, with the bundled figure presets), verify (check suites).

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""
import argparse
import math
import sys
from pathlib import Path

from .algebra import AlgebraParams, HalfInt, build_representation
from .oscillator import position_operator, hamiltonian_spectrum, wavefunction_table
from .orthopoly import parabose_wavefunction
from .spectral import sturm_eigenvalues
from . import verify as verify_mod

FIG1_CTILDES = (-0.999, -0.8, -0.3, 0.0, 0.3, 0.8, 0.999)
FIG1_LEVELS = (0, 1, 2, 64)
FIG2_PAIRS = ((-0.8, 0.9), (0.8, 0.1))   # (ctilde, parabose a) per the comparison preset
FIG2_LEVELS = (0, 1, 2)
FIG_J = 32


class DomainError(Exception):
    """User input outside the model's domain (exit code 2)."""


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _parse_levels(text: str):
    levels = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:   # "a-b" range; levels are nonnegative
            lo, _, hi = part.partition("-")
            levels.extend(range(int(lo), int(hi) + 1))
        else:
            levels.append(int(part))
    return tuple(levels)


def _resolve_params(args, need_integer_j: bool):
    """RunConfig invariant: exactly one of ctilde | (c, epsilon); |ctilde| < 1."""
    has_ct = args.ctilde is not None
    has_c = args.c is not None
    if has_ct == has_c:
        raise DomainError("give exactly one of --ctilde or --c (with optional --epsilon)")
    two_j = args.two_j
    if two_j < 1:
        raise DomainError(f"--two-j must be a positive integer, got {two_j}")
    if need_integer_j and two_j % 2:
        raise DomainError(
            f"two_j={two_j} is half-integer: the oscillator model needs odd dimension (integer j)")
    if has_ct:
        if not abs(args.ctilde) < 1:
            raise DomainError(f"need |ctilde| < 1, got {args.ctilde}")
        if two_j % 2:
            raise DomainError("half-integer representations take --c/--epsilon, not --ctilde")
        return args.ctilde, AlgebraParams(args.ctilde * (two_j + 1), 1)
    eps = 1 if args.epsilon is None else args.epsilon
    params = AlgebraParams(args.c, eps)
    ctilde = args.c * eps / (two_j + 1) if two_j % 2 == 0 else None
    return ctilde, params


def _write(text: str, out):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_rep(args) -> int:
    ctilde, params = _resolve_params(args, need_integer_j=False)
    try:
        rep = build_representation(HalfInt(args.two_j), params)
    except ValueError as e:
        raise DomainError(str(e))
    _write(rep.to_json() + "\n", args.out)
    return 0


def cmd_spectrum(args) -> int:
    if args.operator in ("position", "momentum"):
        ctilde, _ = _resolve_params(args, need_integer_j=True)
        j = args.two_j // 2
        try:
            ev = sturm_eigenvalues(position_operator(j, ctilde), args.tol) / 2
        except ValueError as e:
            raise DomainError(str(e))
    else:
        if args.two_j % 2:
            raise DomainError("the Hamiltonian spectrum is defined on odd dimensions (integer j)")
        ev = hamiltonian_spectrum(args.two_j // 2)
    lines = ["index,eigenvalue"]
    lines += [f"{i},{_fmt(v)}" for i, v in enumerate(ev)]
    _write("\n".join(lines) + "\n", args.out)
    return 0


def _render_panels(table, out_dir, prefix, overlay_fn=None):
    from .plotting import render_table_panels
    render_table_panels(table, out_dir, prefix, overlay_fn=overlay_fn)


def _emit_table(table, fmt, out, prefix, overlay_fn=None):
    if fmt == "csv":
        _write(table.to_csv(), out)
    elif fmt == "json":
        _write(table.to_json() + "\n", out)
    else:
        out_dir = out or "."
        _render_panels(table, out_dir, prefix, overlay_fn=overlay_fn)
        Path(out_dir, f"{prefix}.csv").write_text(table.to_csv())


def cmd_wavefunctions(args) -> int:
    if args.preset == "fig1":
        out_dir = args.out or "finosc_fig1"
        for ct in FIG1_CTILDES:
            table = wavefunction_table("position", FIG1_LEVELS, FIG_J, ct)
            prefix = f"fig1_ct{ct:+.3f}"
            _render_panels(table, out_dir, prefix)
            Path(out_dir, f"{prefix}.csv").write_text(table.to_csv())
        return 0
    if args.preset == "fig2":
        out_dir = args.out or "finosc_fig2"
        scale = FIG_J ** -0.25
        root_j = math.sqrt(FIG_J)
        for ct, a in FIG2_PAIRS:
            table = wavefunction_table("position", FIG2_LEVELS, FIG_J, ct)

            def overlay(n, x, a=a):
                return scale * parabose_wavefunction(n, a, x / root_j)

            prefix = f"fig2_ct{ct:+.3f}"
            _render_panels(table, out_dir, prefix, overlay_fn=overlay)
            Path(out_dir, f"{prefix}.csv").write_text(table.to_csv())
        return 0

    if args.two_j is None:
        raise DomainError("--two-j is required without a preset")
    ctilde, _ = _resolve_params(args, need_integer_j=True)
    j = args.two_j // 2
    if args.levels is None:
        raise DomainError("--levels is required without a preset")
    levels = _parse_levels(args.levels)
    for n in levels:
        if not 0 <= n <= 2 * j:
            raise DomainError(f"level n={n} out of range 0..{2 * j}")
    table = wavefunction_table(args.kind, levels, j, ctilde)
    prefix = f"wf_ct{ctilde:+.3f}_{args.kind}"
    _emit_table(table, args.format, args.out, prefix)
    return 0


def cmd_verify(args) -> int:
    names = list(verify_mod.SUITE_NAMES) if args.suite == "all" else [args.suite]
    try:
        results = verify_mod.run_suites(names, two_j_max=args.two_j_max,
                                        use_exact=args.exact, corrupt=args.corrupt)
    except KeyError:
        raise DomainError(f"unknown suite {args.suite!r}")
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finosc",
        description="Finite oscillator with equidistant position spectrum: "
                    "representations, spectra, dual Hahn wavefunctions, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p, two_j_required=True):
        p.add_argument("--two-j", dest="two_j", type=int, required=two_j_required,
                       help="2j (dimension minus one)")
        p.add_argument("--ctilde", type=float, default=None,
                       help="deformation parameter, |ctilde| < 1 (integer j only)")
        p.add_argument("--c", type=float, default=None, help="raw deformation parameter c")
        p.add_argument("--epsilon", type=int, choices=(1, -1), default=None,
                       help="parity sign of the highest weight vector (with --c)")
        p.add_argument("--out", default=None, help="output file (or directory for SVG)")

    p = sub.add_parser("rep", help="build a representation and export it as JSON")
    add_params(p)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("spectrum", help="eigenvalues of position/momentum/Hamiltonian as CSV")
    add_params(p)
    p.add_argument("--operator", choices=("position", "momentum", "hamiltonian"),
                   default="position")
    p.add_argument("--tol", type=float, default=1e-10, help="bisection width for the oracle")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("wavefunctions", help="wavefunction tables as CSV/JSON/SVG stem plots")
    add_params(p, two_j_required=False)
    p.add_argument("--levels", default=None, help="levels, e.g. '0,1,2' or '0-3,64'")
    p.add_argument("--kind", choices=("position", "momentum"), default="position")
    p.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    p.add_argument("--preset", choices=("fig1", "fig2"), default=None,
                   help="bundled figure parameter sets (j=32 panels)")
    p.set_defaults(func=cmd_wavefunctions)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all",
                   choices=verify_mod.SUITE_NAMES + ("all",))
    p.add_argument("--two-j-max", dest="two_j_max", type=int, default=16)
    p.add_argument("--exact", action="store_true", help="enable exact rational checks")
    p.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)  # negative-control hook
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    # presets do not need --two-j/--ctilde; patch up the required flag for that path
    try:
        return args.func(args)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
