"""Command-line diagnostics: ``rhs <subcommand> [flags]``.

Subcommands
-----------
converge   tail-norm decay of a built-in square-summable family
axioms     randomized ladder/dual invariant suites with residuals
seminorm   weighted seminorm partial sums and stabilization verdicts
hermite    exact orthonormal polynomial ladder plus density decay
fourier    interleaved torus coefficients, Parseval check, decay report

Reports render as CSV (default) or JSON with fixed 12-fractional-digit
scientific notation, so identical configurations produce byte-identical
output.  Randomized suites draw from numpy's PCG64 generator seeded by
--seed.  Exit status is 0 iff every property the run asserts holds, 1 on a
failed assertion, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Optional, Sequence

from . import diagnostics, fourier, hermite
from .dual import seminorm_partial_sums
from .errors import LadderSpecError, RiggedSpaceError
from .ladder import LadderSpec, geometric_l2, power_law_l2, tail_norm
from .report import Report, to_csv, to_json

__all__ = ["main", "build_parser", "parse_ladder"]


def parse_ladder(text: str) -> LadderSpec:
    """identity | even | comma-separated strictly increasing dimensions."""
    text = text.strip()
    if text == "identity":
        return LadderSpec.identity()
    if text == "even":
        return LadderSpec.even()
    try:
        dims = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise LadderSpecError(
            f"ladder must be 'identity', 'even' or a comma-separated integer "
            f"list, got {text!r}") from None
    return LadderSpec.explicit(dims)


def _parse_k_list(text: str) -> list[int]:
    try:
        ks = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise RiggedSpaceError(f"--k must be a comma-separated integer list, "
                               f"got {text!r}") from None
    if not ks or any(k < 0 for k in ks):
        raise RiggedSpaceError("--k needs at least one index, all >= 0")
    return ks


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rhs",
        description="Convergence, duality and realization diagnostics for "
                    "graded coefficient ladders.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default csv)")
        sp.add_argument("--out", default=None, metavar="PATH",
                        help="write the report to PATH instead of stdout")
        sp.add_argument("--seed", type=int, default=42, metavar="U64",
                        help="PCG64 seed for randomized suites (default 42)")
        sp.add_argument("--ladder", default="identity",
                        metavar="identity|even|LIST",
                        help="level dimension sequence (default identity)")

    p = sub.add_parser("converge", help="tail-norm decay of a built-in family")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--geometric", type=float, metavar="R",
                       help="family x_i = R^(i-1), 0 < R < 1")
    group.add_argument("--power", type=float, metavar="P",
                       help="family x_i = i^(-P), P > 1/2")
    p.add_argument("--levels", type=int, default=20, metavar="N",
                   help="tabulate n = 1..N (default 20)")
    add_common(p)

    p = sub.add_parser("axioms", help="randomized invariant suites")
    p.add_argument("--cases", type=int, default=1000, metavar="N",
                   help="cases per property (default 1000)")
    p.add_argument("--inject-cocone-fault", action="store_true",
                   help="add a deliberately corrupted map family to "
                        "demonstrate a failing report row")
    add_common(p)

    p = sub.add_parser("seminorm", help="weighted seminorm partial sums")
    p.add_argument("--family", choices=("geometric", "power", "fourier"),
                   default="geometric")
    p.add_argument("--ratio", type=float, default=0.5, metavar="R",
                   help="ratio for the geometric family (default 0.5)")
    p.add_argument("--exponent", type=float, default=1.0, metavar="P",
                   help="exponent for the power family (default 1.0)")
    p.add_argument("--function", choices=tuple(fourier.SAMPLERS), default="expcos",
                   help="named torus function for --family fourier")
    p.add_argument("--grid", type=int, default=256, metavar="N",
                   help="sampling grid for --family fourier (default 256)")
    p.add_argument("--k", default="0,1", metavar="LIST",
                   help="comma-separated seminorm indices (default 0,1)")
    p.add_argument("--n-max", type=int, default=60, metavar="N",
                   help="partial-sum length (default 60)")
    add_common(p)

    p = sub.add_parser("hermite", help="exact weighted polynomial ladder")
    p.add_argument("--degree", type=int, default=8, metavar="N",
                   help="degree bound, <= 16 (exact coefficient table "
                        "capped at 8; default 8)")
    p.add_argument("--target", choices=tuple(hermite.DENSITY_TARGETS),
                   default="gaussian",
                   help="density diagnostic target (default gaussian)")
    add_common(p)

    p = sub.add_parser("fourier", help="torus coefficients and decay")
    p.add_argument("--function", choices=tuple(fourier.SAMPLERS), default="expcos")
    p.add_argument("--grid", type=int, default=256, metavar="N",
                   help="power-of-two sampling grid >= 64 (default 256)")
    p.add_argument("--k", default="1,2", metavar="LIST",
                   help="comma-separated seminorm indices (default 1,2)")
    add_common(p)

    return parser


def _base_config(args: argparse.Namespace) -> dict:
    return {"command": args.command, "format": args.format,
            "seed": args.seed, "ladder": args.ladder}


def cmd_converge(args: argparse.Namespace) -> Report:
    levels = int(args.levels)
    if levels < 1:
        raise RiggedSpaceError(f"--levels must be >= 1, got {levels}")
    if args.geometric is not None:
        x = geometric_l2(args.geometric)  # validates square summability
        r = float(args.geometric)
        closed = lambda n: math.sqrt(r ** (2 * n) / (1.0 - r * r))  # noqa: E731
        family = {"family": "geometric", "ratio": r}
        exact_tail = True
    else:
        x = power_law_l2(args.power)
        p_ = float(args.power)
        c = 2.0 * p_ - 1.0
        closed = lambda n: math.sqrt(float(n) ** (-c) / c if n else 1.0 + 1.0 / c)  # noqa: E731
        family = {"family": "power", "exponent": p_}
        exact_tail = False

    report = Report(config=_base_config(args) | family | {"levels": levels},
                    columns=["n", "tail_norm", "closed_form", "abs_gap"])
    prev = math.inf
    for n in range(1, levels + 1):
        t = tail_norm(x, n)
        cf = closed(n)
        gap = abs(t - cf)
        report.add_row(n=n, tail_norm=t, closed_form=cf, abs_gap=gap)
        report.require(t <= prev)
        if exact_tail:
            report.require(gap < 1e-10)
        prev = t
    return report


def cmd_axioms(args: argparse.Namespace) -> Report:
    cases = int(args.cases)
    if cases < 1:
        raise RiggedSpaceError(f"--cases must be >= 1, got {cases}")
    spec = parse_ladder(args.ladder)
    results = diagnostics.run_axiom_suite(
        spec, seed=args.seed, cases=cases,
        inject_cocone_fault=args.inject_cocone_fault)
    report = Report(config=_base_config(args) | {
        "cases": cases, "inject_cocone_fault": bool(args.inject_cocone_fault)},
        columns=["property", "cases", "failures", "max_residual"])
    for res in results:
        report.add_row(property=res.name, cases=res.cases,
                       failures=res.failures, max_residual=res.max_residual)
        report.require(res.failures == 0)
    return report


def cmd_seminorm(args: argparse.Namespace) -> Report:
    ks = _parse_k_list(args.k)
    n_max = int(args.n_max)
    if n_max < 1:
        raise RiggedSpaceError(f"--n-max must be >= 1, got {n_max}")
    config = _base_config(args) | {"family": args.family, "k": args.k}
    if args.family == "geometric":
        r = float(args.ratio)
        if not 0.0 < r < 1.0:
            raise RiggedSpaceError(
                f"geometric ratio must lie in (0, 1) for square summability, got {r}")
        rule = lambda i: r ** (i - 1)  # noqa: E731
        config |= {"ratio": r, "n_max": n_max}
    elif args.family == "power":
        p_ = float(args.exponent)
        if not p_ > 0.5:
            raise RiggedSpaceError(
                f"power-law exponent must exceed 1/2 for square summability, got {p_}")
        rule = lambda i: float(i) ** (-p_)  # noqa: E731
        config |= {"exponent": p_, "n_max": n_max}
    else:
        seq = fourier.coeffs_to_sequence(fourier.SAMPLERS[args.function](),
                                         _validated_grid(args.grid))
        n_max = min(n_max, seq.size) if args.n_max != 60 else seq.size
        rule = lambda i, _s=seq: complex(_s[i - 1])  # noqa: E731
        config |= {"function": args.function, "grid": int(args.grid),
                   "n_max": n_max}

    report = Report(config=config,
                    columns=["k", "N", "partial_qk", "stabilized"])
    for k in ks:
        trace = seminorm_partial_sums(rule, k, n_max)
        for i, val in enumerate(trace.values, start=1):
            report.add_row(k=k, N=i, partial_qk=float(val),
                           stabilized=trace.stabilized)
    return report


def cmd_hermite(args: argparse.Namespace) -> Report:
    degree = int(args.degree)
    if not 0 <= degree <= 16:
        raise RiggedSpaceError(
            f"--degree must lie in 0..16 for floating checks, got {degree}")
    exact_cap = min(degree, 8)
    report = Report(config=_base_config(args) | {
        "degree": degree, "exact_cap": exact_cap, "target": args.target},
        columns=["section", "n", "m", "exact", "value"])

    basis = hermite.orthonormal_basis(degree)
    for n, el in enumerate(basis[:exact_cap + 1]):
        for m in range(n + 1):
            c = el.poly.coeff(m)
            report.add_row(section="basis", n=n, m=m, exact=c, value=float(c))
        report.add_row(section="normalization", n=n, exact=el.sqrt_arg,
                       value=el.norm_factor)

    xs, ws = hermite.quadrature_nodes_weights()
    values = [el.weighted_value(xs) for el in basis]
    for a in range(degree + 1):
        for b in range(a, degree + 1):
            approx = math.fsum(float(t) for t in values[a] * values[b] * ws)
            resid = abs(approx - (1.0 if a == b else 0.0))
            report.add_row(section="orthonormality", n=a, m=b, value=resid)
            report.require(resid < 1e-8)

    errors = hermite.density_diagnostic(hermite.DENSITY_TARGETS[args.target],
                                        degree)
    prev = math.inf
    for n, err in enumerate(errors):
        report.add_row(section="density", n=n, value=float(err))
        report.require(err <= prev + 1e-15)
        prev = float(err)
    return report


def _validated_grid(grid: int) -> int:
    grid = int(grid)
    if grid < 64 or grid & (grid - 1):
        raise RiggedSpaceError(
            f"--grid must be a power of two >= 64, got {grid}")
    return grid


def cmd_fourier(args: argparse.Namespace) -> Report:
    grid = _validated_grid(args.grid)
    ks = _parse_k_list(args.k)
    sampler = fourier.SAMPLERS[args.function]()
    report = Report(config=_base_config(args) | {
        "function": args.function, "grid": grid, "k": args.k,
        "smoothness": sampler.smoothness},
        columns=["section", "m", "n", "k", "terms", "re", "im",
                 "lhs", "rhs", "gap", "partial", "stabilized"])

    seq = fourier.coeffs_to_sequence(sampler, grid)
    for m, c in enumerate(seq, start=1):
        report.add_row(section="coeff", m=m, n=fourier.deinterleave(m),
                       re=float(c.real), im=float(c.imag))

    par = fourier.parseval_check(sampler, grid)
    report.add_row(section="parseval", lhs=par.lhs, rhs=par.rhs, gap=par.gap)

    traces = fourier.rapid_decay_report(sampler, ks, grid)
    for k in ks:
        trace = traces[k]
        report.add_row(section="decay", k=k, terms=int(trace.values.size),
                       partial=float(trace.values[-1]),
                       stabilized=trace.stabilized)

    if sampler.smoothness == fourier.SMOOTH:
        report.require(par.gap < 1e-10)
        for k in ks:
            report.require(traces[k].stabilized)
    return report


HANDLERS = {
    "converge": cmd_converge,
    "axioms": cmd_axioms,
    "seminorm": cmd_seminorm,
    "hermite": cmd_hermite,
    "fourier": cmd_fourier,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = HANDLERS[args.command](args)
    except RiggedSpaceError as err:
        print(f"rhs {args.command}: error: {err}", file=sys.stderr)
        return 2
    text = to_csv(report) if args.format == "csv" else to_json(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
