"""Command line interface.

Exit codes: 0 when nothing failed, 1 when any verification case failed,
2 on usage or parameter errors.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from . import bench as bench_mod
from . import paths as paths_mod
from . import registry, reporting
from .engines import ENGINES, det
from .matrices import ExactMatrix, MatrixParseError
from .rationals import format_rational, parse_rational
from .registry import (DEFAULT_SEED, ENGINE_ENUMERATE, REGISTRY, IdentityCase,
                       STATUS_FAIL)

PROG = "catdet"


class UsageError(Exception):
    pass


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError as exc:
        raise UsageError(f"bad integer list {text!r}") from exc


def _parse_alpha(text: str) -> tuple[int, ...]:
    return tuple(_parse_int_list(text))


def _parse_rational_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(parse_rational(tok) for tok in text.split(",") if tok != "")
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational list {text!r}: {exc}") from exc


def _parse_points(text: str) -> list[tuple[int, int]]:
    points = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        coords = _parse_int_list(chunk)
        if len(coords) != 2:
            raise UsageError(f"bad point {chunk!r} (need x,y)")
        points.append((coords[0], coords[1]))
    if not points:
        raise UsageError(f"no points in {text!r}")
    return points


def _parse_param_tokens(tokens: list[str]) -> dict:
    params: dict = {}
    for tok in tokens:
        if "=" not in tok:
            raise UsageError(f"parameter must look like key=value, got {tok!r}")
        key, _, value = tok.partition("=")
        if key == "alpha":
            params[key] = _parse_alpha(value)
        elif key in ("x", "aterms", "bterms"):
            params[key] = _parse_rational_list(value)
        elif key in ("n", "k", "beta", "a", "b", "c"):
            try:
                params[key] = int(value)
            except ValueError as exc:
                raise UsageError(f"parameter {key} must be an integer") from exc
        elif key == "engine":
            params[key] = value
        else:
            raise UsageError(f"unknown parameter {key!r}")
    return params


def _write_out(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- verify ----------------------------------------------------------------


def _beta_values(args, k: int) -> list[int]:
    if args.beta == "all":
        return list(range(k))
    try:
        return [int(args.beta)]
    except ValueError as exc:
        raise UsageError(f"--beta must be an integer or 'all', got {args.beta!r}") from exc


def _verify_cases(args) -> list[IdentityCase]:
    identity = REGISTRY[args.identity]
    rng = random.Random(args.seed)
    n_values = list(range(args.n_min, args.n_max + 1))
    k_values = _parse_int_list(args.k) if args.k else [2, 3, 4]
    cases: list[IdentityCase] = []

    def alpha_vectors(n: int, extra: int = 0, minimum: int = 0) -> list[tuple[int, ...]]:
        if args.alpha:
            return [_parse_alpha(args.alpha)]
        return [registry.sample_alpha_vector(rng, n + extra, args.alpha_max, minimum)
                for _ in range(args.samples)]

    for n in n_values:
        if identity.params == ("n",):
            cases.append(IdentityCase(args.identity, {"n": n}))
        elif identity.id == "gencat-rowpair":
            for k in k_values:
                cases.append(IdentityCase(args.identity, {"n": n, "k": k}))
        elif identity.id == "gencat-succ":
            for k in k_values:
                for beta in _beta_values(args, k):
                    cases.append(IdentityCase(args.identity,
                                              {"n": n, "k": k, "beta": beta}))
        elif identity.id in ("catalan-alpha", "catalan-alpha-pair"):
            extra = 1 if identity.id.endswith("-pair") else 0
            for alphas in alpha_vectors(n, extra):
                cases.append(IdentityCase(args.identity, {"n": n, "alpha": alphas}))
        elif identity.id in ("gencat-alpha", "gencat-alpha-pair", "binom-alpha"):
            extra = 1 if identity.id.endswith("-pair") else 0
            minimum = 1 if identity.id == "binom-alpha" else 0
            for k in k_values:
                for beta in _beta_values(args, k):
                    for alphas in alpha_vectors(n, extra, minimum):
                        cases.append(IdentityCase(
                            args.identity,
                            {"n": n, "k": k, "beta": beta, "alpha": alphas}))
        elif identity.id == "linear-factors":
            for _ in range(args.samples):
                cases.append(IdentityCase(
                    args.identity, registry.sample_linear_factor_params(rng, n)))
        elif identity.id == "path-family":
            for _ in range(args.samples):
                cases.append(IdentityCase(
                    args.identity, registry.sample_path_family_params(rng, n)))
        else:
            raise UsageError(f"no grid strategy for identity {args.identity!r}")
    return cases


def _cmd_verify(args) -> int:
    if args.identity not in REGISTRY:
        raise UsageError(f"unknown identity {args.identity!r}; "
                         f"run '{PROG} list' for the registry")
    if args.engine and args.engine not in ENGINES + (ENGINE_ENUMERATE,):
        raise UsageError(f"unknown engine {args.engine!r}")
    cases = _verify_cases(args)
    reports = registry.run_cases(cases, engine=args.engine, cap=args.cap)
    meta = {"identity": args.identity, "seed": args.seed,
            "samples": args.samples, "engine": args.engine or "auto",
            "n_min": args.n_min, "n_max": args.n_max}
    text = reporting.emit_report(reports, fmt=args.format, run_meta=meta,
                                 include_timing=args.timing)
    _write_out(text, args.out)
    return 1 if any(r.status == STATUS_FAIL for r in reports) else 0


# -- det ---------------------------------------------------------------------


def _cmd_det(args) -> int:
    if bool(args.file) == bool(args.identity):
        raise UsageError("need exactly one of --file or --identity")
    if args.file:
        try:
            matrix = ExactMatrix.read(args.file)
        except (OSError, MatrixParseError) as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from exc
    else:
        identity = REGISTRY.get(args.identity)
        if identity is None:
            raise UsageError(f"unknown identity {args.identity!r}")
        params = _parse_param_tokens(args.params or [])
        try:
            identity.validate(params)
            assert identity.build is not None
            matrix = identity.build(params)
        except (ValueError, KeyError) as exc:
            raise UsageError(f"bad parameters for {args.identity}: {exc}") from exc
    try:
        result = det(matrix, engine=args.engine)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(f"det = {format_rational(result.value)}")
    print(f"engine={result.engine} order={matrix.order} "
          f"pivots={result.stats.pivots} swaps={result.stats.swaps} "
          f"fallbacks={result.stats.fallbacks} "
          f"elapsed_ms={result.elapsed_s * 1000.0:.3f}")
    return 0


# -- paths -------------------------------------------------------------------


def _paths_config(args) -> paths_mod.PathSystemConfig:
    starts = _parse_points(args.starts)
    ends = _parse_points(args.ends)
    try:
        return paths_mod.PathSystemConfig(tuple(starts), tuple(ends), mu=args.mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _cmd_paths(args) -> int:
    if args.action in ("count", "enumerate"):
        starts = _parse_points(args.starts)
        ends = _parse_points(args.ends)
        if len(starts) != 1 or len(ends) != 1:
            raise UsageError(f"paths {args.action} takes exactly one start and one end")
        if args.action == "count":
            print(paths_mod.count_paths(starts[0], ends[0], args.mu))
            return 0
        try:
            found = paths_mod.enumerate_paths(starts[0], ends[0], args.mu, cap=args.cap)
        except paths_mod.EnumerationCapError as exc:
            raise UsageError(str(exc)) from exc
        for p in found:
            print(p.steps if p.steps else "(empty path)")
        print(f"total: {len(found)}")
        return 0

    config = _paths_config(args)
    if args.action == "families":
        try:
            count = paths_mod.count_nonintersecting(config, cap=args.cap)
        except paths_mod.EnumerationCapError as exc:
            raise UsageError(str(exc)) from exc
        print(count)
        print(f"lgv determinant: {paths_mod.lgv_determinant(config)}")
        return 0

    family = None
    if args.show_family:
        try:
            family = paths_mod.first_family(config, cap=args.cap)
        except paths_mod.EnumerationCapError as exc:
            raise UsageError(str(exc)) from exc
        if family is None:
            print("(no vertex-disjoint family exists)")
    text = paths_mod.render_ascii(config, family)
    _write_out(text, args.out)
    if args.figure:
        from . import plots
        plots.save_config_figure(config, family, out=args.figure)
        print(f"figure written to {args.figure}")
    return 0


# -- bench -------------------------------------------------------------------


def _cmd_bench(args) -> int:
    engines = args.engines.split(",") if args.engines else list(ENGINES)
    overrides: dict = {}
    if args.k is not None:
        overrides["k"] = args.k
    if args.beta is not None:
        overrides["beta"] = args.beta
    n_values = list(range(args.n_min, args.n_max + 1))
    try:
        rows = bench_mod.run_bench(args.family, n_values, engines,
                                   reps=args.reps, overrides=overrides or None)
    except (ValueError, bench_mod.EngineDisagreement) as exc:
        raise UsageError(str(exc)) from exc
    text = bench_mod.bench_csv(rows) if args.format == "csv" else bench_mod.bench_text(rows)
    _write_out(text, args.out)
    if args.figure:
        from . import plots
        plots.save_bench_figure(rows, out=args.figure)
        print(f"figure written to {args.figure}")
    return 0


# -- list --------------------------------------------------------------------


def _cmd_list(args) -> int:
    for identity in REGISTRY.values():
        params = ", ".join(identity.params)
        print(f"{identity.id:<20} [{params}]")
        print(f"    {identity.statement}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Exact determinant identities for Catalan-like sequences, "
                    "verified against closed forms and lattice-path counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check one identity over a parameter grid")
    p.add_argument("identity")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--k", default=None, help="comma-separated k values (default 2,3,4)")
    p.add_argument("--beta", default="all", help="a beta value or 'all'")
    p.add_argument("--alpha", default=None, help="explicit alpha vector a,b,c")
    p.add_argument("--alpha-max", type=int, default=registry.DEFAULT_ALPHA_MAX)
    p.add_argument("--samples", type=int, default=5,
                   help="sampled alpha vectors / assignments per grid point")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--engine", default=None,
                   help=f"one of {', '.join(ENGINES)} or '{ENGINE_ENUMERATE}'")
    p.add_argument("--cap", type=int, default=paths_mod.DEFAULT_ENUM_CAP)
    p.add_argument("--format", choices=reporting.FORMATS, default="text")
    p.add_argument("--out", default=None, help="write the report to a file")
    p.add_argument("--timing", action="store_true",
                   help="include elapsed_ms (breaks byte-for-byte reproducibility)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("det", help="determinant of a matrix file or identity instance")
    p.add_argument("--file", default=None, help="matrix text file")
    p.add_argument("--identity", default=None)
    p.add_argument("--params", nargs="*", default=None,
                   help="key=value pairs, e.g. n=4 k=3 beta=1 alpha=0,1,2,3")
    p.add_argument("--engine", choices=ENGINES, default=None)
    p.set_defaults(func=_cmd_det)

    p = sub.add_parser("paths", help="lattice-path counting and rendering")
    p.add_argument("action", choices=("count", "enumerate", "families", "render"))
    p.add_argument("--starts", required=True, help="semicolon-separated points x,y;x,y")
    p.add_argument("--ends", required=True)
    p.add_argument("--mu", type=int, default=None,
                   help="constrain every visited point to x >= mu*y")
    p.add_argument("--cap", type=int, default=paths_mod.DEFAULT_ENUM_CAP)
    p.add_argument("--show-family", action="store_true",
                   help="overlay the first vertex-disjoint family (render)")
    p.add_argument("--out", default=None)
    p.add_argument("--figure", default=None, help="also save a PNG figure (render)")
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("bench", help="time the determinant engines on a family")
    p.add_argument("--family", required=True, help="identity id, e.g. catalan-hankel")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--engines", default=None,
                   help=f"comma-separated subset of {', '.join(ENGINES)}")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--beta", type=int, default=None)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--out", default=None)
    p.add_argument("--figure", default=None, help="save a median-time PNG chart")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("list", help="print the identity registry")
    p.set_defaults(func=_cmd_list)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
