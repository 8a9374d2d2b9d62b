"""The identity registry and the verification runner.

Every determinant identity the package can check is one row in
``REGISTRY``: a matrix builder (or path configuration), a closed-form
right-hand side, a parameter validator, and a one-line statement.
Adding an identity is adding a row.

``run_case`` performs one exact check and never raises for
parameter-level problems: invalid parameters yield a "skipped" report,
singular closed forms yield "rhs-undefined" (the determinant side is
still computed), and only genuine mismatches yield "fail".
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as _cartesian
from typing import Callable, Iterable, Mapping, Sequence

from . import formulas, matrices, paths
from .engines import ENGINES, DetResult, EngineStats, det
from .formulas import RhsUndefinedError
from .rationals import format_rational
from .sequences import SequenceSpec, fibonacci

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_RHS_UNDEFINED = "rhs-undefined"
STATUS_SKIPPED = "skipped"

ENGINE_ENUMERATE = "enumerate"   # brute-force family enumeration (path identities)

DEFAULT_SEED = 20100
DEFAULT_ALPHA_MAX = 12

# Canonical parameter order for reports and CLIs.
PARAM_ORDER = ("n", "k", "beta", "alpha", "a", "b", "c", "x", "aterms", "bterms")


@dataclass(frozen=True)
class IdentityCase:
    identity: str
    params: Mapping


@dataclass
class VerificationReport:
    case: IdentityCase
    status: str
    lhs: Fraction | None = None
    rhs: Fraction | None = None
    engine: str | None = None
    stats: EngineStats = field(default_factory=EngineStats)
    elapsed_s: float = 0.0
    detail: str = ""


@dataclass(frozen=True)
class Identity:
    id: str
    statement: str
    params: tuple[str, ...]
    build: Callable[[Mapping], matrices.ExactMatrix] | None
    rhs: Callable[[Mapping], Fraction | int]
    validate: Callable[[Mapping], None] = lambda p: None
    lhs_mode: str = "det"            # "det" or "families"
    default_n_max: int = 6


def _alphas(p: Mapping) -> tuple[int, ...]:
    return tuple(p["alpha"])


def _need_alpha_len(p: Mapping, extra: int = 0) -> None:
    want = p["n"] + extra
    if len(p["alpha"]) != want:
        raise ValueError(f"alpha must have length {want}, got {len(p['alpha'])}")


def _validate_kbeta(p: Mapping) -> None:
    if p["k"] < 2:
        raise ValueError(f"k must be >= 2 (got {p['k']})")
    if not 0 <= p["beta"] <= p["k"] - 1:
        raise ValueError(
            f"beta must satisfy 0 <= beta <= k-1 = {p['k'] - 1} (got {p['beta']})")


def _validate_n(p: Mapping) -> None:
    if p["n"] < 1:
        raise ValueError(f"n must be >= 1 (got {p['n']})")


_CATALAN = SequenceSpec("catalan")


def _iota(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def _build_registry() -> dict[str, Identity]:
    rows: list[Identity] = [
        Identity(
            id="catalan-hankel",
            statement="det[ C(i+j) ] = 1",
            params=("n",),
            build=lambda p: matrices.hankel_matrix(_CATALAN, p["n"], 0),
            rhs=lambda p: 1,
            validate=_validate_n,
            default_n_max=10,
        ),
        Identity(
            id="catalan-hankel-s1",
            statement="det[ C(i+j+1) ] = 1",
            params=("n",),
            build=lambda p: matrices.hankel_matrix(_CATALAN, p["n"], 1),
            rhs=lambda p: 1,
            validate=_validate_n,
            default_n_max=10,
        ),
        Identity(
            id="catalan-hankel-s2",
            statement="det[ C(i+j+2) ] = n + 1",
            params=("n",),
            build=lambda p: matrices.hankel_matrix(_CATALAN, p["n"], 2),
            rhs=lambda p: p["n"] + 1,
            validate=_validate_n,
            default_n_max=10,
        ),
        Identity(
            id="catalan-fib",
            statement="det[ C(i+j) + C(i+j+1) ] = F(2n)   (F_0 = F_1 = 1)",
            params=("n",),
            build=lambda p: matrices.catalan_alpha_pair_matrix(_iota(p["n"] + 1)),
            rhs=lambda p: fibonacci(2 * p["n"]),
            validate=_validate_n,
            default_n_max=10,
        ),
        Identity(
            id="catalan-alpha",
            statement=("det[ C(a_i+j) ] = prod_{i<j}(a_j-a_i)"
                       " * prod_i (i+n)!(2a_i)! / ((2i)! a_i! (a_i+n)!)"),
            params=("n", "alpha"),
            build=lambda p: matrices.catalan_alpha_matrix(_alphas(p)),
            rhs=lambda p: formulas.rhs_catalan_alpha(_alphas(p)),
            validate=lambda p: (_validate_n(p), _need_alpha_len(p)),
        ),
        Identity(
            id="catalan-alpha-pair",
            statement=("det[ C(a_i+j) + C(a_{i+1}+j) ] = Vandermonde(a)"
                       " * factorial product * partial-fraction sum,"
                       " len(a) = n + 1"),
            params=("n", "alpha"),
            build=lambda p: matrices.catalan_alpha_pair_matrix(_alphas(p)),
            rhs=lambda p: formulas.rhs_catalan_alpha_pair(_alphas(p)),
            validate=lambda p: (_validate_n(p), _need_alpha_len(p, extra=1)),
        ),
        Identity(
            id="gencat-alpha",
            statement=("det[ G_k((k-1)a_i+j+b) ] = prod_{i<j}(a_j-a_i) * prod_i"
                       " ((k-1)i+b+n)!(k a_i+b)! / ((k i+b)! a_i! ((k-1)a_i+b+n)!)"),
            params=("n", "k", "beta", "alpha"),
            build=lambda p: matrices.gen_catalan_alpha_matrix(
                _alphas(p), p["k"], p["beta"]),
            rhs=lambda p: formulas.rhs_gen_catalan_alpha(
                _alphas(p), p["k"], p["beta"]),
            validate=lambda p: (_validate_n(p), _validate_kbeta(p), _need_alpha_len(p)),
        ),
        Identity(
            id="gencat-alpha-pair",
            statement=("det[ G_k((k-1)a_i+j+b) + G_k((k-1)a_{i+1}+j+b) ] ="
                       " Vandermonde(a) * factorial product * partial-fraction"
                       " sum, len(a) = n + 1"),
            params=("n", "k", "beta", "alpha"),
            build=lambda p: matrices.gen_catalan_alpha_pair_matrix(
                _alphas(p), p["k"], p["beta"]),
            rhs=lambda p: formulas.rhs_gen_catalan_alpha_pair(
                _alphas(p), p["k"], p["beta"]),
            validate=lambda p: (_validate_n(p), _validate_kbeta(p),
                                _need_alpha_len(p, extra=1)),
        ),
        Identity(
            id="gencat-rowpair",
            statement=("det[ G_k((k-1)i+j) + G_k((k-1)(i+1)+j) ] ="
                       " sum_s C((k-1)s+n, n-s)"),
            params=("n", "k"),
            build=lambda p: matrices.gen_catalan_alpha_pair_matrix(
                _iota(p["n"] + 1), p["k"], 0),
            rhs=lambda p: formulas.rhs_rowpair_sum(p["k"], p["n"]),
            validate=lambda p: (_validate_n(p), _require_k2(p)),
            default_n_max=8,
        ),
        Identity(
            id="gencat-succ",
            statement=("det[ G_k((k-1)i+j+b) + G_k((k-1)i+j+b+1) ] ="
                       " sum_s C(floor((s+b)/(k-1))+n, n-s)"),
            params=("n", "k", "beta"),
            build=lambda p: matrices.gen_catalan_succ_matrix(
                p["k"], p["beta"], p["n"]),
            rhs=lambda p: formulas.rhs_gen_catalan_succ(p["k"], p["beta"], p["n"]),
            validate=lambda p: (_validate_n(p), _validate_kbeta(p)),
            default_n_max=8,
        ),
        Identity(
            id="binom-alpha",
            statement=("det[ C(k a_i+j+b, a_i-1) ] = b!/(b+n)!"
                       " * prod_{i<j}(a_j-a_i) * prod_i ((k-1)i+b+n)!(k a_i+b)!"
                       " / ((k i+b)! (a_i-1)! ((k-1)a_i+b+n)!), a_i >= 1"),
            params=("n", "k", "beta", "alpha"),
            build=lambda p: matrices.binomial_alpha_matrix(
                _alphas(p), p["k"], p["beta"]),
            rhs=lambda p: formulas.rhs_binomial_alpha(
                _alphas(p), p["k"], p["beta"]),
            validate=lambda p: (_validate_n(p), _require_k2(p), _need_alpha_len(p)),
        ),
        Identity(
            id="path-family",
            statement=("#{vertex-disjoint families (a,b-i) -> (alpha_i,c)} ="
                       " prod_{i<j}(a_j-a_i) * prod_i (a_i+c-a-b)!"
                       " / ((a_i-a)!(c-b+i)!)"),
            params=("n", "a", "b", "c", "alpha"),
            build=lambda p: paths.path_count_matrix(_family_config(p)),
            rhs=lambda p: formulas.rhs_path_family(
                p["a"], p["b"], p["c"], _alphas(p)),
            validate=lambda p: (_validate_n(p), _need_alpha_len(p)),
            lhs_mode="families",
            default_n_max=3,
        ),
        Identity(
            id="linear-factors",
            statement=("det[ prod_{t>j}(X_i+A_t) * prod_{t<=j}(X_i+B_t) ] ="
                       " prod_{i<j}(X_i-X_j) * prod_{1<=i<=j<=n-1}(B_i-A_j)"),
            params=("n", "x", "aterms", "bterms"),
            build=lambda p: matrices.linear_factor_matrix(
                p["x"], p["aterms"], p["bterms"]),
            rhs=lambda p: formulas.rhs_linear_factor(
                p["x"], p["aterms"], p["bterms"]),
            validate=_validate_linear_factors,
        ),
    ]
    ternary_statements = {
        "a":      "det[ C(3m+1, m)/(3m+1) ]_{m=i+j}",
        "a1":     "det[ C(3m+4, m+1)/(3m+4) ]_{m=i+j}",
        "b":      "det[ C(3m+2, m+1)/(3m+2) ]_{m=i+j}",
        "b1":     "det[ C(3m+5, m+2)/(3m+5) ]_{m=i+j}",
        "c":      "det[ 2 C(3m+1, m+1)/(3m+1) ]_{m=i+j}",
        "c1":     "det[ 2 C(3m+4, m+2)/(3m+4) ]_{m=i+j}",
        "a-mod":  "det[ a(i+j) ], a(0) = -2, a(m) = C(3m+1, m)/(3m+1)",
        "b-mod":  "det[ b(i+j) ], b(0) = 10, b(m) = 2 C(3m+2, m)/(3m+2)",
        "b1-alt": "det[ 2 C(3m+5, m+1)/(3m+5) ]_{m=i+j}",
        "c-mod":  "det[ c(i+j) ], c(0) = 7/2, c(m) = 2 C(3m+1, m+1)/(3m+1)",
    }
    for variant, lhs_text in ternary_statements.items():
        rows.append(Identity(
            id=f"ternary-{variant}",
            statement=f"{lhs_text} = Pochhammer product with (27/4)^(2i) factors",
            params=("n",),
            build=(lambda p, v=variant: matrices.ternary_matrix(v, p["n"])),
            rhs=(lambda p, v=variant: formulas.rhs_ternary(v, p["n"])),
            validate=_validate_n,
            default_n_max=8,
        ))
    return {row.id: row for row in rows}


def _require_k2(p: Mapping) -> None:
    if p["k"] < 2:
        raise ValueError(f"k must be >= 2 (got {p['k']})")


def _validate_linear_factors(p: Mapping) -> None:
    _validate_n(p)
    if len(p["x"]) != p["n"]:
        raise ValueError(f"x must have length n = {p['n']}")
    if len(p["aterms"]) != p["n"] - 1 or len(p["bterms"]) != p["n"] - 1:
        raise ValueError(f"aterms/bterms must have length n-1 = {p['n'] - 1}")


def _family_config(p: Mapping) -> paths.PathSystemConfig:
    return paths.column_to_row_config(p["a"], p["b"], p["c"], _alphas(p))


REGISTRY: dict[str, Identity] = _build_registry()

TERNARY_IDS = tuple(i for i in REGISTRY if i.startswith("ternary-"))


def identity_ids() -> tuple[str, ...]:
    return tuple(REGISTRY)


def run_case(case: IdentityCase, engine: str | None = None,
             cap: int = paths.DEFAULT_ENUM_CAP) -> VerificationReport:
    """Check one identity instance exactly; never raises on bad params."""
    identity = REGISTRY.get(case.identity)
    if identity is None:
        return VerificationReport(case, STATUS_SKIPPED,
                                  detail=f"unknown identity {case.identity!r}")
    engine = engine or case.params.get("engine")
    start = time.perf_counter()
    try:
        identity.validate(case.params)
    except (ValueError, KeyError) as exc:
        return VerificationReport(case, STATUS_SKIPPED, detail=str(exc),
                                  elapsed_s=time.perf_counter() - start)

    try:
        lhs, used_engine, stats = _compute_lhs(identity, case.params, engine, cap)
    except (ValueError, paths.EnumerationCapError) as exc:
        return VerificationReport(case, STATUS_SKIPPED, detail=str(exc),
                                  elapsed_s=time.perf_counter() - start)

    try:
        rhs = Fraction(identity.rhs(case.params))
    except RhsUndefinedError as exc:
        return VerificationReport(case, STATUS_RHS_UNDEFINED, lhs=lhs,
                                  engine=used_engine, stats=stats,
                                  detail=str(exc),
                                  elapsed_s=time.perf_counter() - start)
    except ValueError as exc:
        return VerificationReport(case, STATUS_SKIPPED, lhs=lhs,
                                  engine=used_engine, stats=stats,
                                  detail=str(exc),
                                  elapsed_s=time.perf_counter() - start)

    status = STATUS_PASS if lhs == rhs else STATUS_FAIL
    return VerificationReport(case, status, lhs=lhs, rhs=rhs,
                              engine=used_engine, stats=stats,
                              elapsed_s=time.perf_counter() - start)


def _compute_lhs(identity: Identity, params: Mapping, engine: str | None,
                 cap: int) -> tuple[Fraction, str, EngineStats]:
    if identity.lhs_mode == "families" and engine in (None, ENGINE_ENUMERATE):
        config = _family_config(params)
        value = paths.count_nonintersecting(config, cap)
        return Fraction(value), ENGINE_ENUMERATE, EngineStats()
    if engine == ENGINE_ENUMERATE:
        raise ValueError(f"engine {ENGINE_ENUMERATE!r} only applies to path identities")
    if engine is not None and engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    assert identity.build is not None
    matrix = identity.build(params)
    result: DetResult = det(matrix, engine=engine)
    return result.value, result.engine, result.stats


def run_cases(cases: Iterable[IdentityCase], engine: str | None = None,
              cap: int = paths.DEFAULT_ENUM_CAP) -> list[VerificationReport]:
    return [run_case(c, engine=engine, cap=cap) for c in cases]


def run_grid(identity: str, ranges: Mapping[str, Sequence],
             engine: str | None = None,
             cap: int = paths.DEFAULT_ENUM_CAP) -> list[VerificationReport]:
    """Run the Cartesian product of ``ranges`` in deterministic order.

    Range keys follow PARAM_ORDER; values are iterated in the order
    given, so identical inputs always produce identical report lists.
    """
    keys = [k for k in PARAM_ORDER if k in ranges]
    extra = set(ranges) - set(keys)
    if extra:
        raise ValueError(f"unknown grid parameters: {sorted(extra)}")
    cases = [IdentityCase(identity, dict(zip(keys, combo)))
             for combo in _cartesian(*(ranges[k] for k in keys))]
    return run_cases(cases, engine=engine, cap=cap)


# -- seeded sampling helpers (shared by the CLI and the test suite) -------


def sample_alpha_vector(rng: random.Random, length: int,
                        max_value: int = DEFAULT_ALPHA_MAX,
                        min_value: int = 0) -> tuple[int, ...]:
    """A strictly increasing vector drawn uniformly from the given range."""
    pool = range(min_value, max_value + 1)
    if length > len(pool):
        raise ValueError(f"cannot draw {length} distinct values from {pool}")
    return tuple(sorted(rng.sample(pool, length)))


def sample_linear_factor_params(rng: random.Random, n: int) -> dict:
    """Random rational X/A/B assignments with denominators up to 9."""
    q = lambda: Fraction(rng.randint(-20, 20), rng.randint(1, 9))
    return {"n": n,
            "x": tuple(q() for _ in range(n)),
            "aterms": tuple(q() for _ in range(n - 1)),
            "bterms": tuple(q() for _ in range(n - 1))}


def sample_path_family_params(rng: random.Random, n: int,
                              max_rise: int = 4, max_run: int = 5) -> dict:
    """Random stacked-family parameters satisfying the preconditions."""
    a = rng.randint(-2, 2)
    b = rng.randint(-2, 2)
    c = b + rng.randint(0, max_rise)
    alphas = tuple(sorted(a + rng.randint(0, max_run) for _ in range(n)))
    return {"n": n, "a": a, "b": b, "c": c, "alpha": alphas}


def format_param_value(key: str, value) -> str:
    if key in ("alpha", "x", "aterms", "bterms"):
        return ",".join(format_rational(Fraction(v)) for v in value)
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)
