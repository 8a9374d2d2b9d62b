"""Wall-clock benchmark of the determinant engines on a matrix family.

Values are cross-checked for equality across engines before any timing
is reported; a disagreement aborts the run (it would mean an engine
bug, and timings of wrong answers are worthless).
"""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import dataclass
from fractions import Fraction

from .engines import ENGINE_LAPLACE, ENGINES, LAPLACE_MAX_ORDER, det
from .matrices import ExactMatrix
from .rationals import format_rational
from .registry import REGISTRY, Identity


@dataclass
class BenchRow:
    family: str
    n: int
    engine: str
    reps: int
    median_ms: float
    value: str


class EngineDisagreement(RuntimeError):
    pass


def _default_params(identity: Identity, n: int) -> dict:
    """Deterministic parameter fill for families that need more than n."""
    params: dict = {"n": n}
    if "k" in identity.params:
        params["k"] = 3
    if "beta" in identity.params:
        params["beta"] = 0
    if "alpha" in identity.params:
        length = n + (1 if identity.id.endswith("-pair") else 0)
        start = 1 if identity.id == "binom-alpha" else 0
        params["alpha"] = tuple(range(start, start + length))
    if "x" in identity.params:
        params["x"] = tuple(Fraction(2 * i + 1, 2) for i in range(n))
        params["aterms"] = tuple(Fraction(i) for i in range(1, n))
        params["bterms"] = tuple(Fraction(3 * i + 1, 3) for i in range(1, n))
    return params


def build_family_matrix(family: str, n: int,
                        overrides: dict | None = None) -> ExactMatrix:
    identity = REGISTRY.get(family)
    if identity is None:
        raise ValueError(f"unknown identity {family!r}")
    if identity.lhs_mode != "det":
        raise ValueError(f"identity {family!r} has no matrix family to benchmark")
    params = _default_params(identity, n)
    if overrides:
        params.update(overrides)
    identity.validate(params)
    assert identity.build is not None
    return identity.build(params)


def run_bench(family: str, n_values: list[int], engines: list[str] | None = None,
              reps: int = 5, warmup: int = 1,
              overrides: dict | None = None) -> list[BenchRow]:
    engines = list(engines or ENGINES)
    for e in engines:
        if e not in ENGINES:
            raise ValueError(f"unknown engine {e!r}; choose from {ENGINES}")
    if reps < 1:
        raise ValueError("reps must be >= 1")
    rows: list[BenchRow] = []
    for n in n_values:
        matrix = build_family_matrix(family, n, overrides)
        usable = [e for e in engines
                  if not (e == ENGINE_LAPLACE and n > LAPLACE_MAX_ORDER)]
        values = {}
        timings = {}
        for e in usable:
            for _ in range(warmup):
                det(matrix, engine=e)
            samples = []
            for _ in range(reps):
                start = time.perf_counter()
                result = det(matrix, engine=e)
                samples.append((time.perf_counter() - start) * 1000.0)
            values[e] = result.value
            timings[e] = statistics.median(samples)
        distinct = {format_rational(v) for v in values.values()}
        if len(distinct) > 1:
            raise EngineDisagreement(
                f"engines disagree on {family} n={n}: "
                + ", ".join(f"{e}={format_rational(v)}" for e, v in values.items()))
        for e in usable:
            rows.append(BenchRow(family=family, n=n, engine=e, reps=reps,
                                 median_ms=timings[e],
                                 value=format_rational(values[e])))
    return rows


def bench_text(rows: list[BenchRow]) -> str:
    lines = [f"{'family':<18} {'n':>3} {'engine':<14} {'reps':>4} "
             f"{'median_ms':>12} value"]
    for r in rows:
        lines.append(f"{r.family:<18} {r.n:>3} {r.engine:<14} {r.reps:>4} "
                     f"{r.median_ms:>12.3f} {r.value}")
    return "\n".join(lines) + "\n"


def bench_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["family", "n", "engine", "reps", "median_ms", "value"])
    for r in rows:
        writer.writerow([r.family, r.n, r.engine, r.reps,
                         f"{r.median_ms:.3f}", r.value])
    return buf.getvalue()
