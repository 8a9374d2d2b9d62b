"""Exact determinant engines.

Four independent engines compute the same value by different routes, so
they can cross-check each other:

``laplace``
    Cofactor expansion.  Factorial cost, refused above order 7; kept as
    a small-order oracle nobody can get wrong.
``fraction-free``
    One-step fraction-free (Bareiss) elimination over the integers.
    Every intermediate division is exact; requires integral entries.
``rational``
    Plain Gaussian elimination over Fractions.  The pivot is the first
    nonzero entry in the column (stability is irrelevant in exact
    arithmetic, and a deterministic rule keeps benchmarks reproducible).
``condensation``
    Dodgson condensation on contiguous minors.  When an interior minor
    is zero the recurrence would divide by zero; the affected cell falls
    back to rational elimination on its submatrix and the event is
    counted, so the engine is total.

The dispatcher ``det`` routes integer matrices to fraction-free
elimination and everything else to rational elimination; callers can
force any engine.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .matrices import ExactMatrix

LAPLACE_MAX_ORDER = 7

ENGINE_LAPLACE = "laplace"
ENGINE_FRACTION_FREE = "fraction-free"
ENGINE_RATIONAL = "rational"
ENGINE_CONDENSATION = "condensation"
ENGINES = (ENGINE_LAPLACE, ENGINE_FRACTION_FREE, ENGINE_RATIONAL, ENGINE_CONDENSATION)


@dataclass
class EngineStats:
    pivots: int = 0
    swaps: int = 0
    fallbacks: int = 0


@dataclass
class DetResult:
    value: Fraction
    engine: str
    stats: EngineStats = field(default_factory=EngineStats)
    elapsed_s: float = 0.0


def det_laplace(matrix: ExactMatrix) -> Fraction:
    """Cofactor-expansion determinant; refuses orders above 7."""
    if matrix.order > LAPLACE_MAX_ORDER:
        raise ValueError(
            f"laplace engine refuses order {matrix.order} > {LAPLACE_MAX_ORDER}")
    rows = tuple(tuple(r) for r in matrix.raw_rows())
    return Fraction(_laplace(rows))


def _laplace(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    rest = rows[1:]
    for j, head in enumerate(rows[0]):
        if head == 0:
            continue
        minor = tuple(r[:j] + r[j + 1:] for r in rest)
        term = head * _laplace(minor)
        total += term if j % 2 == 0 else -term
    return total


def det_fraction_free(matrix: ExactMatrix) -> int:
    """Bareiss one-step elimination; integral entries only."""
    if not matrix.is_integer:
        raise ValueError("fraction-free engine requires integral entries")
    value, _ = _fraction_free(matrix.raw_rows())
    return value


def _fraction_free(m: list[list[int]]) -> tuple[int, EngineStats]:
    n = len(m)
    stats = EngineStats()
    sign = 1
    prev = 1
    for c in range(n - 1):
        pivot_row = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot_row is None:
            return 0, stats
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            sign = -sign
            stats.swaps += 1
        stats.pivots += 1
        pivot = m[c][c]
        for r in range(c + 1, n):
            row = m[r]
            lead = row[c]
            for j in range(c + 1, n):
                # One-step Bareiss rule: division by the previous pivot is exact.
                row[j] = (row[j] * pivot - lead * m[c][j]) // prev
            row[c] = 0
        prev = pivot
    return sign * m[n - 1][n - 1], stats


def det_rational_elim(matrix: ExactMatrix) -> Fraction:
    """Exact Gaussian elimination with first-nonzero pivoting."""
    value, _ = _rational_elim([[Fraction(x) for x in row] for row in matrix.rows()])
    return value


def _rational_elim(m: list[list[Fraction]]) -> tuple[Fraction, EngineStats]:
    n = len(m)
    stats = EngineStats()
    det = Fraction(1)
    for c in range(n):
        pivot_row = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot_row is None:
            return Fraction(0), stats
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            det = -det
            stats.swaps += 1
        stats.pivots += 1
        pivot = m[c][c]
        det *= pivot
        for r in range(c + 1, n):
            lead = m[r][c]
            if lead == 0:
                continue
            factor = lead / pivot
            row = m[r]
            base = m[c]
            for j in range(c, n):
                row[j] -= factor * base[j]
    return det, stats


def det_condensation(matrix: ExactMatrix) -> Fraction:
    """Dodgson condensation with per-minor fallback on zero interiors."""
    value, _ = _condensation(matrix)
    return value


def _condensation(matrix: ExactMatrix) -> tuple[Fraction, EngineStats]:
    n = matrix.order
    stats = EngineStats()
    rows = matrix.rows()
    # layer[s][i][j] = det of the s x s contiguous minor with top-left (i, j)
    prev2 = [[Fraction(1)] * (n + 1) for _ in range(n + 1)]          # s = 0
    prev1 = [[Fraction(x) for x in row] for row in rows]             # s = 1
    if n == 1:
        return prev1[0][0], stats
    for s in range(2, n + 1):
        size = n - s + 1
        layer = [[Fraction(0)] * size for _ in range(size)]
        for i in range(size):
            for j in range(size):
                interior = prev2[i + 1][j + 1]
                if interior == 0:
                    # Degenerate cell: condense this minor by elimination
                    # instead of perturbing entries (exactness first).
                    stats.fallbacks += 1
                    sub = [[rows[i + r][j + c] for c in range(s)] for r in range(s)]
                    layer[i][j], _ = _rational_elim(sub)
                else:
                    layer[i][j] = (prev1[i][j] * prev1[i + 1][j + 1]
                                   - prev1[i][j + 1] * prev1[i + 1][j]) / interior
        prev2, prev1 = prev1, layer
    return prev1[0][0], stats


def det(matrix: ExactMatrix, engine: str | None = None) -> DetResult:
    """Dispatching front end returning value plus engine statistics."""
    if engine is None:
        engine = ENGINE_FRACTION_FREE if matrix.is_integer else ENGINE_RATIONAL
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}")
    start = time.perf_counter()
    stats = EngineStats()
    if engine == ENGINE_LAPLACE:
        value = det_laplace(matrix)
    elif engine == ENGINE_FRACTION_FREE:
        raw, stats = _fraction_free(matrix.raw_rows() if matrix.is_integer
                                    else _reject_nonintegral(matrix))
        value = Fraction(raw)
    elif engine == ENGINE_RATIONAL:
        value, stats = _rational_elim([[Fraction(x) for x in row] for row in matrix.rows()])
    else:
        value, stats = _condensation(matrix)
    elapsed = time.perf_counter() - start
    return DetResult(value=value, engine=engine, stats=stats, elapsed_s=elapsed)


def _reject_nonintegral(matrix: ExactMatrix):
    raise ValueError("fraction-free engine requires integral entries")
