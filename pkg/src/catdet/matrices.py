"""Dense square matrices over exact rationals, every determinant-family
builder, and a line-oriented text file format.

Matrices are immutable after construction and carry a provenance record
(which builder produced them, with which parameters) so verification
reports can name the identity behind a failure.  Integer-valued
matrices are detected at construction time; the determinant dispatcher
uses that flag to pick the fraction-free engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .rationals import RationalLike, binomial_int, format_rational, parse_rational
from .sequences import SequenceSpec, catalan, gen_catalan, ternary


@dataclass(frozen=True)
class Provenance:
    builder: str
    params: tuple[tuple[str, str], ...] = ()

    def describe(self) -> str:
        if not self.params:
            return self.builder
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.builder}({inner})"


def _prov(builder: str, **params: object) -> Provenance:
    return Provenance(builder, tuple((k, str(v)) for k, v in params.items()))


class MatrixParseError(ValueError):
    """Raised by :meth:`ExactMatrix.read` with 1-based line/column info."""

    def __init__(self, message: str, line: int, column: int = 0):
        super().__init__(f"line {line}" + (f", column {column}" if column else "")
                         + f": {message}")
        self.line = line
        self.column = column


class ExactMatrix:
    """An n x n matrix of Fractions (n >= 1), immutable once built."""

    __slots__ = ("_rows", "order", "is_integer", "provenance")

    def __init__(self, rows: Iterable[Iterable[RationalLike]],
                 provenance: Provenance | None = None):
        frozen = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(frozen)
        if n == 0:
            raise ValueError("matrix order must be >= 1")
        if any(len(row) != n for row in frozen):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "_rows", frozen)
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "is_integer",
                           all(x.denominator == 1 for row in frozen for x in row))
        object.__setattr__(self, "provenance", provenance or Provenance("literal"))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ExactMatrix is immutable")

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows[i][j]

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def raw_rows(self) -> list[list]:
        """Mutable copy; ints when the matrix is integral (fast engine path)."""
        if self.is_integer:
            return [[x.numerator for x in row] for row in self._rows]
        return [list(row) for row in self._rows]

    def scale_row(self, i: int, factor: RationalLike) -> "ExactMatrix":
        rows = [list(row) for row in self._rows]
        rows[i] = [Fraction(factor) * x for x in rows[i]]
        return ExactMatrix(rows, provenance=_prov("scaled", base=self.provenance.describe(),
                                                  row=i, factor=format_rational(Fraction(factor))))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExactMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"ExactMatrix(order={self.order}, provenance={self.provenance.describe()!r})"

    # -- text format ----------------------------------------------------
    #
    # line 1: the order n; then n lines of n whitespace-separated entries,
    # each "p" or "p/q".  '#' starts a comment.  Chosen for diffability
    # and hand editing in tests.

    def to_text(self) -> str:
        lines = [str(self.order)]
        for row in self._rows:
            lines.append(" ".join(format_rational(x) for x in row))
        return "\n".join(lines) + "\n"

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(f"# {self.provenance.describe()}\n")
            fh.write(self.to_text())

    @classmethod
    def from_text(cls, text: str) -> "ExactMatrix":
        order: int | None = None
        rows: list[list[Fraction]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if order is None:
                try:
                    order = int(line)
                except ValueError:
                    raise MatrixParseError(f"expected matrix order, got {line!r}", lineno)
                if order < 1:
                    raise MatrixParseError(f"order must be >= 1, got {order}", lineno)
                continue
            if len(rows) == order:
                raise MatrixParseError("trailing content after last row", lineno)
            tokens = line.split()
            if len(tokens) != order:
                raise MatrixParseError(
                    f"expected {order} entries, got {len(tokens)}", lineno,
                    column=len(tokens) + 1)
            row = []
            for col, tok in enumerate(tokens, start=1):
                try:
                    row.append(parse_rational(tok))
                except (ValueError, ZeroDivisionError) as exc:
                    raise MatrixParseError(str(exc), lineno, col) from exc
            rows.append(row)
        if order is None:
            raise MatrixParseError("empty matrix file", 1)
        if len(rows) != order:
            raise MatrixParseError(
                f"expected {order} rows, got {len(rows)}", len(text.splitlines()) or 1)
        return cls(rows, provenance=Provenance("file"))

    @classmethod
    def read(cls, path) -> "ExactMatrix":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_text(fh.read())


# -- builders -----------------------------------------------------------


def hankel_matrix(spec: SequenceSpec, n: int, offset: int = 0) -> ExactMatrix:
    """entry(i, j) = s(i + j + offset) for the given sequence."""
    if n < 1:
        raise ValueError(f"matrix order must be >= 1 (got {n})")
    if offset < 0:
        raise ValueError(f"offset must be >= 0 (got {offset})")
    return ExactMatrix(
        [[spec.value(i + j + offset) for j in range(n)] for i in range(n)],
        provenance=_prov("hankel", seq=spec.label(), n=n, offset=offset))


def catalan_alpha_matrix(alphas: Sequence[int]) -> ExactMatrix:
    """entry(i, j) = catalan(alphas[i] + j)."""
    n = len(alphas)
    _check_alphas(alphas, minimum=0)
    return ExactMatrix(
        [[catalan(a + j) for j in range(n)] for a in alphas],
        provenance=_prov("catalan_alpha", alphas=_fmt_vec(alphas)))


def catalan_alpha_pair_matrix(alphas: Sequence[int]) -> ExactMatrix:
    """entry(i, j) = catalan(alphas[i]+j) + catalan(alphas[i+1]+j).

    ``alphas`` has length n + 1 for an order-n matrix.
    """
    if len(alphas) < 2:
        raise ValueError("need at least 2 alpha values (length n + 1)")
    _check_alphas(alphas, minimum=0)
    n = len(alphas) - 1
    return ExactMatrix(
        [[catalan(alphas[i] + j) + catalan(alphas[i + 1] + j) for j in range(n)]
         for i in range(n)],
        provenance=_prov("catalan_alpha_pair", alphas=_fmt_vec(alphas)))


def gen_catalan_alpha_matrix(alphas: Sequence[int], k: int, beta: int) -> ExactMatrix:
    """entry(i, j) = gen_catalan((k-1) alphas[i] + j + beta, k)."""
    _check_alphas(alphas, minimum=0)
    _check_beta(k, beta)
    n = len(alphas)
    return ExactMatrix(
        [[gen_catalan((k - 1) * a + j + beta, k) for j in range(n)] for a in alphas],
        provenance=_prov("gen_catalan_alpha", alphas=_fmt_vec(alphas), k=k, beta=beta))


def gen_catalan_alpha_pair_matrix(alphas: Sequence[int], k: int, beta: int) -> ExactMatrix:
    """entry(i, j) = C_{(k-1)a_i+j+b} + C_{(k-1)a_{i+1}+j+b} over gen_catalan(., k)."""
    if len(alphas) < 2:
        raise ValueError("need at least 2 alpha values (length n + 1)")
    _check_alphas(alphas, minimum=0)
    _check_beta(k, beta)
    n = len(alphas) - 1
    return ExactMatrix(
        [[gen_catalan((k - 1) * alphas[i] + j + beta, k)
          + gen_catalan((k - 1) * alphas[i + 1] + j + beta, k)
          for j in range(n)] for i in range(n)],
        provenance=_prov("gen_catalan_alpha_pair", alphas=_fmt_vec(alphas), k=k, beta=beta))


def gen_catalan_succ_matrix(k: int, beta: int, n: int) -> ExactMatrix:
    """entry(i, j) = gen_catalan((k-1)i+j+beta, k) + gen_catalan((k-1)i+j+beta+1, k)."""
    _check_beta(k, beta)
    if n < 1:
        raise ValueError(f"matrix order must be >= 1 (got {n})")
    return ExactMatrix(
        [[gen_catalan((k - 1) * i + j + beta, k) + gen_catalan((k - 1) * i + j + beta + 1, k)
          for j in range(n)] for i in range(n)],
        provenance=_prov("gen_catalan_succ", k=k, beta=beta, n=n))


def binomial_alpha_matrix(alphas: Sequence[int], k: int, beta: int) -> ExactMatrix:
    """entry(i, j) = C(k alphas[i] + j + beta, alphas[i] - 1); needs alphas[i] >= 1.

    beta is any non-negative integer here (no upper bound)."""
    _check_alphas(alphas, minimum=1)
    if k < 2:
        raise ValueError(f"k must be >= 2 (got {k})")
    if beta < 0:
        raise ValueError(f"beta must be >= 0 (got {beta})")
    n = len(alphas)
    return ExactMatrix(
        [[binomial_int(k * a + j + beta, a - 1) for j in range(n)] for a in alphas],
        provenance=_prov("binomial_alpha", alphas=_fmt_vec(alphas), k=k, beta=beta))


# The ten ternary Hankel variants.  Entry formulas take m = i + j; the
# "*-mod" variants are Hankel matrices of the head-tweaked sequences.
_TERNARY_ENTRY: dict[str, Callable[[int], Fraction]] = {
    "a":      lambda m: Fraction(binomial_int(3 * m + 1, m), 3 * m + 1),
    "a1":     lambda m: Fraction(binomial_int(3 * m + 4, m + 1), 3 * m + 4),
    "b":      lambda m: Fraction(binomial_int(3 * m + 2, m + 1), 3 * m + 2),
    "b1":     lambda m: Fraction(binomial_int(3 * m + 5, m + 2), 3 * m + 5),
    "c":      lambda m: Fraction(2 * binomial_int(3 * m + 1, m + 1), 3 * m + 1),
    "c1":     lambda m: Fraction(2 * binomial_int(3 * m + 4, m + 2), 3 * m + 4),
    "a-mod":  lambda m: ternary("a", m),
    "b-mod":  lambda m: ternary("b", m),
    "b1-alt": lambda m: Fraction(2 * binomial_int(3 * m + 5, m + 1), 3 * m + 5),
    "c-mod":  lambda m: ternary("c", m),
}

TERNARY_MATRIX_VARIANTS = tuple(_TERNARY_ENTRY)


def ternary_matrix(variant: str, n: int) -> ExactMatrix:
    """Hankel matrix of one of the ten ternary variants (see formulas)."""
    if variant not in _TERNARY_ENTRY:
        raise ValueError(f"unknown ternary variant {variant!r}; "
                         f"choose from {TERNARY_MATRIX_VARIANTS}")
    if n < 1:
        raise ValueError(f"matrix order must be >= 1 (got {n})")
    entry = _TERNARY_ENTRY[variant]
    return ExactMatrix(
        [[entry(i + j) for j in range(n)] for i in range(n)],
        provenance=_prov("ternary", variant=variant, n=n))


def linear_factor_matrix(xs: Sequence[RationalLike],
                         a_terms: Sequence[RationalLike],
                         b_terms: Sequence[RationalLike]) -> ExactMatrix:
    """entry(i, j) = (X_i+A_{n-1})...(X_i+A_{j+1}) * (X_i+B_j)...(X_i+B_1).

    ``a_terms`` and ``b_terms`` hold A_1..A_{n-1} and B_1..B_{n-1}
    (length n - 1; both products are empty for n = 1).
    """
    n = len(xs)
    if n < 1:
        raise ValueError("need at least one X value")
    if len(a_terms) != n - 1 or len(b_terms) != n - 1:
        raise ValueError(f"a_terms/b_terms must have length n-1 = {n - 1}")
    xs = [Fraction(x) for x in xs]
    a = [None] + [Fraction(v) for v in a_terms]   # 1-based
    b = [None] + [Fraction(v) for v in b_terms]
    rows = []
    for x in xs:
        row = []
        for j in range(n):
            v = Fraction(1)
            for t in range(j + 1, n):
                v *= x + a[t]
            for t in range(1, j + 1):
                v *= x + b[t]
            row.append(v)
        rows.append(row)
    return ExactMatrix(rows, provenance=_prov(
        "linear_factor", x=_fmt_vec_q(xs), a=_fmt_vec_q(a[1:]), b=_fmt_vec_q(b[1:])))


def _check_alphas(alphas: Sequence[int], minimum: int) -> None:
    if len(alphas) == 0:
        raise ValueError("alpha vector must be non-empty")
    for a in alphas:
        if a < minimum:
            raise ValueError(f"alpha values must be >= {minimum} (got {a})")


def _check_beta(k: int, beta: int) -> None:
    if k < 2:
        raise ValueError(f"k must be >= 2 (got {k})")
    if not 0 <= beta <= k - 1:
        raise ValueError(f"beta must satisfy 0 <= beta <= k-1 = {k - 1} (got {beta})")


def _fmt_vec(values: Iterable[int]) -> str:
    return ",".join(str(v) for v in values)


def _fmt_vec_q(values: Iterable[Fraction]) -> str:
    return ",".join(format_rational(v) for v in values)
