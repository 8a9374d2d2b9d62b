"""Exact arithmetic primitives.

Integers are plain Python ``int`` (arbitrary precision), rationals are
``fractions.Fraction`` (always normalized, positive denominator).  No
floating point enters any computation in this package; every helper
here is pure, deterministic, and safe to share across workers.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb as _comb, factorial as _factorial

RationalLike = Fraction | int

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def factorial(n: int) -> int:
    """n! with the empty product convention 0! = 1."""
    if n < 0:
        raise ValueError(f"factorial is undefined for negative n (got {n})")
    return _factorial(n)


def binomial_int(n: int, k: int) -> int:
    """C(n, k) for n >= 0, returning 0 whenever k < 0 or k > n.

    The out-of-range-is-zero convention is load bearing: the binomial
    sums in :mod:`catdet.formulas` range over indices where the
    binomial silently vanishes.
    """
    if n < 0:
        raise ValueError(f"binomial_int needs n >= 0 (got {n})")
    if k < 0 or k > n:
        return 0
    return _comb(n, k)


def binomial_gen(x: RationalLike, k: int) -> Fraction:
    """Generalised binomial x(x-1)...(x-k+1) / k! for rational x."""
    if k < 0:
        raise ValueError(f"binomial_gen needs k >= 0 (got {k})")
    x = Fraction(x)
    num = Fraction(1)
    for t in range(k):
        num *= x - t
    return num / _factorial(k)


def pochhammer(a: RationalLike, i: int) -> Fraction:
    """Rising factorial (a)_i = a(a+1)...(a+i-1), with (a)_0 = 1."""
    if i < 0:
        raise ValueError(f"pochhammer needs i >= 0 (got {i})")
    a = Fraction(a)
    out = Fraction(1)
    for t in range(i):
        out *= a + t
    return out


def as_integer(q: RationalLike) -> int:
    """Collapse an integer-valued rational to ``int``; reject anything else."""
    if isinstance(q, int):
        return q
    if q.denominator != 1:
        raise ValueError(f"{q} is not an integer")
    return q.numerator


def exact_div(num: int, den: int) -> int:
    """Integer division that must be exact (guards formula integrality)."""
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def parse_rational(text: str) -> Fraction:
    """Parse the wire form "p" or "p/q" (q a positive integer literal)."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: RationalLike) -> str:
    """Render as "p" when integral, else "p/q"."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
