"""Closed-form right-hand sides for every identity in the registry.

Each ``rhs_*`` function is the exact product/sum evaluation that the
matching matrix builder's determinant must equal.  Everything is
computed in Fractions; results that are provably integers are returned
as ``int``.

The pair-sum evaluators divide by differences of alpha values, so they
reject repeated alphas with :class:`RhsUndefinedError` instead of
attempting a limit; the determinant itself is still perfectly
computable at such points, and the harness reports them as
"rhs-undefined" rather than as failures.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .rationals import RationalLike, binomial_int, factorial, pochhammer


class RhsUndefinedError(ValueError):
    """The closed form has a vanishing denominator at this parameter point."""


def _vandermonde(values: Sequence[int]) -> int:
    v = 1
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            v *= values[j] - values[i]
    return v


def rhs_catalan_alpha(alphas: Sequence[int]) -> Fraction:
    """prod_{i<j}(a_j - a_i) * prod_i (i+n)! (2a_i)! / ((2i)! a_i! (a_i+n)!)."""
    n = len(alphas)
    v = Fraction(_vandermonde(alphas))
    for i, a in enumerate(alphas):
        v *= Fraction(factorial(i + n) * factorial(2 * a),
                      factorial(2 * i) * factorial(a) * factorial(a + n))
    return v


def rhs_catalan_alpha_pair(alphas: Sequence[int]) -> Fraction:
    """Pair-sum closed form; ``alphas`` has length n + 1, pairwise distinct."""
    _require_distinct(alphas)
    n = len(alphas) - 1
    v = Fraction(_vandermonde(alphas))
    for i in range(n):
        v *= Fraction(factorial(i + n), factorial(2 * i))
    for a in alphas:
        v *= Fraction(factorial(2 * a), factorial(a) * factorial(a + n))
    total = Fraction(0)
    for s, a_s in enumerate(alphas):
        den = 1
        for j in range(s):
            den *= a_s - alphas[j]
        for j in range(s + 1, n + 1):
            den *= alphas[j] - a_s
        total += Fraction(factorial(a_s) * factorial(a_s + n),
                          factorial(2 * a_s) * den)
    return v * total


def _check_kbeta(k: int, beta: int) -> None:
    if k < 2:
        raise ValueError(f"k must be >= 2 (got {k})")
    if not 0 <= beta <= k - 1:
        raise ValueError(f"beta must satisfy 0 <= beta <= k-1 = {k - 1} (got {beta})")


def rhs_gen_catalan_alpha(alphas: Sequence[int], k: int, beta: int) -> Fraction:
    _check_kbeta(k, beta)
    n = len(alphas)
    v = Fraction(_vandermonde(alphas))
    for i, a in enumerate(alphas):
        v *= Fraction(factorial((k - 1) * i + beta + n) * factorial(k * a + beta),
                      factorial(k * i + beta) * factorial(a)
                      * factorial((k - 1) * a + beta + n))
    return v


def rhs_gen_catalan_alpha_pair(alphas: Sequence[int], k: int, beta: int) -> Fraction:
    _check_kbeta(k, beta)
    _require_distinct(alphas)
    n = len(alphas) - 1
    v = Fraction(_vandermonde(alphas))
    for i in range(n):
        v *= Fraction(factorial((k - 1) * i + beta + n), factorial(k * i + beta))
    for a in alphas:
        v *= Fraction(factorial(k * a + beta),
                      factorial(a) * factorial((k - 1) * a + beta + n))
    total = Fraction(0)
    for s, a_s in enumerate(alphas):
        den = 1
        for j in range(s):
            den *= a_s - alphas[j]
        for j in range(s + 1, n + 1):
            den *= alphas[j] - a_s
        total += Fraction(factorial(a_s) * factorial((k - 1) * a_s + beta + n),
                          factorial(k * a_s + beta) * den)
    return v * total


def rhs_binomial_alpha(alphas: Sequence[int], k: int, beta: int) -> Fraction:
    """beta!/(beta+n)! times the product form; needs alphas[i] >= 1.

    Unlike the gen-Catalan forms, any beta >= 0 is valid here (the
    identity is not tied to the slanted-line path model).
    """
    if any(a < 1 for a in alphas):
        raise ValueError("alpha values must be >= 1")
    if k < 2:
        raise ValueError(f"k must be >= 2 (got {k})")
    if beta < 0:
        raise ValueError(f"beta must be >= 0 (got {beta})")
    n = len(alphas)
    v = Fraction(factorial(beta), factorial(beta + n))
    v *= _vandermonde(alphas)
    for i, a in enumerate(alphas):
        v *= Fraction(factorial((k - 1) * i + beta + n) * factorial(k * a + beta),
                      factorial(k * i + beta) * factorial(a - 1)
                      * factorial((k - 1) * a + beta + n))
    return v


def rhs_rowpair_sum(k: int, n: int) -> int:
    """sum_{s=0..n} C((k-1)s + n, n - s)."""
    return sum(binomial_int((k - 1) * s + n, n - s) for s in range(n + 1))


def rhs_gen_catalan_succ(k: int, beta: int, n: int) -> int:
    """sum_{s=0..n} C(floor((s+beta)/(k-1)) + n, n - s)."""
    if not 0 <= beta <= k - 1:
        raise ValueError(f"beta must satisfy 0 <= beta <= k-1 = {k - 1} (got {beta})")
    return sum(binomial_int((s + beta) // (k - 1) + n, n - s) for s in range(n + 1))


def rhs_path_family(a: int, b: int, c: int, alphas: Sequence[int]) -> Fraction:
    """Non-intersecting family count for paths (a, b-i) -> (alphas[i], c).

    Preconditions: a <= alphas[0] <= ... <= alphas[n-1] and b <= c.
    """
    if b > c:
        raise ValueError(f"need b <= c (got b={b}, c={c})")
    if any(x < a for x in alphas):
        raise ValueError("alpha values must be >= a")
    if any(alphas[i] > alphas[i + 1] for i in range(len(alphas) - 1)):
        raise ValueError("alpha values must be weakly increasing")
    v = Fraction(_vandermonde(alphas))
    for i, al in enumerate(alphas):
        v *= Fraction(factorial(al + c - a - b),
                      factorial(al - a) * factorial(c - b + i))
    return v


def rhs_linear_factor(xs: Sequence[RationalLike],
                      a_terms: Sequence[RationalLike],
                      b_terms: Sequence[RationalLike]) -> Fraction:
    """prod_{i<j}(X_i - X_j) * prod_{1<=i<=j<=n-1}(B_i - A_j)."""
    n = len(xs)
    if len(a_terms) != n - 1 or len(b_terms) != n - 1:
        raise ValueError(f"a_terms/b_terms must have length n-1 = {n - 1}")
    xs = [Fraction(x) for x in xs]
    a = [Fraction(x) for x in a_terms]
    b = [Fraction(x) for x in b_terms]
    v = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            v *= xs[i] - xs[j]
    for i in range(n - 1):           # B_{i+1} vs A_{j+1}, i <= j
        for j in range(i, n - 1):
            v *= b[i] - a[j]
    return v


# -- ternary Hankel products ---------------------------------------------
#
# Each variant's determinant is a product of factors
#     const * (p1)_i (p2)_i (p3)_i (p4)_i / ((q1)_{2i} (q2)_{2i}) * (27/4)^{2i}
# taken over a contiguous index range.  Two Pochhammer-parameter sets
# cover the natural sequences; the head-tweaked ones get their own.

_FACTORS_LOW = ((Fraction(2, 3), Fraction(1, 6), Fraction(4, 3), Fraction(5, 6)),
                (Fraction(1, 2), Fraction(3, 2)))
_FACTORS_HIGH = ((Fraction(4, 3), Fraction(5, 6), Fraction(5, 3), Fraction(7, 6)),
                 (Fraction(3, 2), Fraction(5, 2)))
_FACTORS_A_MOD = ((Fraction(1, 3), Fraction(-1, 6), Fraction(5, 3), Fraction(7, 6)),
                  (Fraction(1, 2), Fraction(3, 2)))
_FACTORS_B_MOD = ((Fraction(2, 3), Fraction(1, 6), Fraction(7, 3), Fraction(11, 6)),
                  (Fraction(3, 2), Fraction(5, 2)))

# variant -> (factors, constant, first index, last index as f(n)).
# The "b1-alt" and "c-mod" rows are pinned against exact determinant
# values for n <= 10 (see tests); note that c-mod's product starts at
# i = 1 -- its tweaked head plays the role of the i = 0 factor.
_TERNARY_RHS: dict[str, tuple[tuple, Fraction, int, int]] = {
    "a":      (_FACTORS_LOW, Fraction(1), 0, -1),
    "a1":     (_FACTORS_HIGH, Fraction(1), 0, -1),
    "b":      (_FACTORS_HIGH, Fraction(1), 0, -1),
    "b1":     (_FACTORS_LOW, Fraction(1), 0, 0),
    "c":      (_FACTORS_LOW, Fraction(1), 0, 0),
    "c1":     (_FACTORS_HIGH, Fraction(1), 0, 0),
    "a-mod":  (_FACTORS_A_MOD, Fraction(-2), 0, -1),
    "b-mod":  (_FACTORS_B_MOD, Fraction(10), 0, -1),
    "b1-alt": (_FACTORS_LOW, Fraction(1), 0, 0),
    "c-mod":  (_FACTORS_A_MOD, Fraction(-2), 1, 0),
}

TERNARY_RHS_VARIANTS = tuple(_TERNARY_RHS)


def rhs_ternary(variant: str, n: int) -> Fraction:
    """Pochhammer-product value of the ternary variant's determinant."""
    if variant not in _TERNARY_RHS:
        raise ValueError(f"unknown ternary variant {variant!r}; "
                         f"choose from {TERNARY_RHS_VARIANTS}")
    if n < 1:
        raise ValueError(f"n must be >= 1 (got {n})")
    (nums, dens), const, first, last_off = _TERNARY_RHS[variant]
    total = Fraction(1)
    for i in range(first, n + last_off + 1):
        term = const
        for p in nums:
            term *= pochhammer(p, i)
        for q in dens:
            term /= pochhammer(q, 2 * i)
        term *= Fraction(27, 4) ** (2 * i)
        total *= term
    return total


def _require_distinct(alphas: Sequence[int]) -> None:
    if len(set(alphas)) != len(alphas):
        raise RhsUndefinedError(
            f"repeated alpha values make the closed form singular: {tuple(alphas)}")
