"""The number sequences whose determinants this package evaluates.

Two conventions differ from what some references use and are fixed on
purpose:

* ``fibonacci`` starts F_0 = F_1 = 1.
* ``gen_catalan(n, k)`` requires k >= 2.  For k = 1 the defining
  expression needs ``n // (k - 1)``, which has no meaning; rather than
  invent one we reject it.

All functions are memoized; the caches are invisible (pure-function
semantics) and thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rationals import binomial_int, exact_div


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """C(2n, n) / (n + 1); counts monotone paths (0,0) -> (n,n) staying
    weakly below the diagonal x = y."""
    if n < 0:
        raise ValueError(f"catalan is undefined for negative n (got {n})")
    return exact_div(binomial_int(2 * n, n), n + 1)


@lru_cache(maxsize=None)
def gen_catalan(n: int, k: int) -> int:
    """Generalised Catalan number: counts monotone paths from the origin
    to (n, n // (k - 1)) staying weakly below the line x = (k-1) y.

    Closed form: (n - (k-1)f + 1) / (n + f + 1) * C(n + f + 1, n + 1)
    with f = n // (k - 1).  For k = 2 this is ``catalan(n)``.
    """
    if k < 2:
        raise ValueError(f"gen_catalan needs k >= 2 (got {k})")
    if n < 0:
        raise ValueError(f"gen_catalan is undefined for negative n (got {n})")
    f = n // (k - 1)
    return exact_div((n - (k - 1) * f + 1) * binomial_int(n + f + 1, n + 1),
                     n + f + 1)


@lru_cache(maxsize=None)
def fibonacci(m: int) -> int:
    """F_0 = F_1 = 1, F_m = F_{m-1} + F_{m-2}."""
    if m < 0:
        raise ValueError(f"fibonacci is undefined for negative m (got {m})")
    a, b = 1, 1
    for _ in range(m):
        a, b = b, a + b
    return a


# Three Catalan-like sequences built from C(3m + r, .) binomials whose
# leading term is replaced by a hand-picked constant (-2, 10 and 7/2).
# Exactly these head values make the Hankel determinants of the
# sequences come out as clean Pochhammer products (see formulas.py).
TERNARY_VARIANTS = ("a", "b", "c")


@lru_cache(maxsize=None)
def ternary(variant: str, m: int) -> Fraction:
    """Term m of the head-tweaked ternary sequence ``variant``.

    a: -2, then C(3m+1, m) / (3m+1)        -> -2, 1, 3, 12, 55, ...
    b: 10, then 2 C(3m+2, m) / (3m+2)      -> 10, 2, 7, 30, 143, ...
    c: 7/2, then 2 C(3m+1, m+1) / (3m+1)   -> 7/2, 3, 10, 42, 198, ...
    """
    if m < 0:
        raise ValueError(f"ternary is undefined for negative m (got {m})")
    if variant == "a":
        if m == 0:
            return Fraction(-2)
        return Fraction(binomial_int(3 * m + 1, m), 3 * m + 1)
    if variant == "b":
        if m == 0:
            return Fraction(10)
        return Fraction(2 * binomial_int(3 * m + 2, m), 3 * m + 2)
    if variant == "c":
        if m == 0:
            return Fraction(7, 2)
        return Fraction(2 * binomial_int(3 * m + 1, m + 1), 3 * m + 1)
    raise ValueError(f"unknown ternary variant {variant!r}")


SEQUENCE_KINDS = ("catalan", "gen_catalan", "fibonacci",
                  "ternary_a", "ternary_b", "ternary_c")


@dataclass(frozen=True)
class SequenceSpec:
    """A named sequence usable as Hankel-matrix input.

    ``kind`` is one of SEQUENCE_KINDS; ``k`` is required (and only
    meaningful) for gen_catalan.
    """

    kind: str
    k: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in SEQUENCE_KINDS:
            raise ValueError(f"unknown sequence kind {self.kind!r}")
        if self.kind == "gen_catalan":
            if self.k is None or self.k < 2:
                raise ValueError("gen_catalan sequence needs k >= 2")
        elif self.k is not None:
            raise ValueError(f"sequence {self.kind!r} takes no parameter k")

    def value(self, m: int) -> Fraction:
        if self.kind == "catalan":
            return Fraction(catalan(m))
        if self.kind == "gen_catalan":
            assert self.k is not None
            return Fraction(gen_catalan(m, self.k))
        if self.kind == "fibonacci":
            return Fraction(fibonacci(m))
        return ternary(self.kind[-1], m)

    def label(self) -> str:
        if self.kind == "gen_catalan":
            return f"gen_catalan[k={self.k}]"
        return self.kind

    @classmethod
    def parse(cls, text: str) -> "SequenceSpec":
        """Parse "catalan", "gen_catalan:3", "ternary_b", ..."""
        if ":" in text:
            kind, _, arg = text.partition(":")
            return cls(kind, int(arg))
        return cls(text)
