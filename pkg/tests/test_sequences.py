from fractions import Fraction

import pytest
from helpers import brute_monotone_count

from catdet.rationals import binomial_gen, binomial_int
from catdet.sequences import (SequenceSpec, catalan, fibonacci, gen_catalan,
                              ternary)


def test_catalan_small_values_against_path_oracle():
    # catalan(m) counts monotone paths (0,0) -> (m,m) never above x = y
    for m in range(0, 11):
        assert catalan(m) == brute_monotone_count((0, 0), (m, m), mu=1)
    assert catalan(0) == 1
    assert catalan(3) == 5
    assert catalan(4) == 14


def test_catalan_negative_rejected():
    with pytest.raises(ValueError):
        catalan(-1)


def test_catalan_half_binomial_identity():
    for m in range(0, 21):
        assert catalan(m) == (-1) ** m * 2 ** (2 * m + 1) * binomial_gen(Fraction(1, 2), m + 1)


def test_catalan_odd_central_identity():
    for m in range(0, 21):
        assert catalan(m) * (2 * m + 1) == binomial_int(2 * m + 1, m)


def test_gen_catalan_k2_is_catalan():
    for n in range(0, 13):
        assert gen_catalan(n, 2) == catalan(n)


def test_gen_catalan_zero_is_one():
    for k in range(2, 8):
        assert gen_catalan(0, k) == 1


def test_gen_catalan_against_path_oracle():
    # counts monotone paths (0,0) -> (n, n // (k-1)) never above x = (k-1) y
    for k in range(2, 6):
        for n in range(0, 13):
            assert gen_catalan(n, k) == brute_monotone_count(
                (0, 0), (n, n // (k - 1)), mu=k - 1)
    assert gen_catalan(4, 3) == 3


def test_gen_catalan_domain_errors():
    with pytest.raises(ValueError):
        gen_catalan(3, 1)
    with pytest.raises(ValueError):
        gen_catalan(-1, 2)


def test_fibonacci_convention():
    assert fibonacci(0) == 1
    assert fibonacci(1) == 1
    # recurrence unrolled: 1, 1, 2, 3, 5
    assert fibonacci(4) == 5


def test_fibonacci_binomial_sum():
    for m in range(0, 21):
        assert fibonacci(m) == sum(binomial_int(m - s, s) for s in range(m + 1))


def test_fibonacci_negative_rejected():
    with pytest.raises(ValueError):
        fibonacci(-3)


def test_ternary_heads():
    assert ternary("a", 0) == -2
    assert ternary("b", 0) == 10
    assert ternary("c", 0) == Fraction(7, 2)


def test_ternary_tails():
    assert ternary("a", 1) == Fraction(binomial_int(4, 1), 4) == 1
    assert ternary("a", 2) == 3
    assert ternary("b", 1) == 2
    assert ternary("b", 2) == 7
    assert ternary("c", 1) == 3
    assert ternary("c", 2) == 10


def test_ternary_returns_fraction():
    # uniform Rational return: the c head is a genuine half-integer
    for v in ("a", "b", "c"):
        assert isinstance(ternary(v, 3), Fraction)


def test_ternary_errors():
    with pytest.raises(ValueError):
        ternary("d", 0)
    with pytest.raises(ValueError):
        ternary("a", -1)


def test_memoization_is_invisible():
    assert catalan(9) == catalan(9)
    assert gen_catalan(7, 3) == gen_catalan(7, 3)
    assert ternary("b", 5) == ternary("b", 5)


def test_sequence_spec_values():
    assert SequenceSpec("catalan").value(3) == 5
    assert SequenceSpec("gen_catalan", 3).value(4) == 3
    assert SequenceSpec("fibonacci").value(4) == 5
    assert SequenceSpec("ternary_c").value(0) == Fraction(7, 2)


def test_sequence_spec_validation():
    with pytest.raises(ValueError):
        SequenceSpec("gen_catalan")          # k missing
    with pytest.raises(ValueError):
        SequenceSpec("gen_catalan", 1)       # k too small
    with pytest.raises(ValueError):
        SequenceSpec("catalan", 3)           # stray k
    with pytest.raises(ValueError):
        SequenceSpec("nope")


def test_sequence_spec_parse_and_label():
    spec = SequenceSpec.parse("gen_catalan:4")
    assert spec.k == 4
    assert spec.label() == "gen_catalan[k=4]"
    assert SequenceSpec.parse("ternary_a").label() == "ternary_a"
