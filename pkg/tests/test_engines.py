import random
from fractions import Fraction

import pytest
from helpers import det_cofactor

from catdet.engines import (ENGINES, det, det_condensation, det_fraction_free,
                            det_laplace, det_rational_elim)
from catdet.matrices import ExactMatrix, hankel_matrix
from catdet.sequences import SequenceSpec

CATALAN = SequenceSpec("catalan")


def rand_int_matrix(rng, n, lo=-9, hi=9):
    return ExactMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def test_laplace_known_values():
    assert det_laplace(ExactMatrix([[1, 1], [1, 2]])) == 1
    assert det_laplace(ExactMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 1
    assert det_laplace(ExactMatrix([[2, 5], [5, 14]])) == 3


def test_laplace_order_guard():
    big = ExactMatrix([[1] * 8 for _ in range(8)])
    with pytest.raises(ValueError):
        det_laplace(big)
    det_laplace(ExactMatrix([[i == j for j in range(7)] for i in range(7)]))


def test_fraction_free_known_values():
    assert det_fraction_free(hankel_matrix(CATALAN, 3, 1)) == 1
    assert det_fraction_free(ExactMatrix([[2, 3], [2, 3]])) == 0


def test_fraction_free_matches_laplace_on_random_6x6():
    rng = random.Random(99)
    for _ in range(10):
        m = rand_int_matrix(rng, 6)
        assert det_fraction_free(m) == det_laplace(m)


def test_fraction_free_rejects_rationals():
    m = ExactMatrix([[Fraction(1, 2), 1], [1, 1]])
    with pytest.raises(ValueError):
        det_fraction_free(m)
    with pytest.raises(ValueError):
        det(m, engine="fraction-free")


def test_rational_elim_known_values():
    assert det_rational_elim(ExactMatrix([[1, 1], [1, 3]])) == 2
    assert det_rational_elim(ExactMatrix([[Fraction(7, 2)]])) == Fraction(7, 2)


def test_rational_elim_swap_sign():
    permutation = ExactMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert det_rational_elim(permutation) == -1


def test_condensation_known_values():
    assert det_condensation(hankel_matrix(CATALAN, 4, 2)) == 5
    assert det_condensation(ExactMatrix([[1, 1, 1], [1, 1, 1], [1, 1, 1]])) == 0


def test_condensation_fallback_counted():
    # zero central entry: the order-3 recurrence divides by it
    center_zero = ExactMatrix([[0, 1, 2], [3, 0, 4], [5, 6, 0]])
    result = det(center_zero, engine="condensation")
    assert result.value == 56
    assert result.stats.fallbacks >= 1
    # all-ones 4x4: the interior 2x2 minors vanish
    ones4 = ExactMatrix([[1] * 4 for _ in range(4)])
    result4 = det(ones4, engine="condensation")
    assert result4.value == 0
    assert result4.stats.fallbacks >= 1


def test_condensation_matches_fraction_free_on_random_7x7():
    rng = random.Random(1234)
    for _ in range(10):
        m = rand_int_matrix(rng, 7)
        assert det_condensation(m) == det_fraction_free(m)


def test_dispatch_rules():
    integral = hankel_matrix(CATALAN, 3)
    assert det(integral).engine == "fraction-free"
    rational = hankel_matrix(SequenceSpec("ternary_c"), 2)
    assert det(rational).engine == "rational"
    assert det(integral, engine="condensation").engine == "condensation"
    with pytest.raises(ValueError):
        det(integral, engine="gauss-jordan")


def test_engine_agreement_seeded():
    rng = random.Random(7)
    for n in range(1, 6):
        for _ in range(25):
            m = rand_int_matrix(rng, n)
            values = {e: det(m, engine=e).value for e in ENGINES}
            assert len(set(values.values())) == 1, (n, values)
            assert values["laplace"] == det_cofactor(m.rows())


def test_engine_agreement_on_rational_entries():
    rng = random.Random(21)
    for _ in range(10):
        m = ExactMatrix([[Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                          for _ in range(4)] for _ in range(4)])
        vals = {det(m, engine=e).value for e in ("laplace", "rational", "condensation")}
        assert len(vals) == 1
        assert vals.pop() == det_cofactor(m.rows())


def test_row_scaling_multilinearity():
    rng = random.Random(3)
    m = rand_int_matrix(rng, 5)
    lam = Fraction(3, 7)
    scaled = m.scale_row(2, lam)
    base = det(m).value
    for engine in ("laplace", "rational", "condensation"):
        assert det(scaled, engine=engine).value == lam * base
    # fraction-free needs an integral scale
    scaled_int = m.scale_row(2, -2)
    assert det(scaled_int, engine="fraction-free").value == -2 * base


def test_equal_rows_give_zero_everywhere():
    m = ExactMatrix([[3, 1, 4], [1, 5, 9], [3, 1, 4]])
    for engine in ENGINES:
        assert det(m, engine=engine).value == 0


def test_row_sum_expansion_identity():
    # det(a[i][j] + a[i+1][j]) equals the sum over s of determinants that
    # skip row s of the (n+1) x n array
    rng = random.Random(42)
    for _ in range(12):
        n = rng.randint(1, 5)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n + 1)]
        lhs = det(ExactMatrix([[a[i][j] + a[i + 1][j] for j in range(n)]
                               for i in range(n)])).value
        rhs = sum(det(ExactMatrix([[a[i + (1 if i >= s else 0)][j] for j in range(n)]
                                   for i in range(n)])).value
                  for s in range(n + 1))
        assert lhs == rhs


def test_det_result_fields():
    m = hankel_matrix(CATALAN, 4)
    result = det(m)
    assert result.value == 1
    assert result.stats.pivots >= 1
    assert result.elapsed_s >= 0.0


def test_singular_cases_across_engines():
    rng = random.Random(8)
    base = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(3)]
    rows = base + [base[1]]                     # duplicated row, shuffled in
    rows[2], rows[3] = rows[3], rows[2]
    m = ExactMatrix(rows)
    for engine in ENGINES:
        assert det(m, engine=engine).value == 0
