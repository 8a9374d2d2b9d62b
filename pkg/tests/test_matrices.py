from fractions import Fraction

import pytest

from catdet.matrices import (ExactMatrix, MatrixParseError, binomial_alpha_matrix,
                             catalan_alpha_matrix, catalan_alpha_pair_matrix,
                             gen_catalan_alpha_matrix, gen_catalan_alpha_pair_matrix,
                             gen_catalan_succ_matrix, hankel_matrix,
                             linear_factor_matrix, ternary_matrix)
from catdet.sequences import SequenceSpec

CATALAN = SequenceSpec("catalan")


def entries(m):
    return [[x for x in row] for row in m.rows()]


def test_exact_matrix_validation():
    with pytest.raises(ValueError):
        ExactMatrix([])
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2]])


def test_exact_matrix_immutable():
    m = ExactMatrix([[1]])
    with pytest.raises(AttributeError):
        m.order = 2


def test_integer_flag():
    assert ExactMatrix([[1, 2], [3, 4]]).is_integer
    assert not ExactMatrix([[Fraction(1, 2), 1], [1, 1]]).is_integer


def test_hankel_catalan():
    assert entries(hankel_matrix(CATALAN, 2, 0)) == [[1, 1], [1, 2]]
    assert entries(hankel_matrix(CATALAN, 1, 2)) == [[2]]


def test_hankel_ternary_c_head():
    m = hankel_matrix(SequenceSpec("ternary_c"), 1, 0)
    assert entries(m) == [[Fraction(7, 2)]]
    assert not m.is_integer


def test_hankel_validation():
    with pytest.raises(ValueError):
        hankel_matrix(CATALAN, 0)
    with pytest.raises(ValueError):
        hankel_matrix(CATALAN, 2, -1)


def test_catalan_alpha_examples():
    assert entries(catalan_alpha_matrix((0, 1))) == [[1, 1], [1, 2]]
    assert entries(catalan_alpha_matrix((2, 3))) == [[2, 5], [5, 14]]
    m = catalan_alpha_matrix((0, 0))
    assert m.rows()[0] == m.rows()[1]


def test_catalan_alpha_reduces_to_hankel():
    for n in range(1, 9):
        for offset in range(0, 5):
            alphas = tuple(i + offset for i in range(n))
            assert catalan_alpha_matrix(alphas) == hankel_matrix(CATALAN, n, offset)


def test_catalan_alpha_pair_examples():
    assert entries(catalan_alpha_pair_matrix((0, 1, 2))) == [[2, 3], [3, 7]]
    assert entries(catalan_alpha_pair_matrix((0, 1))) == [[2]]
    assert entries(catalan_alpha_pair_matrix((0, 2, 4))) == [[3, 6], [16, 47]]


def test_catalan_alpha_pair_needs_two_values():
    with pytest.raises(ValueError):
        catalan_alpha_pair_matrix((3,))


def test_gen_catalan_alpha_examples():
    for n in range(1, 7):
        assert gen_catalan_alpha_matrix(tuple(range(n)), 2, 0) == hankel_matrix(CATALAN, n)
    assert entries(gen_catalan_alpha_matrix((0,), 3, 0)) == [[1]]
    assert entries(gen_catalan_alpha_matrix((0, 1), 3, 1)) == [[1, 1], [2, 3]]


def test_gen_catalan_alpha_beta_range():
    with pytest.raises(ValueError):
        gen_catalan_alpha_matrix((0, 1), 3, 3)
    with pytest.raises(ValueError):
        gen_catalan_alpha_matrix((0, 1), 3, -1)
    gen_catalan_alpha_matrix((0, 1), 3, 2)      # beta = k-1 is the boundary


def test_gen_catalan_alpha_pair_examples():
    for n in range(1, 7):
        assert (gen_catalan_alpha_pair_matrix(tuple(range(n + 1)), 2, 0)
                == catalan_alpha_pair_matrix(tuple(range(n + 1))))
    assert entries(gen_catalan_alpha_pair_matrix((0, 1), 3, 0)) == [[2]]
    # builder accepts degenerate repeats; only the closed form rejects them
    gen_catalan_alpha_pair_matrix((1, 1, 2), 3, 0)


def test_gen_catalan_succ_examples():
    assert entries(gen_catalan_succ_matrix(2, 0, 2)) == [[2, 3], [3, 7]]
    assert entries(gen_catalan_succ_matrix(3, 0, 1)) == [[2]]
    gen_catalan_succ_matrix(3, 2, 2)            # beta = k-1 accepted
    with pytest.raises(ValueError):
        gen_catalan_succ_matrix(3, 3, 2)


def test_gen_catalan_succ_equals_pair_at_k2():
    for n in range(1, 9):
        assert (gen_catalan_succ_matrix(2, 0, n)
                == catalan_alpha_pair_matrix(tuple(range(n + 1))))


def test_binomial_alpha_examples():
    m = binomial_alpha_matrix((1, 5), 3, 2)
    assert list(m.rows()[0]) == [1, 1]          # alpha_i = 1 row is all ones
    assert entries(binomial_alpha_matrix((1, 2), 3, 0)) == [[1, 1], [6, 7]]
    with pytest.raises(ValueError):
        binomial_alpha_matrix((0, 2), 3, 0)     # alpha entries must be >= 1
    binomial_alpha_matrix((1, 2), 3, 5)         # beta beyond k-1 is fine here


def test_ternary_matrix_examples():
    assert entries(ternary_matrix("a", 2)) == [[1, 1], [1, 3]]
    assert entries(ternary_matrix("a-mod", 1)) == [[-2]]
    assert entries(ternary_matrix("c-mod", 1)) == [[Fraction(7, 2)]]
    with pytest.raises(ValueError):
        ternary_matrix("z", 2)
    with pytest.raises(ValueError):
        ternary_matrix("a", 0)


def test_ternary_b1_alt_same_entries_as_b1():
    # two binomial presentations of one sequence
    for n in range(1, 6):
        assert ternary_matrix("b1-alt", n) == ternary_matrix("b1", n)


def test_linear_factor_matrix():
    assert entries(linear_factor_matrix((5,), (), ())) == [[1]]
    m = linear_factor_matrix((0, 1), (2,), (3,))
    assert entries(m) == [[2, 3], [3, 4]]
    with pytest.raises(ValueError):
        linear_factor_matrix((0, 1), (), (3,))


def test_builders_are_deterministic():
    a = ternary_matrix("c-mod", 4)
    b = ternary_matrix("c-mod", 4)
    assert a == b
    assert a.provenance == b.provenance


def test_provenance_describe():
    m = gen_catalan_alpha_matrix((0, 2), 3, 1)
    text = m.provenance.describe()
    assert "gen_catalan_alpha" in text
    assert "alphas=0,2" in text and "k=3" in text


def test_scale_row():
    m = ExactMatrix([[1, 2], [3, 4]])
    s = m.scale_row(0, Fraction(3, 7))
    assert entries(s) == [[Fraction(3, 7), Fraction(6, 7)], [3, 4]]


# -- file format ------------------------------------------------------------


def test_file_round_trip(tmp_path):
    m = hankel_matrix(SequenceSpec("ternary_c"), 3)
    path = tmp_path / "m.txt"
    m.write(path)
    assert ExactMatrix.read(path) == m


def test_from_text_round_trips_every_builder():
    for m in (catalan_alpha_matrix((0, 2, 5)),
              ternary_matrix("c-mod", 3),
              linear_factor_matrix((Fraction(1, 2), Fraction(-3, 4)), (1,), (Fraction(2, 3),))):
        assert ExactMatrix.from_text(m.to_text()) == m


def test_from_text_comments_and_blanks():
    text = "# a matrix\n2\n\n1 1/2   # trailing comment\n-3 4\n"
    m = ExactMatrix.from_text(text)
    assert entries(m) == [[1, Fraction(1, 2)], [-3, 4]]


def test_from_text_ragged_row():
    with pytest.raises(MatrixParseError) as err:
        ExactMatrix.from_text("2\n1 2 3\n4 5\n")
    assert "line 2" in str(err.value)
    assert "expected 2 entries" in str(err.value)


def test_from_text_zero_denominator():
    with pytest.raises(MatrixParseError) as err:
        ExactMatrix.from_text("2\n1 2\n3 4/0\n")
    assert err.value.line == 3
    assert err.value.column == 2


def test_from_text_bad_token():
    with pytest.raises(MatrixParseError) as err:
        ExactMatrix.from_text("1\nx\n")
    assert err.value.line == 2
    assert err.value.column == 1


def test_from_text_structural_errors():
    with pytest.raises(MatrixParseError):
        ExactMatrix.from_text("")
    with pytest.raises(MatrixParseError):
        ExactMatrix.from_text("2\n1 2\n")            # missing row
    with pytest.raises(MatrixParseError):
        ExactMatrix.from_text("1\n1\n2\n")           # trailing content
    with pytest.raises(MatrixParseError):
        ExactMatrix.from_text("zzz\n")               # bad order line
    with pytest.raises(MatrixParseError):
        ExactMatrix.from_text("0\n")                 # order < 1
