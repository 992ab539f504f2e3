import math

import pytest

from colored_motzkin.enumeration import count_motzkin_dp, count_syt_dp
from colored_motzkin.formulas import ExactRational, catalan, central_binomial, syt_count_formula

from oracles import syt_count_hooks


def test_catalan():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    with pytest.raises(ValueError):
        catalan(-1)


def test_central_binomial():
    assert central_binomial(5) == 10
    assert central_binomial(0) == 1
    assert [central_binomial(n) for n in range(7)] == [1, 1, 2, 3, 6, 10, 20]


@pytest.mark.parametrize("n, d, want", [(5, 5, 26), (5, 2, 10), (4, 4, 10)])
def test_examples(n, d, want):
    assert syt_count_formula(n, d) == want


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_empty_tableau(d):
    assert syt_count_formula(0, d) == 1


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_formula_against_hook_lengths(d):
    for n in range(13):
        assert syt_count_formula(n, d) == syt_count_hooks(n, d)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_formula_against_dp(d):
    for n in range(41):
        assert syt_count_formula(n, d) == count_syt_dp(n, d)


def test_three_rows_are_motzkin_numbers():
    for n in range(41):
        assert syt_count_formula(n, 3) == count_motzkin_dp(n, 1)


@pytest.mark.parametrize("d", [1, 6, 0])
def test_unsupported_rows(d):
    with pytest.raises(NotImplementedError):
        syt_count_formula(4, d)


def test_negative_n():
    with pytest.raises(ValueError):
        syt_count_formula(-1, 3)


def test_exact_rational_is_reduced():
    x = ExactRational(6, 4)
    assert (x.numerator, x.denominator) == (3, 2)
    assert math.gcd(x.numerator, x.denominator) == 1
