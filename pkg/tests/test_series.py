import random
from fractions import Fraction

import pytest

from gwcalc.exact import factorial
from gwcalc.series import TruncatedSeries, parse_series


def exp_series(order):
    return TruncatedSeries(1, order,
                           {(n,): Fraction(1, factorial(n))
                            for n in range(order + 1)})


def random_series(rng, nvars, order, nterms=6):
    terms = {}
    for _ in range(nterms):
        exps = tuple(rng.randrange(0, order + 1) for _ in range(nvars))
        if sum(exps) > order:
            continue
        terms[exps] = Fraction(rng.randrange(-9, 10), rng.randrange(1, 7))
    return TruncatedSeries(nvars, order, terms)


def test_product_of_exponentials():
    e = exp_series(4)
    square = e * e
    for n in range(5):
        assert square.coefficient((n,)) == Fraction(2 ** n, factorial(n))


def test_additive_identity_and_truncation():
    rng = random.Random(3)
    a = random_series(rng, 2, 5)
    zero = TruncatedSeries.zero(2, 5)
    assert a + zero == a
    x = TruncatedSeries.variable(1, 1, 0)
    assert (x * x).is_zero()  # x^2 exceeds order 1


def test_order_bookkeeping():
    a = TruncatedSeries.constant(2, 5, 1)
    b = TruncatedSeries.constant(2, 3, 1)
    assert (a + b).order == 3
    assert (a * b).order == 3
    assert a.partial_derivative(0).order == 4
    with pytest.raises(ValueError):
        a.truncate(7)
    with pytest.raises(ValueError):
        a.coefficient((6, 0))


def test_variable_count_mismatch():
    a = TruncatedSeries.constant(2, 3, 1)
    b = TruncatedSeries.constant(3, 3, 1)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a * b


def test_derivative_examples():
    e = exp_series(5)
    d = e.partial_derivative(0)
    assert d.order == 4
    for n in range(5):
        assert d.coefficient((n,)) == Fraction(1, factorial(n))
    # d/dx0 of x0^2 x1 / 2 is x0 x1
    s = TruncatedSeries(2, 3, {(2, 1): Fraction(1, 2)})
    assert s.partial_derivative(0) == TruncatedSeries(2, 2, {(1, 1): 1})
    assert TruncatedSeries.constant(1, 4, 5).partial_derivative(0).is_zero()


def test_leibniz_rule_randomized():
    rng = random.Random(17)
    for _ in range(500):
        nvars = rng.randrange(1, 4)
        order = rng.randrange(1, 6)
        a = random_series(rng, nvars, order)
        b = random_series(rng, nvars, order)
        var = rng.randrange(nvars)
        lhs = (a * b).partial_derivative(var)
        rhs = a.partial_derivative(var) * b + a * b.partial_derivative(var)
        assert lhs == rhs.truncate(lhs.order)


def test_mixed_partials_randomized():
    rng = random.Random(19)
    for _ in range(500):
        nvars = rng.randrange(2, 4)
        order = rng.randrange(2, 7)
        s = random_series(rng, nvars, order)
        i = rng.randrange(nvars)
        j = rng.randrange(nvars)
        assert (s.partial_derivative(i).partial_derivative(j)
                == s.partial_derivative(j).partial_derivative(i))


def test_immutability():
    s = TruncatedSeries.constant(1, 2, 1)
    with pytest.raises(AttributeError):
        s.order = 5


def test_render_canonical():
    s = TruncatedSeries(3, 3, {(2, 1, 0): Fraction(1, 2)})
    assert s.render() == "1/2·x0^2·x1"
    assert TruncatedSeries.zero(2, 2).render() == "0"
    multi = TruncatedSeries(2, 3, {(0, 0): Fraction(1),
                                   (1, 1): Fraction(-2, 3),
                                   (0, 2): Fraction(3)})
    # lexicographic by exponent tuple
    assert multi.render() == "1 + 3·x1^2 + -2/3·x0·x1"


def test_parse_round_trip():
    rng = random.Random(29)
    for _ in range(200):
        nvars = rng.randrange(1, 4)
        order = rng.randrange(0, 7)
        s = random_series(rng, nvars, order)
        assert parse_series(s.render(), nvars, order) == s
