import random
from fractions import Fraction

from blockrep.poly import SparsePoly, monomial, monomial_degree, monomial_mul


def random_poly(rng, nvars=3, nterms=4, maxexp=3):
    terms = {}
    for _ in range(nterms):
        m = monomial(*((rng.randint(1, nvars), rng.randint(0, maxexp))
                       for _ in range(rng.randint(0, 3))))
        terms[m] = terms.get(m, 0) + rng.randint(-4, 4)
    return SparsePoly(terms)


def test_monomial_canonical():
    assert monomial((2, 1), (1, 2)) == ((1, 2), (2, 1))
    assert monomial((1, 0)) == ()
    assert monomial((1, 2), (1, -2)) == ()
    assert monomial_mul(((1, 1),), ((1, 2), (3, 1))) == ((1, 3), (3, 1))
    assert monomial_degree(((1, 2), (5, 3))) == 5


def test_zero_handling():
    p = SparsePoly.variable(1)
    assert (p - p).is_zero()
    assert not SparsePoly.constant(0)
    assert p * SparsePoly.zero() == SparsePoly.zero()


def test_ring_axioms_random():
    rng = random.Random(7)
    for _ in range(50):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)


def test_power_matches_repeated_product():
    rng = random.Random(3)
    for _ in range(10):
        a = random_poly(rng)
        prod = SparsePoly.constant(1)
        for e in range(5):
            assert a ** e == prod
            prod = prod * a


def test_degree_and_components():
    x, y = SparsePoly.variable(1), SparsePoly.variable(2)
    p = x * x + x * y + y + SparsePoly.constant(5)
    assert p.degree() == 2
    assert p.degrees_present() == [0, 1, 2]
    assert p.homogeneous_component(2) == x * x + x * y
    assert p.evaluate_all_ones() == 8


def test_fraction_coefficients_stay_exact():
    x = SparsePoly.variable(1)
    p = x.scale(Fraction(1, 3)) + x.scale(Fraction(1, 6))
    assert p == x.scale(Fraction(1, 2))
    assert (p - x.scale(Fraction(1, 2))).is_zero()
