from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from moduli_orders.combinatorics import ModuliOrder, SignPattern
from moduli_orders.errors import (
    BoundaryRoot,
    ModuliTie,
    NonGeneric,
    NotHyperbolic,
    ParseError,
    RootAtZero,
    ZeroCoefficient,
)
from moduli_orders.exact import (
    INF,
    Polynomial,
    RootConfiguration,
    count_real_roots,
    elementary_symmetric,
    expand,
    format_rational,
    is_hyperbolic,
    isolate_positive_roots,
    moduli_order,
    parse_rational,
    sign_pattern,
)

X = sympy.Symbol("x")


def to_sympy(p: Polynomial) -> sympy.Poly:
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in p.coeffs])), X)


def same(p: Polynomial, expected) -> bool:
    return sympy.expand(to_sympy(p).as_expr() - sympy.Poly(expected, X).as_expr()) == 0


def random_poly(rng: random.Random, degree: int) -> Polynomial:
    cs = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(degree)]
    return Polynomial(cs + [Fraction(rng.randint(1, 4))])


# -- rationals and parsing ------------------------------------------------


def test_format_rational_always_has_denominator():
    assert format_rational(Fraction(5)) == "5/1"
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert parse_rational(format_rational(Fraction(-7, 3))) == Fraction(-7, 3)


def test_parse_rational_rejects_garbage():
    with pytest.raises(ParseError):
        parse_rational("one half")


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("x^3+1/2x^2-11/2x-5", [-5, Fraction(-11, 2), Fraction(1, 2), 1]),
        ("x^2 - 1", [-1, 0, 1]),
        ("-x+3", [3, -1]),
        ("2*x**2+x", [0, 1, 2]),
        ("x^2+x^2", [0, 0, 2]),
    ],
)
def test_polynomial_parse(text, coeffs):
    assert Polynomial.parse(text) == Polynomial(coeffs)


@pytest.mark.parametrize("text", ["", "x^", "3y", "x^2+(x)"])
def test_polynomial_parse_errors(text):
    with pytest.raises(ParseError):
        Polynomial.parse(text)


def test_str_parse_round_trip():
    rng = random.Random(3)
    for _ in range(50):
        p = random_poly(rng, rng.randint(1, 6))
        assert Polynomial.parse(str(p)) == p


def test_json_round_trip():
    p = Polynomial.parse("x^4-2/3x+7")
    assert Polynomial.loads(p.dumps()) == p


# -- arithmetic against sympy ---------------------------------------------


def test_arithmetic_matches_sympy():
    rng = random.Random(11)
    for _ in range(40):
        a, b = random_poly(rng, rng.randint(1, 6)), random_poly(rng, rng.randint(1, 4))
        assert same(a * b, to_sympy(a) * to_sympy(b))
        assert same(a - b, to_sympy(a) - to_sympy(b))
        q, r = divmod(a, b)
        sq, sr = sympy.div(to_sympy(a), to_sympy(b))
        assert same(q, sq) and same(r, sr)
        x0 = Fraction(rng.randint(-7, 7), rng.randint(1, 4))
        assert a(x0) == Fraction(str(to_sympy(a).eval(sympy.Rational(x0.numerator, x0.denominator))))


def test_gcd_matches_sympy():
    rng = random.Random(5)
    for _ in range(30):
        common = Polynomial.from_roots([rng.randint(-4, 4) for _ in range(rng.randint(0, 2))])
        a = common * random_poly(rng, 2)
        b = common * random_poly(rng, 3)
        expected = sympy.gcd(to_sympy(a), to_sympy(b)).monic()
        assert same(a.gcd(b), expected)


def test_reflect_reverse_rescale():
    p = Polynomial.from_roots([1, -2, 3])
    assert p.reflect() == Polynomial.from_roots([-1, 2, -3]) * -1
    eps = Fraction(1, 3)
    assert p.rescale(eps) == Polynomial.from_roots([eps, -2 * eps, 3 * eps])
    # x^3 p(1/x) has the reciprocal roots up to the constant p(0)
    assert p.reversed().monic() == Polynomial.from_roots([1, Fraction(-1, 2), Fraction(1, 3)])


# -- symmetric functions --------------------------------------------------


def test_elementary_symmetric_brute_force():
    args = [Fraction(1, 2), Fraction(3), Fraction(5, 7), Fraction(2)]
    e = elementary_symmetric(args)
    for k in range(len(args) + 1):
        brute = sum((Fraction(1) * _prod(c) for c in itertools.combinations(args, k)), Fraction(0))
        assert e[k] == brute
    assert e[-1] == 0 and e[len(args) + 1] == 0


def _prod(xs):
    out = Fraction(1)
    for x in xs:
        out *= x
    return out


def test_newton_gaps_vanish_for_equal_arguments():
    assert all(g == 0 for g in elementary_symmetric([Fraction(2)] * 5).newton_gaps())
    assert all(g > 0 for g in elementary_symmetric([1, 2, 3, 4]).newton_gaps())


def test_elementary_symmetric_rejects_nonpositive():
    with pytest.raises(ValueError):
        elementary_symmetric([1, 0])


# -- sign patterns --------------------------------------------------------


def test_sign_pattern_example():
    p = Polynomial.parse("x^3+1/2x^2-11/2x-5")
    assert sign_pattern(p) == SignPattern.from_blocks(2, 2)


def test_sign_pattern_normalizes_leading_sign():
    assert sign_pattern(Polynomial([1, -1])) == sign_pattern(Polynomial([-1, 1]))


def test_zero_coefficient():
    with pytest.raises(ZeroCoefficient) as info:
        sign_pattern(Polynomial.parse("x^3-7x-6"))
    assert info.value.index == 2


# -- root counting against sympy ------------------------------------------


def test_count_real_roots_matches_sympy():
    rng = random.Random(7)
    for _ in range(40):
        real = [Fraction(rng.randint(-20, 20), rng.randint(1, 4)) for _ in range(rng.randint(0, 4))]
        p = Polynomial.from_roots(real)
        if rng.random() < 0.5:
            p = p * Polynomial([rng.randint(1, 5), rng.randint(-2, 2), 1])  # possibly complex pair
        expected = len(set(sympy.real_roots(to_sympy(p))))
        assert count_real_roots(p) == expected


def test_count_real_roots_interval_and_boundary():
    p = Polynomial.from_roots([1, 2, 3])
    assert count_real_roots(p, (Fraction(3, 2), INF)) == 2
    assert count_real_roots(p, (-INF, Fraction(5, 2))) == 2
    with pytest.raises(BoundaryRoot):
        count_real_roots(p, (Fraction(1), Fraction(4)))


def test_isolation_intervals_are_disjoint_and_exact():
    p = Polynomial.from_roots([Fraction(1, 3), Fraction(1, 2), 7, -4])
    intervals = isolate_positive_roots(p)
    assert len(intervals) == 3
    for (a, b), root in zip(intervals, [Fraction(1, 3), Fraction(1, 2), Fraction(7)]):
        assert a <= root <= b
    assert all(b1 <= a2 for (_, b1), (a2, _) in zip(intervals, intervals[1:]))


def test_is_hyperbolic():
    assert is_hyperbolic(Polynomial.from_roots([1, 1, -2]))
    assert not is_hyperbolic(Polynomial.parse("x^2+1"))
    assert not is_hyperbolic(Polynomial.parse("x^3-x^2+x-1"))


# -- orders of moduli -----------------------------------------------------


def test_moduli_order_introductory_example():
    # alpha1 < |g1| < |g2| < alpha2 < |g3| < alpha3 < |g4| gives PNNPNPN
    p = Polynomial.from_roots([1, -2, -3, 4, -5, 6, -7])
    assert moduli_order(p) == ModuliOrder("PNNPNPN")


def test_moduli_order_irrational_roots():
    # (x^2 - 2)(x + 3/2): moduli sqrt2 (P and N tie) -> ModuliTie
    with pytest.raises(ModuliTie):
        moduli_order(Polynomial.parse("x^2-2") * Polynomial.from_roots([Fraction(-3, 2)]))
    # (x^2 - 2x - 1)(x + 2): roots 1-sqrt2, 1+sqrt2, -2 -> moduli .41 N, 2 N, 2.41 P
    p = Polynomial.parse("x^2-2x-1") * Polynomial.from_roots([-2])
    assert moduli_order(p) == ModuliOrder("NNP")


@pytest.mark.parametrize(
    "roots, error",
    [
        ([0, 1, -2], RootAtZero),
        ([1, -1, 2], ModuliTie),
        ([2, 2, -1], NonGeneric),
    ],
)
def test_moduli_order_errors(roots, error):
    with pytest.raises(error):
        moduli_order(Polynomial.from_roots(roots))


def test_moduli_order_not_hyperbolic():
    with pytest.raises(NotHyperbolic):
        moduli_order(Polynomial.parse("x^3+x+1"))


moduli_lists = st.lists(
    st.fractions(min_value=Fraction(1, 1000), max_value=1000, max_denominator=1000),
    min_size=1,
    max_size=8,
    unique=True,
)


@settings(max_examples=150, deadline=None)
@given(moduli=moduli_lists, letters=st.lists(st.sampled_from("PN"), min_size=8, max_size=8))
def test_moduli_order_round_trip(moduli, letters):
    moduli = sorted(moduli)
    order = ModuliOrder("".join(letters[: len(moduli)]))
    config = RootConfiguration.from_moduli(moduli, order)
    p = expand(config)
    assert moduli_order(p) == order


@settings(max_examples=150, deadline=None)
@given(moduli=moduli_lists, letters=st.lists(st.sampled_from("PN"), min_size=8, max_size=8))
def test_descartes_counts_are_exact(moduli, letters):
    config = RootConfiguration.from_moduli(sorted(moduli), ModuliOrder("".join(letters[: len(moduli)])))
    pattern = sign_pattern(expand(config))
    assert pattern.changes == len(config.positive())
    assert pattern.preservations == len(config.negative_moduli())


def test_root_configuration_validation():
    with pytest.raises(ValueError):
        RootConfiguration.from_values([1, -1])
    with pytest.raises(ValueError):
        RootConfiguration(((Fraction(1), "negative"),))
    c = RootConfiguration.from_values([Fraction(1, 2), -3])
    assert RootConfiguration.from_json(c.to_json()) == c
    assert c.order() == ModuliOrder("PN")
