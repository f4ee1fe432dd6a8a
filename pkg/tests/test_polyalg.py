"""Ring arithmetic, orders, and structural operations on polynomials."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polarvalues.fields import QQ, PrimeField
from polarvalues.polynomials import (
    LexOrder,
    Polynomial,
    PolynomialRing,
    extend_ring,
    fresh_variable_name,
    lift_polynomial,
    make_primitive,
    monomial_add,
    monomial_divides,
    monomial_lcm,
    monomial_sub,
)

R2 = PolynomialRing(("x", "y"), QQ)
X, Y = R2.variable("x"), R2.variable("y")


def rand_poly(rng, ring, max_deg=3, max_terms=4, bound=5):
    terms = {}
    n = ring.nvars
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_deg) for _ in range(n))
        c = rng.randint(-bound, bound)
        if c:
            terms[exps] = ring.field(c)
    return Polynomial(ring, terms)


small_coeff = st.integers(min_value=-9, max_value=9)
small_exp = st.integers(min_value=0, max_value=4)


@st.composite
def polys(draw, nvars=2):
    ring = R2 if nvars == 2 else PolynomialRing(
        tuple("abcdef"[:nvars]), QQ
    )
    nterms = draw(st.integers(min_value=0, max_value=5))
    terms = {}
    for _ in range(nterms):
        exps = tuple(draw(small_exp) for _ in range(nvars))
        c = draw(small_coeff)
        if c:
            terms[exps] = Fraction(c)
    return Polynomial(ring, terms)


class TestRingAxioms:
    @settings(max_examples=60, deadline=None)
    @given(polys(), polys(), polys())
    def test_add_mul_axioms(self, p, q, r):
        assert p + q == q + p
        assert (p + q) + r == p + (q + r)
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + R2.zero() == p
        assert p * R2.one() == p
        assert p - p == R2.zero()

    @settings(max_examples=40, deadline=None)
    @given(polys())
    def test_pow_matches_repeated_mul(self, p):
        assert p**0 == R2.one()
        assert p**1 == p
        assert p**3 == p * p * p

    def test_zero_coefficients_dropped(self):
        p = Polynomial(R2, {(1, 0): Fraction(0)})
        assert p.is_zero()
        assert (X - X).terms == {}


class TestMonomials:
    def test_lcm_divides_sub(self):
        a, b = (2, 1), (1, 3)
        assert monomial_lcm(a, b) == (2, 3)
        assert monomial_divides(a, (2, 5))
        assert not monomial_divides(a, (1, 5))
        assert monomial_sub((4, 5), a) == (2, 4)
        assert monomial_add(a, b) == (3, 4)

    def test_lex_order_comparisons(self):
        order = LexOrder.default(2)
        assert order.greater((1, 0), (0, 5))
        assert order.greater((2, 1), (2, 0))
        elim = LexOrder.eliminating(3, (0, 2))
        # permuted lex: the eliminated tail variables come last
        assert elim.permutation[-2:] == (0, 2)

    def test_eliminating_rejects_bad_tail(self):
        with pytest.raises(ValueError):
            LexOrder.eliminating(2, (0, 0))
        with pytest.raises(ValueError):
            LexOrder.eliminating(2, (5,))


class TestCalculus:
    @settings(max_examples=40, deadline=None)
    @given(polys(), polys())
    def test_derivative_is_linear_and_leibniz(self, p, q):
        dp = p.partial_derivative(0)
        dq = q.partial_derivative(0)
        assert (p + q).partial_derivative(0) == dp + dq
        assert (p * q).partial_derivative(0) == dp * q + p * dq

    def test_partials_of_fixture(self):
        f = X + X**2 * Y
        assert f.partial_derivative(0) == R2.one() + 2 * X * Y
        assert f.partial_derivative(1) == X**2

    def test_total_degree_and_degree_in(self):
        f = X + X**2 * Y
        assert f.total_degree() == 3
        assert f.degree_in(0) == 2
        assert f.degree_in(1) == 1
        assert R2.zero().total_degree() == float("-inf")


class TestSubstitutions:
    def test_substitute_linear_identity(self):
        f = X**3 - 3 * X + Y**2
        assert f.substitute_linear(((1, 0), (0, 1))) == f

    def test_substitute_linear_swap_round_trip(self):
        f = X**2 * Y + 7 * Y
        swap = ((0, 1), (1, 0))
        assert f.substitute_linear(swap).substitute_linear(swap) == f

    def test_substitute_linear_composition(self):
        import random

        rng = random.Random(5)
        a = ((1, 2), (0, 1))
        b = ((1, 0), (3, 1))
        f = rand_poly(rng, R2)
        once = f.substitute_linear(a).substitute_linear(b)
        # matrix product in the order matching substitution composition
        prod = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
            for i in range(2)
        )
        assert once == f.substitute_linear(prod)

    def test_restrict_hyperplane(self):
        f = X + X**2 * Y
        g = f.restrict_hyperplane(0)
        assert g.ring.nvars == 1
        assert g.is_zero()
        h = (X + Y * Y).restrict_hyperplane(1)
        assert str(h) == "x"

    def test_evaluate(self):
        f = X**2 + 2 * Y
        assert f.evaluate((Fraction(3), Fraction(1, 2))) == Fraction(10)


class TestFieldAgreement:
    def test_qq_vs_prime_field_arithmetic(self):
        import random

        rng = random.Random(11)
        p = 32003
        F = PrimeField(p)
        Rp = PolynomialRing(("x", "y"), F)
        for _ in range(25):
            a = rand_poly(rng, R2)
            b = rand_poly(rng, R2)

            def mod_image(poly):
                return Polynomial(
                    Rp,
                    {
                        m: F(int(c.numerator) * pow(int(c.denominator), -1, p))
                        for m, c in poly.terms.items()
                    },
                )

            assert mod_image(a * b + a) == mod_image(a) * mod_image(b) + mod_image(a)


class TestNormalization:
    def test_make_primitive_strips_content(self):
        f = Fraction(6, 4) * X + Fraction(9, 4) * Y
        content, prim = make_primitive(f)
        assert prim == 2 * X + 3 * Y
        assert content == Fraction(3, 4)
        assert prim * content == f

    def test_make_primitive_sign_convention(self):
        f = -2 * X - 4 * Y
        content, prim = make_primitive(f)
        order = LexOrder.default(2)
        assert prim.leading_coefficient(order) > 0
        assert prim * content == f


class TestRingExtension:
    def test_fresh_variable_name_avoids_clashes(self):
        assert fresh_variable_name(("x", "y"), "z") == "z"
        assert fresh_variable_name(("z", "y"), "z") == "z2"
        assert fresh_variable_name(("z", "z2"), "z") == "z3"

    def test_extend_and_lift(self):
        bigger = extend_ring(R2, "z", front=False)
        assert bigger.variables == ("x", "y", "z")
        front = extend_ring(R2, "t", front=True)
        assert front.variables == ("t", "x", "y")
        f = X + X**2 * Y
        lifted = lift_polynomial(f, bigger)
        assert lifted.degree_in(2) == 0
        assert str(lifted) == str(f)
