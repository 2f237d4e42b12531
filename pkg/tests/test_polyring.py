from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recmat.polyring import (ONE, VARS, X, Y, Z, T, ZERO, Poly, binomial,
                             parse_poly)


def z_poly(*coeffs):
    """Poly in z from coefficients of z^0, z^1, ..."""
    acc = ZERO
    for i, c in enumerate(coeffs):
        acc = acc + Poly.const(c) * (Z ** i)
    return acc


class TestArithmetic:
    def test_difference_of_squares(self):
        assert (X + Y) * (X - Y) == X * X - Y * Y

    def test_square(self):
        assert (Z + 1) * (Z + 1) == z_poly(1, 2, 1)

    def test_narayana_product_difference(self):
        # (z+1)(z^2+3z+1) - (z^3+6z^2+6z+1) = -2z^2 - 2z
        lhs = (Z + 1) * z_poly(1, 3, 1) - z_poly(1, 6, 6, 1)
        assert lhs == z_poly(0, -2, -2)

    def test_zero_is_empty(self):
        assert (X - X).is_zero()
        assert (X - X) == ZERO
        assert ZERO.degree() == float("-inf")

    def test_int_coercion(self):
        assert 2 * Z + 1 == z_poly(1, 2)
        assert (1 - Z) * (1 + Z) == z_poly(1, 0, -1)

    def test_pow(self):
        assert (Z + 1) ** 0 == ONE
        assert (Z + 1) ** 3 == z_poly(1, 3, 3, 1)


class TestSubstitution:
    def test_z_to_z_squared(self):
        assert (Z + 1).subst("z", Z * Z) == Z * Z + 1

    def test_homogenization_chain(self):
        p = X * X + Z
        q = p.subst("x", T * X).subst("z", T * T * Z)
        assert q == T * T * X * X + T * T * Z

    def test_identity_subst(self):
        p = X * X * Y + 3 * Z
        assert p.subst("y", Y) == p

    def test_unknown_variable(self):
        with pytest.raises(ValueError):
            (X + Y).subst("w", Z)

    def test_numeric_subst(self):
        assert z_poly(1, 3, 1).subst("z", 2).constant_value() == 11


class TestBinomial:
    def test_plain(self):
        assert binomial(6, 2) == 15

    def test_negative_top_convention(self):
        assert binomial(-1, 0) == 1
        assert binomial(-1, 1) == -1
        assert binomial(-2, 3) == -4

    def test_bottom_exceeds_top(self):
        assert binomial(2, 5) == 0

    def test_negative_bottom(self):
        assert binomial(5, -1) == 0

    @pytest.mark.parametrize("j", range(1, 6))
    def test_j_minus_one_choose_j(self, j):
        assert binomial(j - 1, j) == 0

    @given(st.integers(-20, 20), st.integers(1, 20))
    def test_pascal_rule(self, n, k):
        assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


class TestExactDiv:
    def test_simple(self):
        assert z_poly(3, 0, 3).exact_div(3) == z_poly(1, 0, 1)

    def test_rational_result(self):
        half = (Z + 1).exact_div(2)
        assert half == Poly.const(Fraction(1, 2)) * (Z + 1)
        assert not half.is_integer()

    def test_integrality_demanded(self):
        with pytest.raises(ValueError):
            (Z + 1).exact_div(2, require_integer=True)

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            (Z + 1).exact_div(0)


# random small polynomials for the ring-axiom properties
coefs = st.integers(-4, 4)
exps = st.tuples(*(st.integers(0, 2) for _ in VARS))
polys = st.dictionaries(exps, coefs, max_size=4).map(Poly)


class TestRingAxioms:
    @given(polys, polys, polys)
    @settings(max_examples=60)
    def test_associativity(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)

    @given(polys, polys)
    @settings(max_examples=60)
    def test_commutativity(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(polys, polys, polys)
    @settings(max_examples=60)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(polys)
    def test_additive_inverse(self, a):
        assert (a + (-a)).is_zero()

    @given(polys)
    def test_canonical_idempotence(self, a):
        assert Poly(dict(a.terms)) == a
        assert all(c != 0 for c in a.terms.values())

    @given(polys, polys)
    @settings(max_examples=60)
    def test_subst_is_homomorphism(self, a, b):
        q = Z + 2
        assert (a * b).subst("x", q) == a.subst("x", q) * b.subst("x", q)
        assert (a + b).subst("x", q) == a.subst("x", q) + b.subst("x", q)


class TestRendering:
    def test_canonical_form(self):
        assert str(z_poly(4, 20, 20, 4)) == "4z^3+20z^2+20z+4"

    def test_mixed_vars_graded_lex(self):
        assert str(X * X + X * Y + Y * Y) == "x^2+xy+y^2"
        assert str(X + 3 * Y) == "x+3y"

    def test_negative_and_zero(self):
        assert str(z_poly(0, -2, -2)) == "-2z^2-2z"
        assert str(ZERO) == "0"

    @given(polys)
    @settings(max_examples=80)
    def test_parse_round_trip(self, p):
        assert parse_poly(str(p)) == p

    def test_parse_rational(self):
        assert parse_poly("1/2z+1") == (Z + 2).exact_div(2)

    def test_parse_garbage(self):
        with pytest.raises(ValueError):
            parse_poly("2w+1")
