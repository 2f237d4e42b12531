import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recmat.identities import compute_F
from recmat.oracle import (OP_G, OP_L, OP_L1, LaurentBiv, OreOp, ore_apply,
                           ore_mul, residue_F, verify_factorization)
from recmat.polyring import N, ONE, Z, ZERO, Poly
from recmat.triangles import narayana_poly


def z_poly(*coeffs):
    acc = ZERO
    for i, c in enumerate(coeffs):
        acc = acc + Poly.const(c) * (Z ** i)
    return acc


class TestResidue:
    def test_2_1(self):
        assert residue_F(2, 1) == z_poly(1, 0, 1)

    @pytest.mark.parametrize("n", range(6))
    def test_diagonal_zero(self, n):
        assert residue_F(n, n) == ZERO

    def test_1_0(self):
        assert residue_F(1, 0) == ONE

    def test_agrees_with_minor_sum(self):
        for m in range(7):
            for n in range(7):
                assert residue_F(m, n) == compute_F(m, n)

    def test_antisymmetry(self):
        for m in range(6):
            for n in range(6):
                assert residue_F(m, n) == -residue_F(n, m)

    def test_laurent_window(self):
        lb = LaurentBiv.monomial(-2, 3, Z)
        assert lb.coeff(-2, 3) == Z
        assert lb.coeff(0, 0) == ZERO


class TestOreMul:
    def test_commutation_rule(self):
        S = OreOp([ZERO, ONE])
        n_op = OreOp([N])
        assert S * n_op == OreOp([ZERO, N + 1])

    def test_factor_leading_term(self):
        prod = ore_mul(OP_G, OP_L1)
        assert prod.coeffs[3] == (2 * N + 9) * (N + 5)
        assert prod.coeffs[3] == OP_L.coeffs[3]

    def test_factor_constant_term(self):
        prod = ore_mul(OP_G, OP_L1)
        expected = -2 * (N + 1) * (N + 2) * ((Z - 1) ** 4) * ((Z + 1) ** 2)
        assert prod.coeffs[0] == expected
        assert prod.coeffs[0] == OP_L.coeffs[0]

    def test_orders_add(self):
        assert OP_G.order + OP_L1.order == OP_L.order == 3

    small_polys = st.builds(
        lambda a, b, c: Poly.const(a) + Poly.const(b) * N + Poly.const(c) * Z,
        st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
    ops = st.lists(small_polys, min_size=1, max_size=3).map(OreOp)

    @given(ops, ops, ops)
    @settings(max_examples=40, deadline=None)
    def test_associativity(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(ops, ops, ops)
    @settings(max_examples=40, deadline=None)
    def test_left_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c


class TestApply:
    def narayana_sq(self, i):
        return narayana_poly(i).subst("z", Z * Z)

    def test_hand_expansion_at_zero(self):
        # 4*N_2(z^2) - 5(1+z^2)*N_1(z^2) + (z^2-1)^2 * N_0 = 0
        assert OP_L1.apply(self.narayana_sq, 0) == ZERO

    @pytest.mark.parametrize("n0", range(16))
    def test_L1_annihilates_narayana(self, n0):
        assert OP_L1.apply(self.narayana_sq, n0) == ZERO

    @pytest.mark.parametrize("n0", range(13))
    def test_L_annihilates_superdiagonal(self, n0):
        assert OP_L.apply(lambda i: compute_F(i + 1, i), n0) == ZERO

    def test_undefined_sequence(self):
        def partial(i):
            return ONE if i < 1 else None

        with pytest.raises(ValueError):
            OP_L1.apply(partial, 0)

    def test_apply_is_ore_apply(self):
        assert ore_apply(OP_L1, self.narayana_sq, 3) == ZERO


class TestFactorization:
    def test_holds(self):
        assert verify_factorization()

    def test_negative_control(self):
        # flipping one sign must break the factorization
        perturbed = OreOp(list(OP_L.coeffs[:3]) + [-OP_L.coeffs[3]])
        assert ore_mul(OP_G, OP_L1) != perturbed
