"""Independent verification channels.

Two live here: the bivariate-residue route to the alternating minor sums
F(m,n), and a small shift-operator (Ore) algebra that checks the annihilating
operators and their factorization.  Neither shares code with the triangle
route, so agreement is a genuine cross-check.
"""

from __future__ import annotations

from .polyring import N, ONE, Z, ZERO, Poly, binomial


class LaurentBiv:
    """Finite bivariate Laurent expansion: (u-exp, v-exp) -> Poly in z.

    The exponent window is exactly the stored support; extraction outside a
    declared window is the caller's bug, so `coeff` is total only over what
    was actually computed.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for exp, p in terms.items():
                if not p.is_zero():
                    self.terms[exp] = p

    @staticmethod
    def monomial(eu: int, ev: int, p: Poly = ONE) -> "LaurentBiv":
        return LaurentBiv({(eu, ev): p})

    def __add__(self, other: "LaurentBiv") -> "LaurentBiv":
        out = dict(self.terms)
        for exp, p in other.terms.items():
            s = out.get(exp, ZERO) + p
            if s.is_zero():
                out.pop(exp, None)
            else:
                out[exp] = s
        return LaurentBiv(out)

    def __sub__(self, other: "LaurentBiv") -> "LaurentBiv":
        return self + other.negate()

    def negate(self) -> "LaurentBiv":
        return LaurentBiv({e: -p for e, p in self.terms.items()})

    def __mul__(self, other: "LaurentBiv") -> "LaurentBiv":
        out = {}
        for (au, av), p in self.terms.items():
            for (bu, bv), q in other.terms.items():
                exp = (au + bu, av + bv)
                s = out.get(exp, ZERO) + p * q
                out[exp] = s
        return LaurentBiv(out)

    def shift(self, du: int, dv: int) -> "LaurentBiv":
        return LaurentBiv({(eu + du, ev + dv): p
                           for (eu, ev), p in self.terms.items()})

    def coeff(self, eu: int, ev: int) -> Poly:
        return self.terms.get((eu, ev), ZERO)


def _binomial_expansion(m: int, var_is_u: bool) -> LaurentBiv:
    """(1 + w)^m (1 + z*w)^m as a Laurent polynomial in w (u or v)."""
    a = [binomial(m, j) for j in range(m + 1)]
    out = {}
    for i, ai in enumerate(a):
        for j, aj in enumerate(a):
            # coefficient of w^(i+j) gains aj * z^j
            exp = (i + j, 0) if var_is_u else (0, i + j)
            out[exp] = out.get(exp, ZERO) + Poly.const(ai * aj) * (Z ** j)
    return LaurentBiv(out)


def residue_kernel(m: int, n: int) -> LaurentBiv:
    """(u-v)(1-z v^2)(1-z u^2)(1+v)^n (1+zv)^n (1+u)^m (1+zu)^m
    divided by v^(n+1) u^(m+1).

    The (u-v) orientation is forced by the change of variables
    v -> v/((1+v)(1+zv)): with it, the double residue reproduces the
    alternating minor sums (F(1,0) = +1), which the whole-grid cross-check
    in the tests confirms.
    """
    u_part = _binomial_expansion(m, var_is_u=True)
    v_part = _binomial_expansion(n, var_is_u=False)
    u_minus_v = LaurentBiv({(1, 0): ONE, (0, 1): -ONE})
    one_m_zv2 = LaurentBiv({(0, 0): ONE, (0, 2): -Z})
    one_m_zu2 = LaurentBiv({(0, 0): ONE, (2, 0): -Z})
    base = u_minus_v * one_m_zv2 * one_m_zu2 * u_part * v_part
    return base.shift(-(m + 1), -(n + 1))


def residue_F(m: int, n: int) -> Poly:
    """F(m,n) as the u^-1 v^-1 coefficient of the rational kernel.

    The factor 1/(1+z u v) is the geometric series sum_i (-z)^i u^i v^i;
    truncating at i = min(m,n)+2 is sufficient because the kernel's
    u-exponents are bounded below by -(m+2) (and v-exponents by -(n+2)).
    """
    if m < 0 or n < 0:
        raise ValueError("m, n must be non-negative")
    base = residue_kernel(m, n)
    i_max = min(m, n) + 2
    acc = ZERO
    sign_z = ONE
    for i in range(i_max + 1):
        acc = acc + sign_z * base.coeff(-1 - i, -1 - i)
        sign_z = sign_z * (-Z)
    return acc


# -- shift-operator algebra ------------------------------------------------


class OreOp:
    """Polynomial in the shift S with coefficients in {n, z}.

    Multiplication follows (c * S^p)(d * S^q) = c * d(n -> n+p) * S^(p+q).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [c if isinstance(c, Poly) else Poly.const(c) for c in coeffs]
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if not isinstance(other, OreOp):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: "OreOp") -> "OreOp":
        size = max(len(self.coeffs), len(other.coeffs))
        out = []
        for j in range(size):
            a = self.coeffs[j] if j < len(self.coeffs) else ZERO
            b = other.coeffs[j] if j < len(other.coeffs) else ZERO
            out.append(a + b)
        return OreOp(out)

    def __sub__(self, other: "OreOp") -> "OreOp":
        return self + OreOp([-c for c in other.coeffs])

    def __mul__(self, other: "OreOp") -> "OreOp":
        out = [ZERO] * (self.order + other.order + 1)
        for p, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            for q, d in enumerate(other.coeffs):
                if d.is_zero():
                    continue
                out[p + q] = out[p + q] + c * d.subst("n", N + p)
        return OreOp(out)

    def apply(self, seq, at: int) -> Poly:
        """sum_j coeff_j(at, z) * seq(at + j), exact."""
        acc = ZERO
        for j, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            value = seq(at + j)
            if value is None:
                raise ValueError(f"sequence undefined at index {at + j}")
            acc = acc + c.subst("n", at) * value
        return acc

    def __str__(self):
        parts = [f"({c})*S^{j}" for j, c in enumerate(self.coeffs)
                 if not c.is_zero()]
        return " + ".join(parts) or "0"

    __repr__ = __str__


def ore_mul(a: OreOp, b: OreOp) -> OreOp:
    return a * b


def ore_apply(a: OreOp, seq, at: int) -> Poly:
    return a.apply(seq, at)


# Annihilating operators, transcribed as program constants.
Z2 = Z * Z

OP_L = OreOp([
    -2 * (N + 1) * (N + 2) * ((Z - 1) ** 4) * ((Z + 1) ** 2),
    (N + 2) * ((6 * N + 19) * (Z2 * Z2 + 1)
               - 4 * (2 * N + 5) * (Z2 * Z + Z)
               + 2 * (2 * N + 1) * Z2),
    4 * (N + 2) * (N + 4) * Z - (Z2 + 1) * (6 * N * N + 44 * N + 79),
    (N + 5) * (2 * N + 9),
])

OP_L1 = OreOp([
    (N + 1) * ((Z - 1) ** 2) * ((Z + 1) ** 2),
    -(2 * N + 5) * (Z2 + 1),
    N + 4,
])

OP_G = OreOp([
    -2 * (N + 2) * ((Z - 1) ** 2),
    2 * N + 9,
])


def verify_factorization() -> bool:
    """The third-order operator factors as G * L1, coefficient for
    coefficient."""
    return OP_G * OP_L1 == OP_L
