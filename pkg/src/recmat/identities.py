"""Weighted minor-sum, permanent-sum and alternating-sum identity verifiers.

Every verifier materializes both sides as exact polynomials so a failure can
be diagnosed by diffing them, and returns a VerifyReport rather than a bare
boolean.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polyring import ONE, X, Y, Z, ZERO, Poly, binomial
from .triangles import (GENERIC_SPEC, PERMANENT_SPEC, SCHRODER_SPEC,
                        SigmaTauSpec, Triangle, build_triangle, m_entry,
                        narayana_entry, narayana_poly)


@dataclass(frozen=True)
class VerifyReport:
    identity_id: str
    parameters: dict
    lhs: Poly
    rhs: Poly

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_record(self) -> dict:
        return {
            "identity": self.identity_id,
            "parameters": dict(self.parameters),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "equal": self.equal,
        }


class MinorFamily:
    """Shared state for a sweep over one triangle family.

    Caches the x->y starred entries and all pairwise entry products, which
    dominate the cost of the Theorem sweeps.
    """

    def __init__(self, spec: SigmaTauSpec, depth: int):
        self.tri = build_triangle(spec, depth)
        self.depth = depth
        # the theorem's weight z^k is the tau parameter of the family
        self.weight = spec.tau_tail
        self._star: dict = {}
        self._prod: dict = {}

    def a(self, n: int, k: int) -> Poly:
        return self.tri.at(n, k)

    def a_star(self, n: int, k: int) -> Poly:
        p = self._star.get((n, k))
        if p is None:
            p = self.tri.at(n, k).subst("x", Y)
            self._star[(n, k)] = p
        return p

    def prod(self, n1: int, k1: int, n2: int, k2: int) -> Poly:
        key = (n1, k1, n2, k2)
        p = self._prod.get(key)
        if p is None:
            p = self._prod.get((n2, k2, n1, k1))
            if p is None:
                p = self.tri.at(n1, k1) * self.tri.at(n2, k2)
            self._prod[key] = p
        return p


def minor_family(depth: int, spec: SigmaTauSpec = GENERIC_SPEC) -> MinorFamily:
    return MinorFamily(spec, depth)


def permanent_family(depth: int,
                     spec: SigmaTauSpec = PERMANENT_SPEC) -> MinorFamily:
    return MinorFamily(spec, depth)


def verify_weighted_minor(n: int, m: int, r: int, ell: int,
                          family: MinorFamily) -> VerifyReport:
    """Weighted 2x2 minor sum for sigma=(x,y,y,...), tau=(z,z,...):

    sum_{k=0}^{M_r} z^k * det [[A(n,k), A(m,k+l+1)], [A(n+r+1,k),
    A(m+r+1,k+l+1)]]  =  sum_{i=0}^r A(n+i,0) * A*(m+r-i,l),
    with M_r = min(n+r+1, m+r-l) and A* the x=y specialization.
    """
    if n < 0 or r < 0 or not (m >= ell >= 0):
        raise ValueError(f"need n,r >= 0 and m >= l >= 0, got "
                         f"n={n}, m={m}, r={r}, l={ell}")
    m_r = min(n + r + 1, m + r - ell)
    lhs = ZERO
    for k in range(m_r + 1):
        det = (family.prod(n, k, m + r + 1, k + ell + 1)
               - family.prod(m, k + ell + 1, n + r + 1, k))
        lhs = lhs + (family.weight ** k) * det
    rhs = ZERO
    for i in range(r + 1):
        rhs = rhs + family.a(n + i, 0) * family.a_star(m + r - i, ell)
    return VerifyReport("weighted-minor",
                        {"n": n, "m": m, "r": r, "l": ell}, lhs, rhs)


def _h_correction(fam: MinorFamily, n: int, m: int, r: int) -> Poly:
    if r == 0:
        return ZERO
    if r >= 1:
        acc = ZERO
        for i in range(r):
            acc = acc + fam.prod(n + i, 0, m + r - i - 1, 0)
        return acc
    acc = ZERO
    for i in range(1, -r + 1):
        acc = acc + fam.prod(n - i, 0, m + r + i - 1, 0)
    return -acc


def verify_weighted_permanent(n: int, m: int, r: int,
                              family: MinorFamily) -> VerifyReport:
    """Weighted 2x2 permanent sum for sigma=(y,y,...), tau=(z,z,...):

    sum_{k=0}^m z^k * per [[A(n,k), A(n+r,k+1)], [A(m,k), A(m+r,k+1)]]
      = A(m+n+r, 1) + H(n, m, r).
    """
    if not (m >= n >= 0):
        raise ValueError(f"need m >= n >= 0, got n={n}, m={m}")
    if r < 0 and n < -r:
        raise ValueError(f"index underflow in H: r={r} requires n >= {-r}")
    lhs = ZERO
    for k in range(m + 1):
        per = (family.prod(n, k, m + r, k + 1)
               + family.prod(n + r, k + 1, m, k))
        lhs = lhs + (family.weight ** k) * per
    rhs = family.a(m + n + r, 1) + _h_correction(family, n, m, r)
    return VerifyReport("weighted-permanent",
                        {"n": n, "m": m, "r": r}, lhs, rhs)


# -- alternating minor sums of the Narayana triangle ----------------------


@lru_cache(maxsize=None)
def compute_F(m: int, n: int) -> Poly:
    """Alternating weighted minor sum

    sum_{k=0}^n (-z)^k * det [[N(n,k), N(n,k+1)], [N(m,k), N(m,k+1)]]

    over the Narayana triangle (entries with k > row are zero).
    """
    if m < 0 or n < 0:
        raise ValueError("m, n must be non-negative")

    def nn(row, col):
        return narayana_entry(row, col) if col <= row else ZERO

    acc = ZERO
    minus_z = -Z
    for k in range(n + 1):
        det = nn(n, k) * nn(m, k + 1) - nn(n, k + 1) * nn(m, k)
        acc = acc + (minus_z ** k) * det
    return acc


def verify_F_recurrence(m: int, n: int) -> VerifyReport:
    """F(m,n) = 2(z+1) F(m-1,n) - F(m-1,n+1)."""
    if m < 1:
        raise ValueError("recurrence needs m >= 1")
    lhs = compute_F(m, n)
    rhs = 2 * (Z + 1) * compute_F(m - 1, n) - compute_F(m - 1, n + 1)
    return VerifyReport("F-recurrence", {"m": m, "n": n}, lhs, rhs)


def F_closed_form(m: int, n: int) -> Poly:
    """Closed form for m > n >= 0:

    sum_j (-1)^j C(m-n-1-j, j) N_{n+j}(z^2) (2(z+1))^(m-n-1-2j).
    """
    if not (m > n >= 0):
        raise ValueError(f"closed form requires m > n >= 0, got ({m}, {n})")
    d = m - n - 1
    base = 2 * (Z + 1)
    acc = ZERO
    for j in range(d // 2 + 1):
        c = binomial(d - j, j)
        if not c:
            continue
        term = Poly.const((-1) ** j * c) * \
            narayana_poly(n + j).subst("z", Z * Z) * (base ** (d - 2 * j))
        acc = acc + term
    return acc


def verify_catalan_corollary(m: int, n: int) -> VerifyReport:
    """The z = 1 specialization of the closed form, as pure numbers.

    lhs is assembled from exact rationals and asserted integral.
    """
    if not (m > n >= 0):
        raise ValueError(f"requires m > n >= 0, got ({m}, {n})")
    lhs = Fraction(0)
    denom = (n + 1) * (2 * n + 3) * (m + 1) * (2 * m + 3)
    for k in range(n + 1):
        num = (m - n) * (k + 1) * (k + 2) * (2 * k + 3)
        lhs += ((-1) ** k * Fraction(num, denom)
                * binomial(2 * n + 3, n - k) * binomial(2 * m + 3, m - k))
    if lhs.denominator != 1:
        raise ValueError(f"non-integral lhs {lhs} at ({m}, {n})")
    d = m - n - 1
    rhs = 0
    for j in range(d // 2 + 1):
        i = n + j
        catalan = binomial(2 * i + 3, i + 1) // (2 * i + 3)
        rhs += (-1) ** j * binomial(d - j, j) * catalan * 4 ** (d - 2 * j)
    return VerifyReport("catalan-corollary", {"m": m, "n": n},
                        Poly.const(lhs), Poly.const(rhs))


# -- the tau = 0 family ----------------------------------------------------


def verify_thm4(m: int, n: int) -> VerifyReport:
    """Weighted minor sum of the tau = 0 triangle:

    sum_k y^(2k) det [[M(n,k), M(n,k+1)], [M(m,k), M(m,k+1)]]
      = sum_{k=1}^{max(m,n)} (C(m+n-k, n) - C(m+n-k, m)) x^(k-1) y^(m+n-k).
    """
    if m < 0 or n < 0:
        raise ValueError("m, n must be non-negative")

    def mm(row, col):
        return m_entry(row, col) if 0 <= col <= row else ZERO

    lhs = ZERO
    for k in range(min(m, n) + 1):
        det = mm(n, k) * mm(m, k + 1) - mm(n, k + 1) * mm(m, k)
        lhs = lhs + (Y ** (2 * k)) * det
    rhs = ZERO
    for k in range(1, max(m, n) + 1):
        c = binomial(m + n - k, n) - binomial(m + n - k, m)
        if c:
            rhs = rhs + Poly.const(c) * (X ** (k - 1)) * (Y ** (m + n - k))
    return VerifyReport("thm4-minor", {"m": m, "n": n}, lhs, rhs)


def ballot_number(n: int, k: int) -> int:
    """(k+1)/(n+1) * C(2n-k, n)."""
    num = (k + 1) * binomial(2 * n - k, n)
    q, rem = divmod(num, n + 1)
    if rem:
        raise ValueError(f"ballot number not integral at ({n}, {k})")
    return q


def verify_ballot(n: int) -> VerifyReport:
    """m = n+1 case of the tau = 0 minor sum, against ballot numbers."""
    if n < 0:
        raise ValueError("n must be non-negative")
    report = verify_thm4(n + 1, n)
    rhs = ZERO
    for k in range(n + 1):
        rhs = rhs + Poly.const(ballot_number(n, k)) * (X ** k) * \
            (Y ** (2 * n - k))
    return VerifyReport("ballot", {"n": n}, report.lhs, rhs)


# -- specialization suite --------------------------------------------------


def _schroder_minor(n: int, m: int, tri: Triangle) -> Poly:
    acc = ZERO
    for k in range(m + 1):
        det = (tri.at(n, k) * tri.at(m + 1, k + 1)
               - tri.at(m, k + 1) * tri.at(n + 1, k))
        acc = acc + Poly.const(2 ** k) * det
    return acc


def _schroder_permanent(n: int, m: int, tri: Triangle) -> Poly:
    acc = ZERO
    for k in range(m + 1):
        per = (tri.at(n, k) * tri.at(m, k + 1)
               + tri.at(n, k + 1) * tri.at(m, k))
        acc = acc + Poly.const(2 ** k) * per
    return acc


def _narayana_minor(n: int, m: int) -> Poly:
    def nn(row, col):
        return narayana_entry(row, col) if col <= row else ZERO

    acc = ZERO
    for k in range(m + 1):
        det = nn(n, k) * nn(m + 1, k + 1) - nn(m, k + 1) * nn(n + 1, k)
        acc = acc + (Z ** k) * det
    return acc


def _narayana_permanent(n: int, m: int) -> Poly:
    def nn(row, col):
        return narayana_entry(row, col) if col <= row else ZERO

    acc = ZERO
    for k in range(m + 1):
        per = nn(n, k) * nn(m, k + 1) + nn(n, k + 1) * nn(m, k)
        acc = acc + (Z ** k) * per
    return acc


def verify_specializations(depth: int, pair_max: int = None) -> list:
    """Entry specializations plus the little-Schroder / Narayana corollaries.

    pair_max bounds the (n, m) grid for the corollary sweeps; it defaults
    to depth - 2 so every referenced row stays inside the triangle.
    """
    if depth < 2:
        raise ValueError("depth must be at least 2")
    if pair_max is None:
        pair_max = depth - 2
    reports = []
    # the permanent corollary reaches row m+n of the Schroder triangle
    schroder = build_triangle(SCHRODER_SPEC, max(depth, 2 * pair_max,
                                                 pair_max + 2))

    def shapiro_entry(nn, kk):
        return Fraction((kk + 1) * binomial(2 * nn + 2, nn - kk), nn + 1)

    for n in range(depth + 1):
        for k in range(n + 1):
            entry = narayana_entry(n, k)
            reports.append(VerifyReport(
                "narayana-at-0", {"n": n, "k": k},
                entry.subst("z", 0), Poly.const(binomial(n, k))))
            reports.append(VerifyReport(
                "narayana-at-1", {"n": n, "k": k},
                entry.subst("z", 1), Poly.const(shapiro_entry(n, k))))
            reports.append(VerifyReport(
                "narayana-at-2", {"n": n, "k": k},
                entry.subst("z", 2), schroder.entry(n, k)))

    for n in range(pair_max + 1):
        for m in range(n, pair_max + 1):
            reports.append(VerifyReport(
                "schroder-minor-product", {"n": n, "m": m},
                _schroder_minor(n, m, schroder),
                schroder.at(n, 0) * schroder.at(m, 0)))
            reports.append(VerifyReport(
                "schroder-permanent-column", {"n": n, "m": m},
                _schroder_permanent(n, m, schroder),
                schroder.at(m + n, 1)))
            reports.append(VerifyReport(
                "narayana-minor-product", {"n": n, "m": m},
                _narayana_minor(n, m),
                narayana_poly(n) * narayana_poly(m)))
            reports.append(VerifyReport(
                "narayana-permanent-column", {"n": n, "m": m},
                _narayana_permanent(n, m),
                narayana_entry(m + n, 1) if m + n >= 1 else ZERO))
    return reports


# -- gamma-basis expansion -------------------------------------------------


def is_palindromic_in_z(p: Poly) -> bool:
    if p.is_zero():
        return True
    d = p.degree_in("z")
    return all(p.coeff_of("z", i) == p.coeff_of("z", d - i)
               for i in range(d + 1))


def gamma_expand(p: Poly) -> list:
    """Coefficients of a palindromic polynomial over {z^j (1+z)^(d-2j)}.

    Strips basis elements from the bottom degree up; the expansion is unique
    and reconstructs p exactly (asserted).  Coefficients may be rational.
    """
    if p.variables() not in ((), ("z",)):
        raise ValueError("gamma expansion is defined for polynomials in z only")
    if not is_palindromic_in_z(p):
        raise ValueError(f"not palindromic in z: {p}")
    if p.is_zero():
        return []
    d = p.degree_in("z")
    zp1 = Z + 1
    residual = p
    coeffs = []
    for j in range(d // 2 + 1):
        c = residual.coeff_of("z", j).constant_value()
        coeffs.append(c)
        if c:
            residual = residual - Poly.const(c) * (Z ** j) * \
                (zp1 ** (d - 2 * j))
    if not residual.is_zero():
        raise AssertionError(f"gamma expansion residual nonzero: {residual}")
    return coeffs
