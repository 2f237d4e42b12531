"""Recursive-matrix triangles built from (sigma, tau) specifications.

A triangle is the lower-triangular array with entry (0,0) = 1 and

    A[n][k] = A[n-1][k-1] + sigma_k * A[n-1][k] + tau_{k+1} * A[n-1][k+1]

where out-of-range entries are zero.  sigma and tau are eventually-constant
sequences of polynomials; tau values must be nonzero unless the degenerate
tau = 0 family is explicitly opted into.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .polyring import ONE, T, X, Y, Z, ZERO, Poly, binomial
from .series import Series, geometric, lagrange_coeff, riordan_entry, solve_f


def _as_poly(v) -> Poly:
    return v if isinstance(v, Poly) else Poly.const(v)


@dataclass(frozen=True)
class SigmaTauSpec:
    """Eventually-constant (sigma, tau) pair; tau is indexed from 1."""

    sigma_head: tuple = ()
    sigma_tail: Poly = ONE
    tau_head: tuple = ()
    tau_tail: Poly = ONE
    allow_zero_tau: bool = False

    def __post_init__(self):
        object.__setattr__(self, "sigma_head",
                           tuple(_as_poly(p) for p in self.sigma_head))
        object.__setattr__(self, "sigma_tail", _as_poly(self.sigma_tail))
        object.__setattr__(self, "tau_head",
                           tuple(_as_poly(p) for p in self.tau_head))
        object.__setattr__(self, "tau_tail", _as_poly(self.tau_tail))
        if not self.allow_zero_tau:
            if self.tau_tail.is_zero() or any(
                    p.is_zero() for p in self.tau_head):
                raise ValueError(
                    "tau values must be nonzero (pass allow_zero_tau=True "
                    "for the degenerate family)")

    def sigma(self, k: int) -> Poly:
        return self.sigma_head[k] if k < len(self.sigma_head) else self.sigma_tail

    def tau(self, i: int) -> Poly:
        # tau_1 is the first element
        return self.tau_head[i - 1] if i - 1 < len(self.tau_head) else self.tau_tail


@dataclass(frozen=True)
class Triangle:
    spec: SigmaTauSpec
    depth: int
    rows: tuple = field(repr=False)

    def entry(self, n: int, k: int) -> Poly:
        if n > self.depth:
            raise IndexError(f"row {n} beyond depth {self.depth}")
        if not (0 <= k <= n):
            raise IndexError(f"column {k} out of range for row {n}")
        return self.rows[n][k]

    def at(self, n: int, k: int) -> Poly:
        """Total accessor: zero outside the triangular support."""
        if n < 0 or k < 0 or k > n:
            return ZERO
        if n > self.depth:
            raise IndexError(f"row {n} beyond depth {self.depth}")
        return self.rows[n][k]


def build_triangle(spec: SigmaTauSpec, depth: int) -> Triangle:
    if depth < 0:
        raise ValueError("depth must be non-negative")
    rows = [(ONE,)]
    for n in range(1, depth + 1):
        prev = rows[n - 1]

        def p(k):
            return prev[k] if 0 <= k <= n - 1 else ZERO

        row = tuple(
            p(k - 1) + spec.sigma(k) * p(k) + spec.tau(k + 1) * p(k + 1)
            for k in range(n + 1))
        rows.append(row)
    return Triangle(spec=spec, depth=depth, rows=tuple(rows))


# -- named families -------------------------------------------------------

SHAPIRO_SPEC = SigmaTauSpec(sigma_tail=Poly.const(2), tau_tail=ONE)
SCHRODER_SPEC = SigmaTauSpec(sigma_tail=Poly.const(3), tau_tail=Poly.const(2))
NARAYANA_SPEC = SigmaTauSpec(sigma_tail=Z + 1, tau_tail=Z)
PASCAL_SPEC = SigmaTauSpec(sigma_tail=ONE, tau_tail=ZERO, allow_zero_tau=True)
XY0_SPEC = SigmaTauSpec(sigma_head=(X,), sigma_tail=Y, tau_tail=ZERO,
                        allow_zero_tau=True)
GENERIC_SPEC = SigmaTauSpec(sigma_head=(X,), sigma_tail=Y, tau_tail=Z)
PERMANENT_SPEC = SigmaTauSpec(sigma_tail=Y, tau_tail=Z)

FAMILIES = {
    "shapiro": SHAPIRO_SPEC,
    "schroder": SCHRODER_SPEC,
    "narayana": NARAYANA_SPEC,
    "pascal": PASCAL_SPEC,
    "xy0": XY0_SPEC,
    "generic": GENERIC_SPEC,
}


# -- closed-form entry families ------------------------------------------


@lru_cache(maxsize=None)
def narayana_entry(n: int, k: int) -> Poly:
    """Generalized Narayana polynomial entry (exact, integer coefficients)."""
    return lagrange_coeff(k, n)


def cigler_entry(n: int, k: int) -> Poly:
    """Alternative expansion of the same entries, via weighted NSEW paths:

    sum_i (k+1)/(i+k+1) * C(n, 2i+k) * C(k+2i, i) * z^i * (1+z)^(n-k-2i).
    """
    if not (0 <= k <= n):
        raise ValueError(f"need 0 <= k <= n, got ({n}, {k})")
    zp1 = Z + 1
    acc = ZERO
    for i in range((n - k) // 2 + 1):
        c = Fraction((k + 1) * binomial(n, 2 * i + k) * binomial(k + 2 * i, i),
                     i + k + 1)
        if c:
            acc = acc + (Z ** i) * (zp1 ** (n - k - 2 * i)) * Poly.const(c)
    if not acc.is_integer():
        raise ValueError(f"non-integral entry at ({n}, {k}): {acc}")
    return acc


def m_entry(n: int, k: int) -> Poly:
    """Entry of the tau = 0 family: sum_j C(j+k-1, j) x^(n-k-j) y^j.

    The negative-top convention C(-1, 0) = 1 makes column 0 equal x^n.
    """
    if not (0 <= k <= n):
        raise ValueError(f"need 0 <= k <= n, got ({n}, {k})")
    acc = ZERO
    for j in range(n - k + 1):
        c = binomial(j + k - 1, j)
        if c:
            acc = acc + Poly.const(c) * (X ** (n - k - j)) * (Y ** j)
    return acc


def narayana_poly(n: int) -> Poly:
    """Classical Narayana polynomial: column 0 of the Narayana triangle."""
    return narayana_entry(n, 0)


# -- cross-checks ---------------------------------------------------------


def homogeneity_check(depth: int) -> bool:
    """Weight invariance of the sigma=(x,y,...), tau=(z,...) triangle.

    Scaling x -> t*x, y -> t*y, z -> t^2*z must multiply entry (n,k)
    by t^(n-k) exactly.
    """
    tri = build_triangle(GENERIC_SPEC, depth)
    for n in range(depth + 1):
        for k in range(n + 1):
            a = tri.entry(n, k)
            scaled = a.subst("x", T * X).subst("y", T * Y).subst("z", T * T * Z)
            if scaled != (T ** (n - k)) * a:
                return False
    return True


def riordan_series(spec: SigmaTauSpec, order: int):
    """(g, f) for a spec with sigma constant after index 0 and constant tau."""
    if len(spec.sigma_head) > 1 or spec.tau_head:
        raise ValueError(
            "Riordan form requires sigma constant after index 0 and "
            "constant tau")
    sigma0 = spec.sigma(0)
    a_series = Series.from_polys([ONE, spec.sigma_tail, spec.tau_tail],
                                 max(order, 2))
    f = solve_f(a_series, order)
    # Z(v) = sigma0 + tau*v, so g = 1/(1 - v*Z(f(v)))
    zf = f.scale(spec.tau_tail) + Series.from_polys([sigma0], order)
    one = Series.from_polys([ONE], order)
    g = (one - zf.shift(1)).recip()
    return g, f


def riordan_crosscheck(spec: SigmaTauSpec, depth: int) -> bool:
    """Recurrence-built entries against [v^n] g*f^k, exhaustively."""
    tri = build_triangle(spec, depth)
    g, f = riordan_series(spec, depth)
    for n in range(depth + 1):
        for k in range(n + 1):
            if riordan_entry(g, f, n, k) != tri.entry(n, k):
                return False
    return True
