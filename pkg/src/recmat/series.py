"""Truncated formal power series in v with polynomial coefficients.

Every series carries its truncation order; coefficients beyond it are
unknown, not zero.  Operations refuse to fabricate unknown coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from .polyring import ONE, ZERO, Poly, binomial


class TruncationError(Exception):
    """A coefficient beyond the known truncation order was requested."""


class Series:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [c if isinstance(c, Poly) else Poly.const(c) for c in coeffs]
        if not coeffs:
            raise ValueError("a series needs at least its constant term")
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def from_polys(polys, order: int) -> "Series":
        """Exact polynomial in v, zero-padded to the requested order."""
        polys = list(polys)
        if len(polys) > order + 1:
            raise ValueError("polynomial longer than requested order")
        polys = polys + [ZERO] * (order + 1 - len(polys))
        return Series(polys)

    def __getitem__(self, i: int) -> Poly:
        if i < 0:
            return ZERO
        if i > self.order:
            raise TruncationError(
                f"coefficient of v^{i} unknown (order {self.order})")
        return self.coeffs[i]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise TruncationError(
                f"cannot extend series of order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs])

    def scale(self, p) -> "Series":
        return Series([c * p for c in self.coeffs])

    def __mul__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        out = [ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Series(out)

    def shift(self, k: int = 1) -> "Series":
        """Multiply by v^k (drops the top k known coefficients)."""
        if k < 0:
            raise ValueError("negative shift")
        return Series(([ZERO] * k + self.coeffs)[: self.order + 1])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def recip(self) -> "Series":
        """Multiplicative inverse up to the truncation order."""
        c0 = self.coeffs[0]
        if not c0.is_constant() or c0.is_zero():
            raise ValueError(
                f"constant term {c0} is not an invertible constant")
        inv0 = Poly.const(Fraction(1, 1) / Fraction(c0.constant_value()))
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = ZERO
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * out[k - i]
            out.append(-(inv0 * acc))
        return Series(out)

    def compose(self, inner: "Series") -> "Series":
        """self(inner(v)); inner must have zero constant term."""
        if not inner.coeffs[0].is_zero():
            raise ValueError("inner series must vanish at v=0")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        out = Series.from_polys([self.coeffs[0]], n)
        power = Series.from_polys([ONE], n)
        for i in range(1, n + 1):
            power = power * inner
            c = self.coeffs[i]
            if not c.is_zero():
                out = out + power.scale(c)
        return out

    def __str__(self):
        parts = [f"({c})v^{i}" for i, c in enumerate(self.coeffs)
                 if not c.is_zero()]
        return (" + ".join(parts) or "0") + f" + O(v^{self.order + 1})"

    __repr__ = __str__


def geometric(p: Poly, order: int) -> "Series":
    """1/(1 - p*v) = sum of p^i v^i."""
    coeffs, cur = [], ONE
    for _ in range(order + 1):
        coeffs.append(cur)
        cur = cur * p
    return Series(coeffs)


def solve_f(A: Series, order: int) -> Series:
    """The unique f with f(0)=0 and f = v*A(f(v)), to the given order.

    Fixed-point iteration gains one exact coefficient per pass, so `order`
    passes suffice.
    """
    if A.coeffs[0].is_zero():
        raise ValueError("A(0) must be nonzero for f to be invertible")
    if A.order < order:
        raise TruncationError(
            f"A known only to order {A.order}, need {order}")
    f = Series.from_polys([ZERO], order)
    for _ in range(order):
        f = A.compose(f).shift(1)
    return f


def riordan_entry(g: Series, f: Series, n: int, k: int) -> Poly:
    """[v^n] g(v) * f(v)^k."""
    if not (0 <= k <= n):
        raise ValueError(f"need 0 <= k <= n, got ({n}, {k})")
    if g.order < n or f.order < n:
        raise TruncationError(
            f"orders ({g.order}, {f.order}) insufficient for row {n}")
    g = g.truncate(n)
    cur = g
    for _ in range(k):
        cur = cur * f.truncate(n)
    return cur[n]


def lagrange_coeff(k: int, n: int) -> Poly:
    """Entry formula from inverting v(1+f)(1+zf) = f:

    sum_i (k+1)/(n+1) * C(n+1, i) * C(n+1, i+k+1) * z^i, always integral.
    """
    if not (0 <= k <= n):
        raise ValueError(f"need 0 <= k <= n, got ({k}, {n})")
    terms = {}
    z_exp = [0, 0, 0, 0, 0]
    for i in range(n - k + 1):
        num = (k + 1) * binomial(n + 1, i) * binomial(n + 1, i + k + 1)
        c = Fraction(num, n + 1)
        if c:
            z_exp[2] = i
            terms[tuple(z_exp)] = c
    p = Poly(terms)
    if not p.is_integer():
        raise ValueError(f"non-integral entry at ({n}, {k}): {p}")
    return p
