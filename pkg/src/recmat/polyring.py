"""Exact sparse multivariate polynomials over the rationals.

The variable set is fixed: (x, y, z, t, n), in that order.  Coefficients are
arbitrary-precision rationals, stored as plain ints whenever the denominator
is 1 (which is the common case; rationals only appear transiently inside
formulas that divide by n+1 and the like).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb, factorial

VARS = ("x", "y", "z", "t", "n")
NVARS = len(VARS)
_VAR_INDEX = {v: i for i, v in enumerate(VARS)}
_ZERO_EXP = (0,) * NVARS

Coef = "int | Fraction"


def _norm_coef(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Poly:
    """Canonical sparse polynomial: exponent tuple -> nonzero coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None, _canonical=False):
        if terms is None:
            self.terms = {}
        elif _canonical:
            self.terms = terms
        else:
            t = {}
            for exp, c in terms.items():
                c = _norm_coef(c)
                if c:
                    t[exp] = c
            self.terms = t

    # -- constructors -----------------------------------------------------

    @staticmethod
    def const(c) -> "Poly":
        c = _norm_coef(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
        return Poly({_ZERO_EXP: c} if c else {}, _canonical=True)

    @staticmethod
    def var(name: str) -> "Poly":
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}; known: {VARS}")
        exp = [0] * NVARS
        exp[_VAR_INDEX[name]] = 1
        return Poly({tuple(exp): 1}, _canonical=True)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_integer(self) -> bool:
        """True iff every coefficient has denominator 1."""
        return all(isinstance(c, int) for c in self.terms.values())

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _ZERO_EXP in self.terms)

    def constant_value(self):
        return self.terms.get(_ZERO_EXP, 0)

    def degree(self):
        """Total degree; -inf for the zero polynomial."""
        if not self.terms:
            return float("-inf")
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str):
        i = _VAR_INDEX[name]
        if not self.terms:
            return float("-inf")
        return max(e[i] for e in self.terms)

    def coeff_of(self, name: str, power: int) -> "Poly":
        """Coefficient of name**power, as a Poly in the remaining variables."""
        i = _VAR_INDEX[name]
        out = {}
        for exp, c in self.terms.items():
            if exp[i] == power:
                e = list(exp)
                e[i] = 0
                out[tuple(e)] = c
        return Poly(out, _canonical=True)

    def variables(self):
        used = [False] * NVARS
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        return tuple(v for i, v in enumerate(VARS) if used[i])

    # -- ring operations --------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for exp, c in b.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = _norm_coef(s)
            else:
                out.pop(exp, None)
        return Poly(out, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()}, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return ZERO
        # single-term shortcut covers scalar and monomial scaling
        if len(b) == 1:
            (be, bc), = b.items()
            if be == _ZERO_EXP:
                out = {}
                for exp, c in a.items():
                    p = _norm_coef(c * bc)
                    if p:
                        out[exp] = p
                return Poly(out, _canonical=True)
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exp = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2],
                       ea[3] + eb[3], ea[4] + eb[4])
                s = out.get(exp, 0) + ca * cb
                if s:
                    out[exp] = s
                else:
                    del out[exp]
        return Poly({e: _norm_coef(c) for e, c in out.items() if c},
                    _canonical=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- substitution -----------------------------------------------------

    def subst(self, name: str, value: "Poly | int | Fraction") -> "Poly":
        """Substitute value for the named variable (exact composition)."""
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}; known: {VARS}")
        i = _VAR_INDEX[name]
        if not isinstance(value, Poly):
            value = Poly.const(value)
        powers = {0: ONE}

        def vpow(e):
            p = powers.get(e)
            if p is None:
                p = vpow(e - 1) * value
                powers[e] = p
            return p

        result = ZERO
        for exp, c in self.terms.items():
            rest = list(exp)
            e = rest[i]
            rest[i] = 0
            mono = Poly({tuple(rest): c}, _canonical=True)
            result = result + (mono * vpow(e) if e else mono)
        return result

    def eval(self, **values):
        """Substitute several variables at once."""
        p = self
        for name, v in values.items():
            p = p.subst(name, v)
        return p

    # -- exact division ---------------------------------------------------

    def exact_div(self, d, require_integer: bool = False) -> "Poly":
        """Divide every coefficient by the nonzero integer (or rational) d.

        With require_integer, raises if any resulting coefficient is not an
        integer — this catches formula-transcription bugs early.
        """
        if d == 0:
            raise ZeroDivisionError("division of polynomial by zero")
        inv = Fraction(1, 1) / Fraction(d)
        out = {}
        for exp, c in self.terms.items():
            q = _norm_coef(c * inv)
            if require_integer and not isinstance(q, int):
                raise ValueError(
                    f"non-integral coefficient {q} dividing by {d}")
            out[exp] = q
        return Poly(out, _canonical=True)

    # -- rendering / parsing ----------------------------------------------

    def _sorted_terms(self):
        # graded lexicographic, highest first
        return sorted(self.terms.items(),
                      key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self._sorted_terms():
            neg = c < 0
            c = -c if neg else c
            mono = "".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(VARS, exp) if e)
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c}{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("-" if neg else "+") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Poly({self})"


ZERO = Poly()
ONE = Poly.const(1)

X = Poly.var("x")
Y = Poly.var("y")
Z = Poly.var("z")
T = Poly.var("t")
N = Poly.var("n")


_TERM_RE = re.compile(
    r"(?P<sign>[+-])?"
    r"(?P<coef>\d+(?:/\d+)?)?"
    r"(?P<mono>(?:[xyztn](?:\^\d+)?)*)")


def parse_poly(text: str) -> Poly:
    """Parse the canonical text form produced by str(Poly)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    if s == "0":
        return ZERO
    pos = 0
    result = ZERO
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
        coef_s, mono_s = m.group("coef"), m.group("mono")
        if coef_s is None and not mono_s:
            raise ValueError(f"empty term in {text!r}")
        coef = Fraction(coef_s) if coef_s else Fraction(1)
        if m.group("sign") == "-":
            coef = -coef
        exp = [0] * NVARS
        for vm in re.finditer(r"([xyztn])(?:\^(\d+))?", mono_s):
            exp[_VAR_INDEX[vm.group(1)]] += int(vm.group(2) or 1)
        result = result + Poly({tuple(exp): coef})
        pos = m.end()
    return result


def binomial(top: int, bottom: int) -> int:
    """Binomial coefficient with integer (possibly negative) top.

    Falling-factorial definition: 0 for bottom < 0, and
    top*(top-1)*...*(top-bottom+1)/bottom! otherwise.  Always an integer.
    """
    if bottom < 0:
        return 0
    if top >= 0:
        return comb(top, bottom)
    # C(top, k) = (-1)^k * C(k - top - 1, k) for negative top
    num = 1
    for i in range(bottom):
        num *= top - i
    return num // factorial(bottom)
