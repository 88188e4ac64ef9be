"""Exact arithmetic in Q(q): integer polynomials, reduced fractions, truncated series.

Polynomial multiplication and gcd are delegated to FLINT (``python-flint``);
this module only fixes the canonical forms and the small q-series vocabulary
(q-powers, factors ``1 - q^e``, Pochhammer products) used everywhere else.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import flint

_fz = flint.fmpz_poly


class PolyQ:
    """Univariate polynomial in q with integer coefficients.

    Immutable.  Canonical form is the dense FLINT representation, which never
    stores leading zeros; :attr:`coeffs` exposes the sparse ``(exp, coeff)``
    view with increasing exponents.
    """

    __slots__ = ("_p",)

    def __init__(self, coeffs: Iterable[int] | None = None):
        if coeffs is None:
            self._p = _fz()
        elif isinstance(coeffs, _fz):
            self._p = coeffs
        else:
            self._p = _fz(list(coeffs))

    @classmethod
    def _wrap(cls, p) -> "PolyQ":
        obj = cls.__new__(cls)
        obj._p = p
        return obj

    def __reduce__(self):
        # FLINT objects do not pickle; worker processes need this
        return (PolyQ, ([int(c) for c in self._p.coeffs()],))

    @classmethod
    def from_terms(cls, terms: dict[int, int] | Iterable[tuple[int, int]]) -> "PolyQ":
        items = terms.items() if isinstance(terms, dict) else terms
        dense: dict[int, int] = {}
        for e, c in items:
            if e < 0:
                raise ValueError("negative exponent in PolyQ")
            dense[e] = dense.get(e, 0) + c
        if not dense:
            return cls()
        top = max(dense)
        return cls([dense.get(i, 0) for i in range(top + 1)])

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "PolyQ":
        return cls([0] * e + [c])

    # -- views -----------------------------------------------------------
    @property
    def coeffs(self) -> list[tuple[int, int]]:
        return [(i, int(c)) for i, c in enumerate(self._p.coeffs()) if c != 0]

    def dense(self) -> list[int]:
        return [int(c) for c in self._p.coeffs()]

    def degree(self) -> int:
        return self._p.degree()

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_one(self) -> bool:
        return self._p.is_one()

    def leading(self) -> int:
        return int(self._p.leading_coefficient())

    def content(self) -> int:
        return int(self._p.content())

    def __call__(self, x):
        return self._p(x)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = PolyQ([other])
        return PolyQ._wrap(self._p + other._p)

    __radd__ = __add__

    def __neg__(self):
        return PolyQ._wrap(-self._p)

    def __sub__(self, other):
        if isinstance(other, int):
            other = PolyQ([other])
        return PolyQ._wrap(self._p - other._p)

    def __rsub__(self, other):
        return PolyQ([other]) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return PolyQ._wrap(self._p * other)
        return PolyQ._wrap(self._p * other._p)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return PolyQ._wrap(self._p ** k)

    def __divmod__(self, other):
        q, r = divmod(self._p, other._p)
        return PolyQ._wrap(q), PolyQ._wrap(r)

    def exact_div(self, other: "PolyQ") -> "PolyQ":
        q, r = divmod(self._p, other._p)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return PolyQ._wrap(q)

    def __eq__(self, other):
        if isinstance(other, int):
            other = PolyQ([other])
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self._p == other._p

    def __hash__(self):
        return hash(tuple(self.dense()))

    def __repr__(self):
        return f"PolyQ({self.dense()})"

    def __str__(self):
        return format_poly(self)


def poly_mul(a: PolyQ, b: PolyQ) -> PolyQ:
    return a * b


def poly_gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    """Canonical gcd: content 1 and positive leading coefficient.

    ``gcd(0, 0)`` is 0 by convention.
    """
    if a.is_zero() and b.is_zero():
        return PolyQ()
    g = a._p.gcd(b._p)
    c = g.content()
    if c != 1:
        g = _fz([x // c for x in g.coeffs()])
    if g.leading_coefficient() < 0:
        g = -g
    return PolyQ._wrap(g)


def format_poly(p: PolyQ, var: str = "q") -> str:
    if p.is_zero():
        return "0"
    out = []
    for e, c in reversed(p.coeffs):
        if e == 0:
            mono = str(abs(c))
        else:
            pw = var if e == 1 else f"{var}^{e}"
            mono = pw if abs(c) == 1 else f"{abs(c)}*{pw}"
        sign = "-" if c < 0 else "+"
        out.append((sign, mono))
    first_sign, first = out[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, mono in out[1:]:
        s += f" {sign} {mono}"
    return s


_ONE = _fz([1])
_ZERO = _fz()


class RatQ:
    """Reduced fraction num/den of integer polynomials in q.

    Normal form: ``gcd(num, den) = 1`` in Z[q] (so the integer contents are
    coprime too) and ``den`` has positive leading coefficient.  For every value
    that arises from integral data this makes ``den`` primitive.  Zero is 0/1.
    """

    __slots__ = ("_n", "_d")

    def __init__(self, num=0, den=1):
        n = _as_fz(num)
        d = _as_fz(den)
        if d.is_zero():
            raise ZeroDivisionError("RatQ with zero denominator")
        self._n, self._d = _normalize(n, d)

    @classmethod
    def _raw(cls, n, d) -> "RatQ":
        obj = cls.__new__(cls)
        obj._n = n
        obj._d = d
        return obj

    def __reduce__(self):
        return (_ratq_from_lists, ([int(c) for c in self._n.coeffs()], [int(c) for c in self._d.coeffs()]))

    @property
    def num(self) -> PolyQ:
        return PolyQ._wrap(self._n)

    @property
    def den(self) -> PolyQ:
        return PolyQ._wrap(self._d)

    def is_zero(self) -> bool:
        return self._n.is_zero()

    def is_polynomial(self) -> bool:
        return self._d.is_one()

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        an, ad, bn, bd = self._n, self._d, other._n, other._d
        if an.is_zero():
            return other
        if bn.is_zero():
            return self
        if ad == bd:
            if ad.is_one():
                return RatQ._raw(an + bn, ad)
            return RatQ._raw(*_normalize(an + bn, ad))
        g = ad.gcd(bd)
        if g.is_one():
            return RatQ._raw(*_normalize(an * bd + bn * ad, ad * bd))
        adg = ad // g
        bdg = bd // g
        n = an * bdg + bn * adg
        return RatQ._raw(*_normalize(n, adg * bd))

    __radd__ = __add__

    def __neg__(self):
        return RatQ._raw(-self._n, self._d)

    def __sub__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        an, ad, bn, bd = self._n, self._d, other._n, other._d
        if an.is_zero() or bn.is_zero():
            return RatQ._raw(_ZERO, _ONE)
        if ad.is_one() and bd.is_one():
            return RatQ._raw(an * bn, _ONE)
        # cross-cancel; both inputs are already reduced
        g1 = an.gcd(bd)
        g2 = bn.gcd(ad)
        if not g1.is_one():
            an = an // g1
            bd = bd // g1
        if not g2.is_one():
            bn = bn // g2
            ad = ad // g2
        n, d = an * bn, ad * bd
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return RatQ._raw(n, d)

    __rmul__ = __mul__

    def inverse(self) -> "RatQ":
        if self._n.is_zero():
            raise ZeroDivisionError("inverse of zero RatQ")
        n, d = self._d, self._n
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return RatQ._raw(n, d)

    def __truediv__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatQ._raw(self._n ** k, self._d ** k)

    def __eq__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return self._n == other._n and self._d == other._d

    def __hash__(self):
        return hash((tuple(self._n.coeffs()), tuple(self._d.coeffs())))

    def __repr__(self):
        return f"RatQ({self.num!s} / {self.den!s})"

    def __str__(self):
        if self._d.is_one():
            return f"{self.num!s}"
        return f"({self.num!s}) / ({self.den!s})"

    def __call__(self, x):
        """Evaluate at an exact number (int or Fraction)."""
        x = Fraction(x)
        return _eval_fz(self._n, x) / _eval_fz(self._d, x)


def _eval_fz(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs()):
        acc = acc * x + int(c)
    return acc


def _as_fz(v):
    if isinstance(v, PolyQ):
        return v._p
    if isinstance(v, _fz):
        return v
    if isinstance(v, int):
        return _fz([v])
    raise TypeError(f"cannot make a polynomial from {type(v).__name__}")


def _as_rat(v):
    if isinstance(v, RatQ):
        return v
    if isinstance(v, int):
        return RatQ._raw(_fz([v]), _ONE)
    if isinstance(v, PolyQ):
        return RatQ._raw(v._p, _ONE)
    return None


def _normalize(n, d):
    if n.is_zero():
        return _ZERO, _ONE
    g = n.gcd(d)
    if not g.is_one():
        n = n // g
        d = d // g
    if d.leading_coefficient() < 0:
        n, d = -n, -d
    return n, d


def _ratq_from_lists(n, d) -> RatQ:
    return RatQ._raw(_fz(n), _fz(d))


def rat_arith(a: RatQ, b: RatQ, op: str) -> RatQ:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise ZeroDivisionError("division by zero RatQ")
        return a / b
    raise ValueError(f"unknown op {op!r}")


# -- q-series vocabulary ------------------------------------------------

ONE = RatQ(1)
ZERO = RatQ(0)


def q_pow(e: int) -> RatQ:
    """q^e for any integer e (negative powers become 1/q^|e|)."""
    if e >= 0:
        return RatQ._raw(_fz([0] * e + [1]), _ONE)
    return RatQ._raw(_ONE, _fz([0] * (-e) + [1]))


@lru_cache(maxsize=4096)
def _one_minus_fz(e: int):
    return _fz([1] + [0] * (e - 1) + [-1])


def one_minus_q(e: int) -> PolyQ:
    """The factor 1 - q^e, e >= 1."""
    if e < 1:
        raise ValueError(f"1 - q^{e} is not a valid factor here")
    return PolyQ._wrap(_one_minus_fz(e))


def one_plus_q(e: int) -> PolyQ:
    return PolyQ._wrap(_fz([1] + [0] * (e - 1) + [1])) if e >= 1 else PolyQ([2])


def pochhammer(s: int, n: int, step: int = 1) -> PolyQ:
    """(q^s; q^step)_n = prod_{i<n} (1 - q^{s + step*i})."""
    if s < 0 or n < 0:
        raise ValueError("pochhammer needs s, n >= 0")
    if n > 0 and s == 0:
        return PolyQ()
    p = _ONE
    for i in range(n):
        p = p * _one_minus_fz(s + step * i)
    return PolyQ._wrap(p)


class FactorProduct:
    """Accumulates sign * q^shift * prod(P_i^+-1) and builds one RatQ at the end.

    Used for closed-form right-hand sides, so only one gcd is taken.
    """

    __slots__ = ("sign", "shift", "num", "den")

    def __init__(self):
        self.sign = 1
        self.shift = 0
        self.num = _ONE
        self.den = _ONE

    def neg(self, flag: bool = True) -> "FactorProduct":
        if flag:
            self.sign = -self.sign
        return self

    def qpow(self, e: int) -> "FactorProduct":
        self.shift += e
        return self

    def mul(self, p, power: int = 1) -> "FactorProduct":
        p = _as_fz(p)
        if power >= 0:
            self.num = self.num * p ** power
        else:
            self.den = self.den * p ** (-power)
        return self

    def div(self, p, power: int = 1) -> "FactorProduct":
        return self.mul(p, -power)

    def om(self, e: int, power: int = 1) -> "FactorProduct":
        """Multiply by (1 - q^e)^power."""
        return self.mul(_one_minus_fz(e), power) if e >= 1 else self._bad(e)

    def poch(self, s: int, n: int, power: int = 1, step: int = 1) -> "FactorProduct":
        return self.mul(pochhammer(s, n, step), power)

    def _bad(self, e):
        raise ValueError(f"factor 1 - q^{e} vanishes or is not a polynomial")

    def value(self) -> RatQ:
        n, d = self.num * self.sign, self.den
        if self.shift >= 0:
            n = n * _fz([0] * self.shift + [1])
        else:
            d = d * _fz([0] * (-self.shift) + [1])
        return RatQ(PolyQ._wrap(n), PolyQ._wrap(d))


# -- truncated power series --------------------------------------------

class TruncSeries:
    """Power series coefficients of q^0..q^order, exact rationals."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int):
        c = [Fraction(x) for x in list(coeffs)[: order + 1]]
        c += [Fraction(0)] * (order + 1 - len(c))
        self.order = order
        self.coeffs = tuple(c)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        N = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (N + 1)
        for i in range(N + 1):
            ai = a[i]
            if ai:
                for j in range(N + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncSeries(out, N)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        N = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(N + 1)], N)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        N = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] - other.coeffs[i] for i in range(N + 1)], N)

    def scale(self, c) -> "TruncSeries":
        return TruncSeries([c * x for x in self.coeffs], self.order)

    def shift(self, e: int) -> "TruncSeries":
        """Multiply by q^e (e >= 0), keeping the order."""
        return TruncSeries([0] * e + list(self.coeffs), self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def first_mismatch(self, other: "TruncSeries") -> int | None:
        N = min(self.order, other.order)
        for i in range(N + 1):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def as_ints(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("series has non-integral coefficients")
        return [int(c) for c in self.coeffs]

    def __repr__(self):
        return f"TruncSeries({[str(c) for c in self.coeffs]}, order={self.order})"


def series_expand(r: RatQ, N: int) -> TruncSeries:
    """Coefficients of q^0..q^N of the Taylor expansion of r at q = 0."""
    num = [int(c) for c in r._n.coeffs()]
    den = [int(c) for c in r._d.coeffs()]
    if not den or den[0] == 0:
        raise ValueError("denominator vanishes at q = 0; not a power series")
    d0 = den[0]
    out: list = []
    for k in range(N + 1):
        acc = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        if d0 == 1:
            out.append(acc)
        else:
            out.append(Fraction(acc, d0) if not isinstance(acc, Fraction) else acc / d0)
    return TruncSeries(out, N)


def inverse_factor_series(exps: Iterable[int], N: int) -> TruncSeries:
    """Series of prod 1/(1 - q^e), computed by repeated prefix sums."""
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    for e in exps:
        if e < 1:
            raise ValueError("factor exponent must be positive")
        for i in range(e, N + 1):
            coeffs[i] += coeffs[i - e]
    return TruncSeries(coeffs, N)
