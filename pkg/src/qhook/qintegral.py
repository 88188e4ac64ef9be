"""Jackson q-integrals of polynomials over the ordered simplex and chained regions.

All integrals reduce to the polynomial rule

    int_lo^hi v^k d_q v = (1 - q) (hi^{k+1} - lo^{k+1}) / (1 - q^{k+1})

applied one variable at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

import flint

from .multipoly import MPoly, partitions_in_box
from .qfield import ZERO, PolyQ, RatQ, TruncSeries, series_expand

_fz = flint.fmpz_poly


@dataclass(frozen=True)
class Var:
    """A bound that refers to another (not yet integrated) variable."""

    index: int


Bound = Union[int, Var]


@dataclass(frozen=True)
class Region:
    """Ordered integration steps (variable, lower, upper); the first step is innermost."""

    steps: tuple[tuple[int, Bound, Bound], ...]

    @classmethod
    def simplex(cls, n: int, offset: int = 0) -> "Region":
        """0 <= x_1 <= ... <= x_n <= 1 on variables offset..offset+n-1."""
        steps = []
        for i in range(n):
            hi: Bound = Var(offset + i + 1) if i < n - 1 else 1
            steps.append((offset + i, 0, hi))
        return cls(tuple(steps))

    @classmethod
    def chained(cls, order: Sequence[int]) -> "Region":
        """The chain 0 <= x_order[0] <= ... <= x_order[-1] <= 1, innermost first."""
        steps = []
        for pos, v in enumerate(order):
            hi: Bound = Var(order[pos + 1]) if pos + 1 < len(order) else 1
            steps.append((v, 0, hi))
        return cls(tuple(steps))

    def variables(self) -> list[int]:
        return [v for v, _, _ in self.steps]

    def validate(self, nvars: int, complete: bool = True) -> None:
        seen: set[int] = set()
        for v, lo, hi in self.steps:
            if not 0 <= v < nvars:
                raise ValueError(f"step variable x{v + 1} out of range")
            if v in seen:
                raise ValueError(f"variable x{v + 1} integrated twice")
            for b in (lo, hi):
                if isinstance(b, Var):
                    if b.index == v:
                        raise ValueError(f"x{v + 1} bounds itself")
                    if b.index in seen:
                        raise ValueError(f"bound x{b.index + 1} of x{v + 1} is already integrated")
                    if not 0 <= b.index < nvars:
                        raise ValueError("bound variable out of range")
                elif b not in (0, 1):
                    raise ValueError(f"bound {b!r} is not 0, 1 or a variable")
            seen.add(v)
        if complete and seen != set(range(nvars)):
            missing = sorted(set(range(nvars)) - seen)
            raise ValueError(f"region leaves variables free: {[f'x{i + 1}' for i in missing]}")


@lru_cache(maxsize=None)
def _step_factor(k: int) -> RatQ:
    """(1 - q) / (1 - q^{k+1}) = 1 / [k+1]_q."""
    return RatQ(1, PolyQ([1] * (k + 1)))


def integrate_monomial_simplex(a: Sequence[int], n: int | None = None) -> RatQ:
    a = tuple(a)
    if n is None:
        n = len(a)
    if len(a) != n or any(x < 0 for x in a):
        raise ValueError("exponent vector must have n nonnegative entries")
    den = _fz([1])
    s = 0
    for i, x in enumerate(a, start=1):
        s += x
        den = den * _fz([1] * (s + i))
    return RatQ(1, PolyQ(den))


def integrate_simplex_by_monomials(f: MPoly) -> RatQ:
    """Sum of coefficient times the closed monomial integral (reference route)."""
    acc = ZERO
    for e, c in f.terms.items():
        acc = acc + c * integrate_monomial_simplex(e)
    return acc


def _sum_rats(values: list[RatQ]) -> RatQ:
    """Sum with grouping by denominator to save gcds."""
    if len(values) == 1:
        return values[0]
    groups: dict = {}
    for v in values:
        key = tuple(v._d.coeffs())
        g = groups.get(key)
        if g is None:
            groups[key] = [v._n, v._d]
        else:
            g[0] = g[0] + v._n
    parts = [RatQ(PolyQ(n), PolyQ(d)) for n, d in groups.values()]
    acc = parts[0]
    for p in parts[1:]:
        acc = acc + p
    return acc


def _bound_apply(e: list[int], b: Bound, power: int) -> bool:
    """Multiply the monomial e by b^power in place; False if b == 0."""
    if isinstance(b, Var):
        e[b.index] += power
        return True
    return b == 1


def integrate_step(f: MPoly, v: int, lo: Bound, hi: Bound) -> MPoly:
    buckets: dict[tuple[int, ...], list[RatQ]] = {}
    for e, c in f.terms.items():
        k = e[v]
        fac = c * _step_factor(k)
        for b, sgn in ((hi, 1), (lo, -1)):
            ne = list(e)
            ne[v] = 0
            if not _bound_apply(ne, b, k + 1):
                continue
            key = tuple(ne)
            buckets.setdefault(key, []).append(fac if sgn > 0 else -fac)
    out = {}
    for key, vals in buckets.items():
        s = _sum_rats(vals)
        if not s.is_zero():
            out[key] = s
    return MPoly._raw(f.nvars, out)


def integrate_steps(f: MPoly, r: Region) -> MPoly:
    """Apply the steps of r in order; the result may still depend on free variables."""
    r.validate(f.nvars, complete=False)
    for v, lo, hi in r.steps:
        f = integrate_step(f, v, lo, hi)
    return f


def integrate_region(f: MPoly, r: Region) -> RatQ:
    r.validate(f.nvars, complete=True)
    g = integrate_steps(f, r)
    if g.free_vars():
        raise AssertionError("free variables remain after a complete region")
    return g.constant_term()


def integrate_simplex(f: MPoly) -> RatQ:
    """Integral over 0 <= x_1 <= ... <= x_n <= 1, one variable at a time.

    Integrating x_1 first merges all monomials with equal partial sums, so this
    is the monomial formula evaluated along a prefix-sum trie.
    """
    if f.is_zero():
        return ZERO
    return integrate_region(f, Region.simplex(f.nvars))


def partition_sum_oracle(f: MPoly, N: int) -> TruncSeries:
    """(1-q)^n sum over mu in Par_n of q^|mu| f(q^mu), truncated at q^N."""
    n = f.nvars
    for e in f.terms:
        if any(a < 0 for a in e):
            raise ValueError("oracle needs nonnegative exponents")
    coeffs = [Fraction(0)] * (N + 1)
    # each coefficient c(q) is expanded as a series once
    cser = {e: series_expand(c, N).coeffs for e, c in f.terms.items()}
    for mu in partitions_in_box(n, N):
        base = sum(mu)
        if base > N:
            continue
        for e, cs in cser.items():
            d = base + sum(a * m for a, m in zip(e, mu))
            if d > N:
                continue
            for i in range(N + 1 - d):
                if cs[i]:
                    coeffs[d + i] += cs[i]
    # times (1-q)^n
    for _ in range(n):
        for i in range(N, 0, -1):
            coeffs[i] -= coeffs[i - 1]
    return TruncSeries(coeffs, N)
