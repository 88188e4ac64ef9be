"""Partial-fraction identities checked by evaluation on a degree-bounded grid.

An identity is a list of terms ``coef * mono * prod(num) / prod(den)`` on each
side, where every factor is a polynomial with known degree in each variable
and ``mono`` is a Laurent monomial.  Multiplying through by the lcm D of all
denominator factors and by a monomial gives a polynomial N; N vanishes
identically iff it vanishes on a product grid with deg_v(N) + 1 points in
every variable v.  N is evaluated without division, so no point is a pole.

The univariate alt_identity is checked exactly in Q(q) instead.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod
from typing import Callable, Sequence

import numpy as np

from ..multipoly import partitions_in_box
from ..qfield import ONE, ZERO, RatQ, q_pow

PF_IDS = ("alt_identity", "a_id", "pfexp1", "pfexp2", "ww_pfe")


@dataclass(frozen=True)
class Factor:
    key: tuple
    degs: tuple[tuple[str, int], ...]
    fn: Callable = field(compare=False, hash=False, repr=False)

    def __call__(self, env):
        return self.fn(env)


def diff(u: str, v: str) -> tuple[int, Factor]:
    """u - v, stored once per unordered pair; returns (sign, factor)."""
    a, b = sorted((u, v))
    f = Factor(("diff", a, b), ((a, 1), (b, 1)), lambda e, a=a, b=b: e[a] - e[b])
    return (1 if (u, v) == (a, b) else -1), f


def one_minus(vars_: Sequence[str]) -> Factor:
    """1 - prod(vars)."""
    vs = tuple(sorted(vars_))
    return Factor(("1-", vs), tuple(Counter(vs).items()), lambda e, vs=vs: 1 - prod(e[v] for v in vs))


def poly(key, degs: dict[str, int], fn) -> Factor:
    return Factor(key, tuple(sorted(degs.items())), fn)


class Term:
    __slots__ = ("coef", "num", "den", "mono")

    def __init__(self, coef: int = 1):
        self.coef = coef
        self.num: Counter = Counter()
        self.den: Counter = Counter()
        self.mono: Counter = Counter()

    def mul(self, f, power: int = 1) -> "Term":
        if isinstance(f, tuple):
            sign, f = f
            if sign < 0 and power % 2:
                self.coef = -self.coef
        if power > 0:
            self.num[f] += power
        else:
            self.den[f] -= power
        return self

    def div(self, f) -> "Term":
        return self.mul(f, -1)

    def x(self, v: str, e: int = 1) -> "Term":
        self.mono[v] += e
        return self

    def reduced(self) -> "Term":
        common = self.num & self.den
        self.num -= common
        self.den -= common
        return self

    def value(self, point: dict[str, Fraction]) -> Fraction:
        out = Fraction(self.coef)
        for f, k in self.num.items():
            out *= Fraction(f(point)) ** k
        for f, k in self.den.items():
            out /= Fraction(f(point)) ** k
        for v, k in self.mono.items():
            out *= Fraction(point[v]) ** k
        return out


@dataclass
class Identity:
    name: str
    variables: tuple[str, ...]
    lhs: list[Term]
    rhs: list[Term]

    def sides_at(self, point: dict) -> tuple[Fraction, Fraction]:
        pt = {v: Fraction(x) for v, x in point.items()}
        return sum((t.value(pt) for t in self.lhs), Fraction(0)), sum((t.value(pt) for t in self.rhs), Fraction(0))


@dataclass
class PFReport:
    name: str
    n: int
    passed: bool
    points: int
    degrees: dict
    seconds: float

    def line(self, timings: bool = True) -> str:
        out = f"PFE {self.name} n={self.n} {'PASS' if self.passed else 'FAIL'} points={self.points}"
        return f"{out} {self.seconds:.3f}" if timings else out


def _cleared(ident: Identity):
    """Signed terms of N as (coef, factor multiset, monomial) and the degree bound."""
    terms = [(t, 1) for t in ident.lhs] + [(t, -1) for t in ident.rhs]
    for t, _ in terms:
        t.reduced()
    D: Counter = Counter()
    for t, _ in terms:
        D |= t.den
    low = {v: min(t.mono.get(v, 0) for t, _ in terms) for v in ident.variables}
    out = []
    degree = dict.fromkeys(ident.variables, 0)
    for t, s in terms:
        fs = t.num + (D - t.den)
        mono = {v: t.mono.get(v, 0) - low[v] for v in ident.variables}
        deg = dict(mono)
        for f, k in fs.items():
            for v, d in f.degs:
                deg[v] += d * k
        for v in degree:
            degree[v] = max(degree[v], deg[v])
        out.append((s * t.coef, fs, mono))
    unknown = {v for _, fs, _ in out for f in fs for v, _ in f.degs} - set(ident.variables)
    if unknown:
        raise ValueError(f"factor uses undeclared variables {sorted(unknown)}")
    return out, degree


def _grid(variables, degree) -> dict[str, np.ndarray]:
    """Distinct nonzero integers per variable, shaped to broadcast over the grid."""
    env = {}
    k = len(variables)
    for i, v in enumerate(variables):
        vals = np.array([2 + j + 17 * i for j in range(degree[v] + 1)], dtype=object)
        shape = [1] * k
        shape[i] = len(vals)
        env[v] = vals.reshape(shape)
    return env


def prove(ident: Identity, n: int) -> PFReport:
    t0 = time.perf_counter()
    terms, degree = _cleared(ident)
    env = _grid(ident.variables, degree)
    total = None
    for coef, fs, mono in terms:
        acc = np.array(coef, dtype=object)
        for f, k in fs.items():
            acc = acc * f(env) ** k if k > 1 else acc * f(env)
        for v, e in mono.items():
            if e:
                acc = acc * env[v] ** e
        total = acc if total is None else total + acc
    points = prod(degree[v] + 1 for v in ident.variables)
    total = np.broadcast_to(total, tuple(degree[v] + 1 for v in ident.variables))
    ok = not np.any(total != 0)
    return PFReport(ident.name, n, bool(ok), points, degree, time.perf_counter() - t0)


# -- the identities -------------------------------------------------------------

def a_id(n: int) -> Identity:
    a = [f"a{i}" for i in range(1, n + 1)]
    lhs = Term().mul(one_minus(a))
    for v in a:
        lhs.x(v)
    rhs = []
    for l, al in enumerate(a):
        t = Term().x(al).mul(one_minus([al]))
        for i, ai in enumerate(a):
            if i != l:
                # (1 - a_i a_l) / (1 - a_l / a_i) = a_i (1 - a_i a_l) / (a_i - a_l)
                t.mul(one_minus([ai, al])).x(ai).div(diff(ai, al))
        rhs.append(t)
    return Identity("a_id", tuple(a), [lhs], rhs)


def pfexp1(n: int) -> Identity:
    x = [f"x{i}" for i in range(1, n + 1)]
    y = [f"y{i}" for i in range(1, n + 1)]
    lhs = Term()
    for xi, yi in zip(x, y):
        lhs.mul(one_minus(["t", xi, yi])).div(one_minus(["t", xi]))
    first = Term()
    for yi in y:
        first.x(yi)
    rhs = [first]
    for l in range(n):
        t = Term().mul(one_minus([y[l]])).div(one_minus(["t", x[l]]))
        for i in range(n):
            if i != l:
                # (1 - x_i y_i / x_l) / (1 - x_i / x_l) = (x_l - x_i y_i) / (x_l - x_i)
                xl, xi, yi = x[l], x[i], y[i]
                t.mul(poly(("x-xy", xl, xi, yi), {xl: 1, xi: 1, yi: 1},
                           lambda e, xl=xl, xi=xi, yi=yi: e[xl] - e[xi] * e[yi]))
                t.div(diff(xl, xi))
        rhs.append(t)
    return Identity("pfexp1", ("t", *x, *y), [lhs], rhs)


def pfexp2(n: int) -> Identity:
    a = [f"a{i}" for i in range(1, n + 1)]
    one = Term()
    rest = Term(-1)
    for ai in a:
        # a_i (a_i - t) / (1 - t a_i)
        rest.x(ai).mul(diff(ai, "t")).div(one_minus(["t", ai]))
    rhs = []
    for l, al in enumerate(a):
        t = Term().mul(one_minus([al, al])).div(one_minus(["t", al]))
        for i, ai in enumerate(a):
            if i != l:
                t.mul(one_minus([ai, al])).x(ai).div(diff(ai, al))
        rhs.append(t)
    return Identity("pfexp2", ("t", *a), [one, rest], rhs)


def ww_pfe(n: int) -> Identity:
    """The b_{n+1} = a_1...a_n t / (b_1...b_n) elimination is built in."""
    a = [f"a{i}" for i in range(1, n + 1)]
    b = [f"b{i}" for i in range(1, n + 1)]

    def prod_of(vs):
        return lambda e, vs=tuple(vs): prod(e[v] for v in vs)

    # 1 - b_{n+1}/t = (B - A) / B with A = prod a, B = prod b
    last = poly(("B-A", n), {**{v: 1 for v in a}, **{v: 1 for v in b}},
                lambda e: prod_of(b)(e) - prod_of(a)(e))
    lhs = Term().mul(last)
    for bj in b:
        lhs.x(bj, -1)
    for bj in b:
        lhs.mul(diff("t", bj)).x("t", -1)
    for aj in a:
        lhs.div(diff("t", aj)).x("t", 1)
    rhs = []
    for l, al in enumerate(a):
        t = Term()
        for bj in b:
            t.mul(diff(bj, al)).x(bj, -1)
        # 1 - a_l / b_{n+1} = (t prod_{j != l} a_j - B) / (t prod_{j != l} a_j)
        others = [aj for j, aj in enumerate(a) if j != l]
        t.mul(poly(("tA-B", n, l), {"t": 1, **{v: 1 for v in others}, **{v: 1 for v in b}},
                   lambda e, others=tuple(others): e["t"] * prod_of(others)(e) - prod_of(b)(e)))
        t.x("t", -1)
        for aj in others:
            t.x(aj, -1)
        t.div(diff("t", al)).x("t", 1)
        for j, aj in enumerate(a):
            if j != l:
                t.div(diff(aj, al)).x(aj, 1)
        rhs.append(t)
    return Identity("ww_pfe", ("t", *a, *b), [lhs], rhs)


_BUILDERS = {"a_id": a_id, "pfexp1": pfexp1, "pfexp2": pfexp2, "ww_pfe": ww_pfe}


def build_identity(name: str, n: int) -> Identity:
    if name not in _BUILDERS:
        raise ValueError(f"no polynomial identity named {name!r}")
    if n < 1:
        raise ValueError("n must be positive")
    return _BUILDERS[name](n)


# -- alt_identity, exactly in Q(q) ------------------------------------------------

def _om(e: int) -> RatQ:
    return ONE - q_pow(e)


def alt_identity_sides(mu: Sequence[int]) -> tuple[RatQ, RatQ]:
    mu = tuple(mu)
    n = len(mu)
    c = comb(n + 1, 2) + sum(mu)
    lhs = q_pow(c) * _om(c)
    rhs = ZERO
    for l in range(1, n + 1):
        e = n + 1 - l + mu[l - 1]
        t = q_pow(e) * _om(e)
        for i in range(1, n + 1):
            if i != l:
                t = t * _om(2 * n + 2 - l - i + mu[i - 1] + mu[l - 1]) / _om(mu[l - 1] - mu[i - 1] + i - l)
        rhs = rhs + t
    return lhs, rhs


def verify_alt_identity(n: int, max_part: int = 3) -> PFReport:
    t0 = time.perf_counter()
    mus = partitions_in_box(n, max_part)
    ok = all(l == r for l, r in map(alt_identity_sides, mus))
    return PFReport("alt_identity", n, ok, len(mus), {}, time.perf_counter() - t0)


def verify_partial_fraction(name: str, n: int, max_part: int = 3) -> PFReport:
    if name == "alt_identity":
        return verify_alt_identity(n, max_part)
    return prove(build_identity(name, n), n)


def pfexp2_from_pfexp1(n: int, point: dict) -> bool:
    """pfexp1 at x_i = a_i, y_i = 1/a_i^2 maps onto pfexp2 side by side.

    Subtracting y_1...y_n and multiplying by -prod a_i^2 turns each side of
    the substituted pfexp1 into the matching side of pfexp2.
    """
    sub = {"t": Fraction(point["t"])}
    scale = Fraction(-1)
    for i in range(1, n + 1):
        ai = Fraction(point[f"a{i}"])
        sub[f"x{i}"], sub[f"y{i}"] = ai, 1 / ai ** 2
        scale *= ai ** 2
    l1, r1 = pfexp1(n).sides_at(sub)
    l2, r2 = pfexp2(n).sides_at(point)
    ys = prod(sub[f"y{i}"] for i in range(1, n + 1))
    return scale * (l1 - ys) == l2 and scale * (r1 - ys) == r2
