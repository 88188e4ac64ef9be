"""The fifteen semi-irreducible class templates, their integrals and closed forms.

Each class is described by a :class:`ClassDef` holding

* the parameter shape it needs,
* ``template``: the (n, m, X) data defining the poset P_n^m(X),
* ``integrand``: the polynomial whose simplex integral is the left side,
* ``rhs``: the closed-form value of that integral.

Partitions are plain tuples here, zero-padded to the length each template
expects; ``L(i)`` style access is 1-based through :func:`_p`.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import comb
from typing import Callable, Sequence

from ..multipoly import MPoly, alternant, linear_diff, monomial, plus_staircase, product
from ..posets import XSet
from ..qfield import FactorProduct, PolyQ, RatQ, one_plus_q

CLASS_IDS = ("1", "2", "3", "4", "5", "6", "7", "8a", "8b", "8c", "8d",
             "9a", "9b", "10", "11", "12", "13", "14", "15")

# alternative spellings accepted on input
_ALIASES = {"8-1": "8a", "8-2": "8b", "8-3": "8c", "8-4": "8d", "9-1": "9a", "9-2": "9b"}


def canonical_id(cid: str) -> str:
    cid = str(cid).strip().lower()
    cid = _ALIASES.get(cid, cid)
    if cid not in CLASS_IDS:
        raise ValueError(f"unknown class id {cid!r}")
    return cid


@dataclass(frozen=True)
class ClassInstance:
    cid: str
    n: int | None = None
    lam: tuple[int, ...] | None = None
    mu: tuple[int, ...] | None = None
    k: int | None = None
    m: int | None = None
    eps: int | None = None

    def params(self) -> str:
        out = []
        if self.n is not None:
            out.append(f"n={self.n}")
        if self.lam is not None:
            out.append("lambda=" + ",".join(map(str, self.lam)))
        if self.mu is not None:
            out.append("mu=" + ",".join(map(str, self.mu)))
        for name in ("k", "m", "eps"):
            v = getattr(self, name)
            if v is not None:
                out.append(f"{name}={v}")
        return " ".join(out)

    def key(self):
        return (CLASS_IDS.index(self.cid), self.n or 0, self.lam or (), self.mu or (),
                self.k or 0, self.m or 0, self.eps or 0)

    def __str__(self):
        p = self.params()
        return f"class {self.cid}" + (f" {p}" if p else "")


def _p(t: Sequence[int], i: int) -> int:
    """1-based part access, 0 beyond the end."""
    return t[i - 1] if 1 <= i <= len(t) else 0


def _check_partition(t, length, name):
    if t is None:
        raise ValueError(f"{name} is required")
    if len(t) > length:
        if any(t[length:]):
            raise ValueError(f"{name}={t} needs at most {length} parts")
        t = t[:length]
    t = tuple(t) + (0,) * (length - len(t))
    if any(x < 0 for x in t) or any(t[i] < t[i + 1] for i in range(length - 1)):
        raise ValueError(f"{name}={t} is not a partition")
    return t


@dataclass(frozen=True)
class ClassDef:
    cid: str
    fields: dict  # name -> length spec: int, callable(n) or "int"
    template: Callable[[ClassInstance], tuple[int, int, XSet]]
    integrand: Callable[[ClassInstance], MPoly]
    rhs: Callable[[ClassInstance], RatQ]
    defaults: dict = field(default_factory=dict)
    n_min: int = 1


def make_instance(cid: str, **params) -> ClassInstance:
    """Validate and normalize parameters (partitions padded to their class length)."""
    cid = canonical_id(cid)
    d = CATALOG[cid]
    vals = {k: v for k, v in params.items() if v is not None}
    extra = set(vals) - set(d.fields)
    if extra:
        raise ValueError(f"class {cid} does not take {sorted(extra)}")
    vals = {**d.defaults, **vals}
    n = vals.get("n")
    if "n" in d.fields:
        if n is None:
            raise ValueError(f"class {cid} needs n")
        if n < d.n_min:
            raise ValueError(f"class {cid} needs n >= {d.n_min}")
    out = {}
    for name, spec in d.fields.items():
        v = vals.get(name)
        if spec == "int":
            if v is None:
                raise ValueError(f"class {cid} needs {name}")
            if v < 0:
                raise ValueError(f"{name} must be nonnegative")
            out[name] = int(v)
        elif name == "n":
            out["n"] = int(n)
        else:
            length = spec(n) if callable(spec) else spec
            out[name] = _check_partition(tuple(v) if v is not None else (), length, name)
    inst = ClassInstance(cid, **out)
    if cid == "11":
        if inst.k < 1:
            raise ValueError("class 11 needs k >= 1")
        if inst.eps not in (0, 1):
            raise ValueError("class 11 needs eps in {0, 1}")
    return inst


# -- integrand helpers ----------------------------------------------------

def _alt(lam: Sequence[int], vars_: Sequence[int], nv: int) -> MPoly:
    return alternant(plus_staircase(lam, len(vars_)), vars_, nv)


def _diff(nv, i, j, a=1):
    """x_i^a - x_j^a with 1-based indices."""
    return linear_diff(nv, i - 1, j - 1, a, a)


def _x(nv, powers: dict[int, int]) -> MPoly:
    return monomial(nv, {i - 1: a for i, a in powers.items()})


def _r(*idx):
    """0-based variable list from 1-based indices."""
    return [i - 1 for i in idx]


def _vandermonde(fp: FactorProduct, t: Sequence[int], power: int = 1) -> None:
    n = len(t)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            fp.om(_p(t, i) - _p(t, j) + j - i, power)


# -- class 1 ------------------------------------------------------------------

def _t1(I):
    n = I.n
    return n, 0, XSet.of((I.lam, n, 1), (I.mu, n, 1))


def _f1(I):
    n = I.n
    v = list(range(n))
    return _alt(I.lam, v, n) * _alt(I.mu, v, n)


def _r1(I):
    n, L, M = I.n, I.lam, I.mu
    fp = FactorProduct()
    fp.qpow(comb(n, 2) + 2 * comb(n, 3) + sum(i * (_p(L, i + 1) + _p(M, i + 1)) for i in range(1, n)))
    fp.om(1, n)
    _vandermonde(fp, L)
    _vandermonde(fp, M)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            fp.om(_p(L, i) + _p(M, j) + 2 * n - i - j + 1, -1)
    return fp.value()


# -- class 2 ------------------------------------------------------------------

def _t2(I):
    # the x_n^k factor lives in the integral only; the poset ignores k
    return I.n, 0, XSet.of((I.mu, I.n, 1))


def _f2(I):
    n = I.n
    f = _alt(I.mu, list(range(n)), n) * _x(n, {n: I.k})
    return -f if comb(n, 2) % 2 else f


def _r2(I):
    n, M, k = I.n, I.mu, I.k
    s = sum(M) + comb(n + 1, 2)
    fp = FactorProduct().om(1, n)
    fp.qpow(comb(n + 1, 3) + sum((i - 1) * _p(M, i) for i in range(1, n + 1)))
    fp.om(s).om(s + k, -1)
    _vandermonde(fp, M)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            fp.om(2 * n + 1 - i - j + _p(M, i) + _p(M, j + 1), -1)
    return fp.value()


# -- class 3 ------------------------------------------------------------------

def _t3(I):
    return 2, I.m, XSet.of((I.lam, 2, 1), (I.mu, 2, 1), ((I.m,), 1, 1))


def _f3(I):
    return _x(2, {1: I.m}) * _alt(I.lam, [0, 1], 2) * _alt(I.mu, [0, 1], 2)


def _r3(I):
    L, M, m = I.lam, I.mu, I.m
    S = sum(L) + sum(M)
    fp = FactorProduct().qpow(L[1] + M[1] + m + 1).om(1, 2)
    fp.om(S + 2 * m + 4).om(L[0] - L[1] + 1).om(M[0] - M[1] + 1)
    fp.om(S + m + 4, -1)
    for i in (1, 2):
        for j in (1, 2):
            fp.om(_p(L, i) + _p(M, j) + m + 5 - i - j, -1)
    return fp.value()


# -- class 4 ------------------------------------------------------------------

def _t4(I):
    n = I.n
    return n + 1, I.lam[0] + n - 2, XSet.of((I.lam, n - 1, 1), (I.mu, n + 1, 1), ((I.k,), 1, n))


def _f4(I):
    n = I.n
    nv = n + 1
    return _x(nv, {n: I.k}) * _alt(I.lam, list(range(n - 1)), nv) * _alt(I.mu, list(range(n + 1)), nv)


def _r4(I):
    n, L, M, k = I.n, I.lam, I.mu, I.k
    S = sum(L) + sum(M)
    fp = FactorProduct().neg()
    fp.qpow(sum((i + 1) * _p(L, i) + i * _p(M, i + 1) for i in range(1, n + 1))
            + n * (n - 1) * (2 * n + 5) // 6 + 1 + k)
    fp.om(1, n + 1)
    for i in range(1, n + 2):
        fp.om(S - _p(M, i) + n * (n - 1) + k + i, -1)
    for j in range(1, n):
        fp.om(S + _p(L, j) + n * n + n - j + k + 1)
    fp.om(S + n * n + k + 2, -1)
    _vandermonde(fp, M)
    _vandermonde(fp, L)
    for i in range(1, n + 2):
        for j in range(1, n):
            fp.om(_p(M, i) + _p(L, j) + 2 * n - i - j + 1, -1)
    return fp.value()


# -- class 5 ------------------------------------------------------------------

def _t5(I):
    return 3, I.lam[0] + 1, XSet.of((I.lam, 2, 1), (I.mu, 3, 1), ((), 2, 2), ((1,), 1, 1))


def _f5(I):
    return _x(3, {1: 1}) * _diff(3, 2, 3) * _alt(I.lam, [0, 1], 3) * _alt(I.mu, [0, 1, 2], 3)


def _r5(I):
    L, M = I.lam, I.mu
    S = sum(L) + sum(M)
    fp = FactorProduct().neg()
    fp.qpow(sum(i * (_p(L, i) + _p(M, i + 1)) for i in (1, 2)) + 7).om(1, 4)
    fp.om(L[0] - L[1] + 1).om(S + L[0] + 10).om(S + L[1] + 9).om(S + 9, -1)
    _vandermonde(fp, M)
    for i in (1, 2):
        for j in (1, 2, 3):
            fp.om(_p(L, i) + _p(M, j) + 7 - i - j, -1)
    for i in (1, 2, 3):
        fp.om(S - _p(M, i) + 4 + i, -1)
    return fp.value()


# -- class 6 ------------------------------------------------------------------

def _t6(I):
    return 4, I.m, XSet.of((I.mu, 4, 1), ((I.m,), 1, 2))


def _f6(I):
    return _x(4, {2: I.m}) * _alt(I.mu, [0, 1, 2, 3], 4)


def _r6(I):
    M, m = I.mu, I.m
    S = sum(M)
    fp = FactorProduct().qpow(sum(i * _p(M, i + 1) for i in (1, 2, 3)) + 2 * m + 10).om(1, 4)
    for i in range(1, 5):
        fp.om(_p(M, i) + 5 - i, -1)
    fp.om(S + 2 * m + 10).om(S + m + 10, -1)
    for i in range(1, 5):
        for j in range(i + 1, 5):
            fp.om(_p(M, i) - _p(M, j) + j - i).om(_p(M, i) + _p(M, j) + m + 10 - i - j, -1)
    return fp.value()


# -- class 7 ------------------------------------------------------------------

def _t7(I):
    return 4, I.lam[0] + 2, XSet.of((I.lam, 3, 1), ((), 2, 1), (I.mu, 3, 2), ((), 2, 3))


def _f7(I):
    nv = 4
    return (_diff(nv, 1, 2) * _diff(nv, 3, 4) * _alt(I.lam, _r(1, 2, 3), nv)
            * _alt(I.mu, _r(2, 3, 4), nv))


def _r7(I):
    L, M = I.lam, I.mu
    S = sum(L) + sum(M)
    fp = FactorProduct().qpow(sum(i * _p(L, i) for i in (1, 2, 3)) + M[1] + 13).om(1, 6)
    fp.om(M[0] + 2).om(M[1] + 1).om(M[0] - M[1] + 1).poch(S + 10, 3, -1)
    for i in (1, 2, 3):
        fp.om(S + _p(L, i) + 15 - i).poch(_p(L, i) + 4 - i, 2, -1)
    _vandermonde(fp, L)
    for i in (1, 2, 3):
        for j in (1, 2):
            fp.om(S - _p(L, i) - _p(M, j) + 3 + i + j, -1)
    return fp.value()


# -- class 8 ------------------------------------------------------------------

def _t8a(I):
    return 4, I.lam[0] + 2, XSet.of((I.lam, 3, 1), ((2,), 1, 1), ((), 2, 1), ((), 3, 2), ((), 2, 3))


def _f8a(I):
    nv = 4
    return (_x(nv, {1: 2}) * _diff(nv, 1, 2) * _diff(nv, 3, 4) * _alt((), _r(2, 3, 4), nv)
            * _alt(I.lam, _r(1, 2, 3), nv))


def _r8a(I):
    L = I.lam
    S = sum(L)
    fp = FactorProduct().qpow(sum(i * _p(L, i) for i in (1, 2, 3)) + 19).om(1, 9).mul(one_plus_q(1))
    fp.poch(S + 10, 2, -1).om(S + 14, -1)
    for i in (1, 2, 3):
        fp.om(S + _p(L, i) + 17 - i).poch(_p(L, i) + 6 - i, 2, -1).poch(S - _p(L, i) + 5 + i, 2, -1)
    _vandermonde(fp, L)
    return fp.value()


def _x8_tail(nv=5):
    """(x_2 - x_3)(x_4 - x_5) a_{delta_3}(x_3, x_4, x_5), shared by 8b, 8c, 9a, 9b."""
    return _diff(nv, 2, 3) * _diff(nv, 4, 5) * _alt((), _r(3, 4, 5), nv)


def _t8b(I):
    return 5, I.lam[0] + 3, XSet.of((I.lam, 4, 1), ((1, 0), 2, 1), ((), 2, 2), ((), 3, 3), ((), 2, 4))


def _f8b(I):
    return _diff(5, 1, 2, 2) * _x8_tail() * _alt(I.lam, _r(1, 2, 3, 4), 5)


def _r8b(I):
    L = I.lam
    S = sum(L)
    fp = FactorProduct().qpow(sum(i * _p(L, i) for i in range(1, 5)) + 29).om(1, 11)
    fp.mul(one_plus_q(1), 2).poch(S + 15, 2, -1, step=2).om(S + 18, -1)
    for i in range(1, 5):
        fp.om(S + _p(L, i) + 22 - i).poch(_p(L, i) + 5 - i, 2, -1, step=2).om(S - _p(L, i) + 9 + i, -1)
    for i in range(1, 5):
        for j in range(i + 1, 5):
            fp.om(_p(L, i) - _p(L, j) + j - i).om(_p(L, i) + _p(L, j) + 13 - i - j, -1)
    return fp.value()


def _t8c(I):
    return 5, I.lam[0] + 3, XSet.of((I.lam, 4, 1), ((1, 1), 2, 1), ((), 2, 2), ((), 3, 3), ((), 2, 4))


def _f8c(I):
    return _x(5, {1: 1, 2: 1}) * _diff(5, 1, 2) * _x8_tail() * _alt(I.lam, _r(1, 2, 3, 4), 5)


def _r8c(I):
    L = I.lam
    S = sum(L)
    fp = FactorProduct().qpow(sum(i * _p(L, i) for i in range(1, 5)) + 33).om(1, 11)
    fp.mul(one_plus_q(1)).poch(S + 16, 2, -1).om(S + 19, -1)
    for i in range(1, 5):
        fp.om(S + _p(L, i) + 23 - i).poch(_p(L, i) + 6 - i, 2, -1).om(S - _p(L, i) + 9 + i, -1)
    for i in range(1, 5):
        for j in range(i + 1, 5):
            fp.om(_p(L, i) - _p(L, j) + j - i).om(_p(L, i) + _p(L, j) + 14 - i - j, -1)
    return fp.value()


def _t8d(I):
    return 6, I.lam[0] + 4, XSet.of((I.lam, 5, 1), ((), 3, 1), ((), 2, 3), ((), 3, 4), ((), 2, 5))


def _f8d(I):
    nv = 6
    return (_diff(nv, 3, 4) * _diff(nv, 5, 6) * _alt((), _r(1, 2, 3), nv) * _alt((), _r(4, 5, 6), nv)
            * _alt(I.lam, _r(1, 2, 3, 4, 5), nv))


def _r8d(I):
    L = I.lam
    S = sum(L)
    fp = FactorProduct().qpow(sum(i * _p(L, i) for i in range(1, 6)) + 48).om(1, 14)
    fp.mul(one_plus_q(1), 2).poch(S + 21, 4, -1)
    for i in range(1, 6):
        fp.om(S + _p(L, i) + 29 - i).poch(_p(L, i) + 6 - i, 3, -1)
    for i in range(1, 6):
        for j in range(i + 1, 6):
            fp.om(_p(L, i) - _p(L, j) + j - i).om(S - _p(L, i) - _p(L, j) + i + j + 7, -1)
    return fp.value()


# -- class 9 ------------------------------------------------------------------

def _t9a(I):
    return 5, I.lam[0] + 3, XSet.of((I.lam, 4, 1), ((1,), 1, 1), ((1, 0), 2, 1), ((), 2, 2),
                                    ((), 3, 3), ((), 2, 4))


def _f9a(I):
    return _x(5, {1: 1}) * _diff(5, 1, 2, 2) * _x8_tail() * _alt(I.lam, _r(1, 2, 3, 4), 5)


def _r9a(I):
    L = I.lam
    S = sum(L)
    fp = FactorProduct().qpow(sum(i * _p(L, i) for i in range(1, 5)) + 33).om(1, 11)
    fp.mul(one_plus_q(1), 2).poch(S + 15, 2, -1, step=2).om(S + 19, -1)
    for i in range(1, 5):
        fp.om(S + _p(L, i) - i + 23).poch(_p(L, i) + 6 - i, 2, -1, step=2).om(S - _p(L, i) + 10 + i, -1)
    for i in range(1, 5):
        for j in range(i + 1, 5):
            fp.om(_p(L, i) - _p(L, j) + j - i).om(_p(L, i) + _p(L, j) + 13 - i - j, -1)
    return fp.value()


def _t9b(I):
    return 5, I.lam[0] + 3, XSet.of((I.lam, 4, 1), ((1,), 1, 1), ((1, 1), 2, 1), ((), 2, 2),
                                    ((), 3, 3), ((), 2, 4))


def _f9b(I):
    return _x(5, {1: 2, 2: 1}) * _diff(5, 1, 2) * _x8_tail() * _alt(I.lam, _r(1, 2, 3, 4), 5)


def _r9b(I):
    L = I.lam
    S = sum(L)
    fp = FactorProduct().qpow(sum(i * _p(L, i) for i in range(1, 5)) + 37).om(1, 11)
    fp.mul(one_plus_q(1)).poch(S + 16, 2, -1).om(S + 20, -1)
    for i in range(1, 5):
        fp.om(S + _p(L, i) - i + 24).poch(_p(L, i) + 7 - i, 2, -1).om(S - _p(L, i) + 10 + i, -1)
    for i in range(1, 5):
        for j in range(i + 1, 5):
            fp.om(_p(L, i) - _p(L, j) + j - i).om(_p(L, i) + _p(L, j) + 14 - i - j, -1)
    return fp.value()


# -- class 10 -----------------------------------------------------------------

def _t10(I):
    return 6, I.lam[0] + 4, XSet.of((I.lam, 5, 1), ((), 2, 1), ((1,), 2, 2), ((), 2, 3),
                                    ((), 3, 4), ((), 2, 5))


def _f10(I):
    nv = 6
    return (_diff(nv, 1, 2) * _diff(nv, 2, 3, 2) * _diff(nv, 3, 4) * _diff(nv, 5, 6)
            * _alt((), _r(4, 5, 6), nv) * _alt(I.lam, _r(1, 2, 3, 4, 5), nv))


def _r10(I):
    L = I.lam
    S = sum(L)
    fp = FactorProduct().neg().qpow(sum(i * _p(L, i) for i in range(1, 6)) + 48).om(1, 13)
    fp.mul(one_plus_q(1), 2).poch(S + 22, 3, -1)
    for i in range(1, 6):
        fp.om(S + _p(L, i) - i + 29).poch(_p(L, i) + 6 - i, 2, -1).om(S - _p(L, i) + 14 + i, -1)
    for i in range(1, 6):
        for j in range(i + 1, 6):
            fp.om(_p(L, i) - _p(L, j) + j - i).om(_p(L, i) + _p(L, j) + 15 - i - j, -1)
    return fp.value()


# -- class 11 -----------------------------------------------------------------

def _t11(I):
    n = I.n
    X = [(I.lam, n, 1), ((I.k - 1,), 3, n - 1), ((), 2, n), ((I.eps,), 1, 1)]
    X += [((), 2, i) for i in range(1, n - 1)]
    return n + 1, I.lam[0] + n - 1, XSet.of(*X)


def _f11(I):
    n = I.n
    nv = n + 1
    f = (_alt(I.lam, list(range(n)), nv) * _alt((I.k - 1,), _r(n - 1, n, n + 1), nv)
         * _diff(nv, n, n + 1))
    for i in range(1, n - 1):
        f = f * _diff(nv, i, i + 1)
    if I.eps:
        f = f * _x(nv, {1: I.eps})
    return f


def _r11(I, printed: bool = False):
    """The displayed power of (1 - q) is n + 4, which is right only for n = 3;
    the normalization of the integral forces 2n + 1."""
    if I.eps:
        from .hooks import class11_hook_rhs

        return class11_hook_rhs(I)
    n, L, k = I.n, I.lam, I.k
    S = sum(L)
    fp = FactorProduct().neg(comb(n + 1, 2) % 2 == 1)
    fp.qpow(sum(i * _p(L, i) for i in range(1, n + 1)) + n * (n * n + 6 * n - 1) // 6)
    fp.om(1, n + 4 if printed else 2 * n + 1).poch(k, 2).poch(S + k + n * (n + 3) // 2, 3, -1)
    for j in range(1, n + 1):
        fp.om(S + _p(L, j) + k + n * (n + 5) // 2 + 2 - j)
        fp.poch(_p(L, j) + n + 1 - j, 2, -1)
        fp.om(S - _p(L, j) + k + n * (n + 1) // 2 + j - 2, -1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            fp.om(_p(L, i) - _p(L, j) + j - i).om(2 * n + 4 - i - j + _p(L, i) + _p(L, j), -1)
    return fp.value()


# -- classes 12..15 (the six-variable "bat" family) ---------------------------

def _bat_core(nv=6):
    """(x1-x2)(x3-x4)(x5-x6) a_{delta_3}(x1,x2,x3) a_{delta_3}(x4,x5,x6)."""
    return (_diff(nv, 1, 2) * _diff(nv, 3, 4) * _diff(nv, 5, 6) * _alt((), _r(1, 2, 3), nv)
            * _alt((), _r(4, 5, 6), nv))


_BAT_TAIL = (((), 2, 1), ((), 3, 1), ((), 2, 3), ((), 3, 4), ((), 2, 5))


def _t12(I):
    return 6, I.lam[0] + 3, XSet.of(((), 3, 1), ((), 2, 1), (I.lam, 4, 2), ((), 2, 3), ((), 3, 4),
                                    ((), 2, 5))


def _f12(I):
    return _bat_core() * _alt(I.lam, _r(2, 3, 4, 5), 6)


def _r12(I):
    L = I.lam
    S = sum(L)
    fp = FactorProduct().neg().qpow(sum(i * _p(L, i) for i in (1, 2, 3)) + 42).om(1, 12)
    fp.om(3, -2).om(4, -1).poch(S + 15, 3, -1)
    for i in (1, 2, 3):
        fp.om(_p(L, i) + 4 - i).om(S + _p(L, i) + 25 - i).poch(_p(L, i) + 8 - i, 3, -1)
    for i in (1, 2, 3):
        for j in range(i + 1, 4):
            fp.om(_p(L, i) - _p(L, j) + j - i).poch(_p(L, i) + _p(L, j) + 15 - i - j, 2, -1)
    return fp.value()


def _t13(I):
    return 6, I.lam[0] + 3, XSet.of(((1,), 1, 1), *_BAT_TAIL[:2], (I.lam, 4, 2), *_BAT_TAIL[2:])


def _f13(I):
    return _x(6, {1: 1}) * _bat_core() * _alt(I.lam, _r(2, 3, 4, 5), 6)


def _r13(I):
    L = I.lam
    S = sum(L)
    fp = FactorProduct().neg().qpow(L[0] + 2 * L[1] + 47).om(1, 17).mul(one_plus_q(1), 2)
    fp.poch(1, 7, -1).poch(3, 3, -1)
    fp.om(L[0] - L[1] + 1).om(S + 23).poch(S + 13, 5, -1)
    for i in (1, 2):
        fp.poch(_p(L, i) + 3 - i, 2).om(S + _p(L, i) + 26 - i).poch(_p(L, i) + 9 - i, 5, -1)
    return fp.value()


def _t14(I):
    return 6, I.m + 3, XSet.of(((2,), 1, 1), *_BAT_TAIL[:2], ((I.m,), 4, 2), *_BAT_TAIL[2:])


def _f14(I):
    return _x(6, {1: 2}) * _bat_core() * _alt((I.m,), _r(2, 3, 4, 5), 6)


def _r14(I):
    m = I.m
    fp = FactorProduct().neg().qpow(m + 52).om(1, 20).mul(one_plus_q(1), 4)
    fp.poch(m + 1, 3).poch(m + 24, 2).mul(one_plus_q(m + 13))
    fp.poch(1, 11, -1).poch(4, 5, -1).poch(m + 9, 9, -1)
    return fp.value()


def _t15(I):
    return 6, 3, XSet.of(((3,), 1, 1), *_BAT_TAIL[:2], ((), 4, 2), *_BAT_TAIL[2:])


def _f15(I):
    return _x(6, {1: 3}) * _bat_core() * _alt((), _r(2, 3, 4, 5), 6)


def _r15(I):
    fp = FactorProduct().neg().qpow(57).om(1, 18).mul(one_plus_q(1), 3)
    fp.poch(1, 3, 2).poch(25, 3).poch(1, 17, -1).poch(5, 9, -1).om(9, -1)
    return fp.value()


CATALOG: dict[str, ClassDef] = {
    "1": ClassDef("1", {"n": "n", "lam": lambda n: n, "mu": lambda n: n}, _t1, _f1, _r1),
    "2": ClassDef("2", {"n": "n", "mu": lambda n: n, "k": "int"}, _t2, _f2, _r2, {"k": 0}),
    "3": ClassDef("3", {"lam": 2, "mu": 2, "m": "int"}, _t3, _f3, _r3),
    "4": ClassDef("4", {"n": "n", "lam": lambda n: n - 1, "mu": lambda n: n + 1, "k": "int"},
                  _t4, _f4, _r4, n_min=2),
    "5": ClassDef("5", {"lam": 2, "mu": 3}, _t5, _f5, _r5),
    "6": ClassDef("6", {"mu": 4, "m": "int"}, _t6, _f6, _r6),
    "7": ClassDef("7", {"lam": 3, "mu": 2}, _t7, _f7, _r7),
    "8a": ClassDef("8a", {"lam": 3}, _t8a, _f8a, _r8a),
    "8b": ClassDef("8b", {"lam": 4}, _t8b, _f8b, _r8b),
    "8c": ClassDef("8c", {"lam": 4}, _t8c, _f8c, _r8c),
    "8d": ClassDef("8d", {"lam": 5}, _t8d, _f8d, _r8d),
    "9a": ClassDef("9a", {"lam": 4}, _t9a, _f9a, _r9a),
    "9b": ClassDef("9b", {"lam": 4}, _t9b, _f9b, _r9b),
    "10": ClassDef("10", {"lam": 5}, _t10, _f10, _r10),
    "11": ClassDef("11", {"n": "n", "lam": lambda n: n, "k": "int", "eps": "int"}, _t11, _f11, _r11,
                   {"eps": 0}, n_min=3),
    "12": ClassDef("12", {"lam": 3}, _t12, _f12, _r12),
    "13": ClassDef("13", {"lam": 2}, _t13, _f13, _r13),
    "14": ClassDef("14", {"m": "int"}, _t14, _f14, _r14),
    "15": ClassDef("15", {}, _t15, _f15, _r15),
}

# class 12's template places lam on x2..x5, so it is used padded to four parts
_PAD_TO_FOUR = {"12", "13"}


def class_spec(inst: ClassInstance) -> tuple[int, int, XSet]:
    """(n, m, X) such that the class poset is P_n^m(X)."""
    return CATALOG[inst.cid].template(inst)


def lhs_integrand(inst: ClassInstance) -> MPoly:
    return CATALOG[inst.cid].integrand(inst)


def rhs_closed_form(inst: ClassInstance) -> RatQ:
    return CATALOG[inst.cid].rhs(inst)
