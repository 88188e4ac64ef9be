"""Closed hook products for shapes, shifted shapes and the class 11 posets."""

from __future__ import annotations

from math import comb
from typing import Sequence

from ..gfseries import attach_integrand, hook_product
from ..posets import build_PnmX, hook_lengths, levels_formula
from ..qfield import FactorProduct, RatQ


def _p(t, i):
    return t[i - 1] if 1 <= i <= len(t) else 0


def young_hook_closed(lam: Sequence[int]) -> RatQ:
    """prod over the cells of lam of 1/(1 - q^h), in product form."""
    lam = tuple(lam)
    n = len(lam)
    fp = FactorProduct()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            fp.om(lam[i - 1] - lam[j - 1] + j - i)
        fp.poch(1, lam[i - 1] + n - i, -1)
    return fp.value()


def _shifted_into(fp: FactorProduct, lam: Sequence[int], power: int = 1) -> FactorProduct:
    n = len(lam)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            fp.om(_p(lam, i) - _p(lam, j) + j - i, power)
        fp.poch(1, _p(lam, i) + n - i, -power)
        for j in range(i, n + 1):
            fp.om(2 * n + 1 - i - j + _p(lam, i) + _p(lam, j + 1), -power)
    return fp


def shifted_hook_closed(lam: Sequence[int]) -> RatQ:
    """prod over (lam + delta_{n+1})* of 1/(1 - q^h) for lam with n parts."""
    return _shifted_into(FactorProduct(), tuple(lam)).value()


def p11_hook_closed(mu: Sequence[int], n: int, k: int, printed: bool = False) -> RatQ:
    """Hook product of the class 11 poset written through mu = lam + (1^n).

    The chain above the top contributes (q^{|mu|+C(n+1,2)+k}; q)_{mu_1+n+1};
    ``printed=True`` stops one factor early, at length mu_1+n.
    """
    mu = tuple(mu) + (0,) * (n - len(mu))
    s = sum(mu)
    length = mu[0] + n + (0 if printed else 1)
    fp = FactorProduct().poch(1, k - 1, -1).poch(s + comb(n + 1, 2) + k, length, -1)
    for j in range(1, n + 1):
        fp.om(s + mu[j - 1] + k + n * (n + 3) // 2 - j + 1)
        fp.om(s - mu[j - 1] + k + comb(n, 2) + j - 1, -1)
    return _shifted_into(fp, mu).value()


def _normalization(n: int, m: int, X) -> RatQ:
    _, c = attach_integrand(n, X)
    c.poch(sum(levels_formula(n, X)) + 1, m, -1)
    return c.value()


def class11_hook_rhs(inst) -> RatQ:
    """Integral value implied by the hook product when eps = 1.

    The closed hook product is the eps = 0 one with n replaced by n + 1 and
    mu = lam; dividing by the normalization of the integral gives the value.
    """
    from .catalog import class_spec

    n1, m, X = class_spec(inst)
    return p11_hook_closed(inst.lam + (0,), n1, inst.k) / _normalization(n1, m, X)


def class11_readings(inst) -> tuple[RatQ, RatQ]:
    """Hook product of the template poset against the closed substitution form."""
    from .catalog import class_spec

    n1, m, X = class_spec(inst)
    from_poset = hook_product(hook_lengths(build_PnmX(n1, m, X)))
    if inst.eps:
        closed = p11_hook_closed(inst.lam + (0,), n1, inst.k)
    else:
        closed = p11_hook_closed(tuple(x + 1 for x in inst.lam), inst.n, inst.k)
    return from_poset, closed
