"""P-partition generating functions computed combinatorially and via q-integrals."""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb
from typing import Sequence

import numpy as np

from .multipoly import MPoly, alternant, plus_staircase
from .posets import (
    Poset,
    XSet,
    build_Dk,
    build_Dmk,
    build_PnmX,
    hook_lengths,
    levels_formula,
    op_plus,
    order_ideals,
    popcount,
)
from .qfield import FactorProduct, RatQ, TruncSeries, inverse_factor_series, series_expand
from .qintegral import integrate_simplex

DEFAULT_N = 30


def gf_truncated(P: Poset, N: int = DEFAULT_N) -> TruncSeries:
    """Coefficients of q^0..q^N of the P-partition generating function.

    A P-partition sigma corresponds to the weakly decreasing chain of ideals
    I_t = {x : sigma(x) >= t}, with |sigma| = sum |I_t|.  Writing A(I, r) for
    the number of such chains inside I of total size r,

        A(I, r) = sum over ideals J <= I of g_r(J),
        g_r(J) = A(J, r - |J|) for J nonempty,  g_r(empty) = [r = 0],

    and the inner sum over sub-ideals is a zeta transform on the ideal
    lattice.  Only ideals with at most N elements can contribute.
    """
    if P.size == 0:
        return TruncSeries([1], N)
    ideals = order_ideals(P, max_size=N)
    index = {I: i for i, I in enumerate(ideals)}
    sizes = np.array([popcount(I) for I in ideals], dtype=np.int64)
    # for each element e (in a linear extension), the ideals in which e is maximal
    passes = []
    for e in P.linear_extension():
        bit = 1 << e
        above = P.up[e] & ~bit
        tgt, src = [], []
        for I, i in index.items():
            if I & bit and not I & above:
                tgt.append(i)
                src.append(index[I ^ bit])
        if tgt:
            passes.append((np.array(tgt, dtype=np.int64), np.array(src, dtype=np.int64)))
    # int64 is exact as long as the number of maps P -> N of size <= N fits
    safe = comb(N + P.size, P.size) < 2**62
    dtype = np.int64 if safe else object
    A = np.zeros((len(ideals), N + 1), dtype=dtype)
    rows = np.arange(len(ideals))
    for r in range(N + 1):
        g = np.zeros(len(ideals), dtype=dtype)
        ok = (sizes <= r) & (sizes > 0)
        g[ok] = A[rows[ok], r - sizes[ok]]
        if r == 0:
            g[0] = 1
        for tgt, src in passes:
            g[tgt] += g[src]
        A[:, r] = g
    # A(P, r) = sum of g_r over all ideals; P itself may lie beyond the size cap
    total = []
    for r in range(N + 1):
        ok = (sizes <= r) & (sizes > 0)
        total.append(sum(int(v) for v in A[rows[ok], r - sizes[ok]].tolist()) + (r == 0))
    return TruncSeries(total, N)


def gf_brute_force(P: Poset, N: int) -> TruncSeries:
    """Enumerate order-reversing maps directly (tiny posets only)."""
    order = list(reversed(P.linear_extension()))  # maxima first
    coeffs = [0] * (N + 1)
    sigma = [0] * P.size

    def rec(pos, total):
        if pos == len(order):
            coeffs[total] += 1
            return
        x = order[pos]
        lo = max((sigma[y] for y in P.upper_covers[x]), default=0)
        for v in range(lo, N - total + 1):
            sigma[x] = v
            rec(pos + 1, total + v)
        sigma[x] = 0

    rec(0, 0)
    return TruncSeries(coeffs, N)


def hook_product_series(hooks: Sequence[int], N: int = DEFAULT_N) -> TruncSeries:
    return inverse_factor_series(hooks, N)


def hook_product(hooks: Sequence[int]) -> RatQ:
    fp = FactorProduct()
    for h in hooks:
        fp.om(h, -1)
    return fp.value()


@dataclass
class GFReport:
    desc: str
    N: int
    match: bool
    mismatch_degree: int | None
    seconds: float

    def line(self, timings: bool = True) -> str:
        status = "MATCH" if self.match else f"MISMATCH@{self.mismatch_degree}"
        out = f"GF {self.desc} N={self.N} {status}"
        return f"{out} {self.seconds:.3f}" if timings else out


def check_hlf(P: Poset, N: int = DEFAULT_N, desc: str = "poset") -> GFReport:
    t = time.perf_counter()
    lhs = gf_truncated(P, N)
    rhs = hook_product_series(hook_lengths(P), N)
    bad = lhs.first_mismatch(rhs)
    return GFReport(desc, N, bad is None, bad, time.perf_counter() - t)


def attach_integrand(n: int, X: XSet) -> tuple[MPoly, FactorProduct]:
    """The alternant product and its scalar normalization for P_n(X).

    Returns (F, c) with GF(P_n(X)) = c * int F over the n-simplex, where
    F = prod_i (-1)^{C(n_i,2)} a_{lam_i + delta_{n_i}}(x_{s_i}, ..., x_{s_i+n_i-1}).
    """
    X.validate(n)
    if not X.covers_all_pairs(n):
        raise ValueError("X leaves a consecutive diagonal pair unspanned")
    F = MPoly.constant(n)
    c = FactorProduct()
    for e in X.entries:
        vars_ = list(range(e.s_i - 1, e.s_i - 1 + e.n_i))
        F = F * alternant(plus_staircase(e.lam, e.n_i), vars_, n)
        c.neg(comb(e.n_i, 2) % 2 == 1)
        for j in range(1, e.n_i + 1):
            c.poch(1, e.lam[j - 1] + e.n_i - j, -1)
    ell = levels_formula(n, X)
    c.qpow(-sum((n - i) * ell[i - 1] for i in range(1, n + 1)))
    c.om(1, -n)
    return F, c


def gf_via_theorem_attach(n: int, X: XSet, m: int = 0) -> RatQ:
    F, c = attach_integrand(n, X)
    p = sum(levels_formula(n, X))
    c.poch(p + 1, m, -1)
    return c.value() * integrate_simplex(F)


def verify_lemma_Pplus(P: Poset, N: int = DEFAULT_N) -> bool:
    lhs = gf_truncated(op_plus(P), N)
    rhs = gf_truncated(P, N) * inverse_factor_series([P.size + 1], N)
    return lhs == rhs


def verify_lemma_dmkp(P: Poset, y2: int, m: int, k: int, N: int = DEFAULT_N) -> bool:
    """GF(D_{m,k}(P)) against the two-term decomposition, all sides truncated."""
    if k < 1:
        raise ValueError("the decomposition needs k >= 1")
    p = P.size
    lhs = gf_truncated(build_Dmk(P, y2, m, k), N)
    plus = gf_truncated(op_plus(P), N)
    dk = gf_truncated(build_Dk(P, y2, k), N)
    pre = inverse_factor_series(range(p + k + 1, p + k + 1 + m + 2), N)
    t1 = (plus * inverse_factor_series(range(1, k), N)).shift(p + 1)
    t2 = dk - dk.shift(2 * p + 2 * k + 2)
    return lhs == pre * (t1 + t2)


def series_of(r: RatQ, N: int = DEFAULT_N) -> TruncSeries:
    return series_expand(r, N)
