"""Sparse multivariate polynomials over Q(q), partitions and alternants."""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .qfield import ONE, ZERO, PolyQ, RatQ, q_pow


class Partition:
    """Weakly decreasing tuple of nonnegative integers with a declared length.

    Equality ignores trailing zeros, so ``(4,3,1) == (4,3,1,0)``; indexing and
    :meth:`part` use the declared length (and return 0 beyond it).
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = (), length: int | None = None):
        p = tuple(int(x) for x in parts)
        if any(x < 0 for x in p):
            raise ValueError("partition parts must be nonnegative")
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"parts not weakly decreasing: {p}")
        if length is not None:
            stripped = _strip(p)
            if len(stripped) > length:
                raise ValueError(f"{p} has more than {length} nonzero parts")
            p = stripped + (0,) * (length - len(stripped))
        self.parts = p

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i: int) -> int:
        """1-based part, 0 past the end."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, n: int) -> "Partition":
        return Partition(self.parts, n)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def is_strict(self) -> bool:
        nz = _strip(self.parts)
        return all(nz[i] > nz[i + 1] for i in range(len(nz) - 1))

    def __add__(self, other: "Partition") -> "Partition":
        n = max(len(self), len(other))
        return Partition(tuple(self.part(i) + other.part(i) for i in range(1, n + 1)))

    def __eq__(self, other):
        if isinstance(other, (tuple, list)):
            other = Partition(other)
        if not isinstance(other, Partition):
            return NotImplemented
        return _strip(self.parts) == _strip(other.parts)

    def __hash__(self):
        return hash(_strip(self.parts))

    def __repr__(self):
        return f"Partition({self.parts})"

    def __str__(self):
        return ",".join(str(x) for x in self.parts) if self.parts else "0"


def _strip(p: tuple) -> tuple:
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return p[:n]


def staircase(n: int) -> Partition:
    """delta_n = (n-1, ..., 1, 0)."""
    return Partition(tuple(range(n - 1, -1, -1)))


def plus_staircase(lam: Sequence[int], n: int) -> tuple[int, ...]:
    """Exponent vector lam + delta_n (lam zero-padded to length n)."""
    lam = tuple(lam) + (0,) * (n - len(lam))
    if len(lam) != n:
        raise ValueError(f"{lam} does not fit in {n} parts")
    return tuple(lam[i] + n - 1 - i for i in range(n))


def mu_hat(mu: Sequence[int], ell: int) -> tuple[int, ...]:
    """The length n-1 vector with entries mu_i + 1 (i < ell) and mu_{i+1} (i >= ell)."""
    n = len(mu)
    return tuple(mu[i] + 1 if i + 1 < ell else mu[i + 1] for i in range(n - 1))


def partitions_in_box(length: int, max_part: int) -> list[tuple[int, ...]]:
    """All weakly decreasing tuples of the given length with parts in [0, max_part]."""
    out: list[tuple[int, ...]] = []

    def rec(prefix, cap):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for v in range(cap, -1, -1):
            rec(prefix + [v], v)

    rec([], max_part)
    return sorted(out)


def _grlex_key(e: tuple[int, ...]):
    return (sum(e), e)


class MPoly:
    """Sparse polynomial in x_1..x_nvars with RatQ coefficients (immutable).

    Variables are addressed by 0-based index.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], RatQ | int] | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], RatQ] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError("exponent vector length does not match nvars")
                if not isinstance(c, RatQ):
                    c = RatQ(c)
                if not c.is_zero():
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms) -> "MPoly":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, nvars: int, c=1) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int, k: int = 1) -> "MPoly":
        e = [0] * nvars
        e[i] = k
        return cls._raw(nvars, {tuple(e): ONE})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "MPoly":
        return cls(len(exps), {tuple(exps): c})

    # -- queries ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def free_vars(self) -> set[int]:
        return {i for e in self.terms for i, a in enumerate(e) if a}

    def sorted_terms(self) -> list[tuple[tuple[int, ...], RatQ]]:
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    def constant_term(self) -> RatQ:
        return self.terms.get((0,) * self.nvars, ZERO)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return MPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, RatQ, PolyQ)):
            c = other if isinstance(other, RatQ) else RatQ(other)
            if c.is_zero():
                return MPoly._raw(self.nvars, {})
            return MPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})
        if other.nvars != self.nvars:
            raise ValueError("nvars mismatch")
        out: dict[tuple[int, ...], RatQ] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                p = ca * cb
                s = out.get(e)
                out[e] = p if s is None else s + p
        return MPoly._raw(self.nvars, {e: c for e, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        acc = MPoly.constant(self.nvars)
        for _ in range(k):
            acc = acc * self
        return acc

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("nvars mismatch")
            return other
        return MPoly.constant(self.nvars, other)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- variable manipulation ------------------------------------------
    def permute_vars(self, perm: Sequence[int]) -> "MPoly":
        """Rename x_i -> x_{perm[i]}."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for i, a in enumerate(e):
                ne[perm[i]] += a
            out[tuple(ne)] = c
        return MPoly._raw(self.nvars, out)

    def swap(self, i: int, j: int) -> "MPoly":
        perm = list(range(self.nvars))
        perm[i], perm[j] = j, i
        return self.permute_vars(perm)

    def embed(self, nvars: int, positions: Sequence[int]) -> "MPoly":
        """Place variable i of self at index positions[i] of a larger ring."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            for i, a in enumerate(e):
                ne[positions[i]] += a
            out[tuple(ne)] = c
        return MPoly._raw(nvars, out)

    def restrict(self, positions: Sequence[int]) -> "MPoly":
        """Keep only the listed variables; all others must be absent."""
        keep = set(positions)
        out = {}
        for e, c in self.terms.items():
            if any(a and i not in keep for i, a in enumerate(e)):
                raise ValueError("restrict would drop a live variable")
            out[tuple(e[i] for i in positions)] = c
        return MPoly._raw(len(positions), out)

    def evaluate(self, point: Sequence[RatQ | int]) -> RatQ:
        acc = ZERO
        pts = [p if isinstance(p, RatQ) else RatQ(p) for p in point]
        for e, c in self.terms.items():
            t = c
            for i, a in enumerate(e):
                if a:
                    t = t * pts[i] ** a
            acc = acc + t
        return acc

    def __repr__(self):
        return f"MPoly({self.nvars}, {len(self.terms)} terms)"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.sorted_terms()):
            mono = "*".join(f"x{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(e) if a)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def alternant(e: Sequence[int], vars: Sequence[int], nvars: int | None = None) -> MPoly:
    """det(x_{vars[i]}^{e[j]}) expanded over permutations.

    ``e`` must be strictly decreasing; pass ``plus_staircase(lam, n)``.
    """
    e = tuple(e)
    if len(e) != len(vars):
        raise ValueError("exponent and variable lists differ in length")
    if any(e[i] <= e[i + 1] for i in range(len(e) - 1)):
        raise ValueError(f"alternant exponents must be strictly decreasing, got {e}")
    if len(set(vars)) != len(vars):
        raise ValueError("alternant variables must be distinct")
    if nvars is None:
        nvars = max(vars) + 1 if vars else 0
    out = {}
    n = len(e)
    for p in permutations(range(n)):
        ex = [0] * nvars
        for i in range(n):
            ex[vars[i]] = e[p[i]]
        out[tuple(ex)] = RatQ(_perm_sign(p))
    return MPoly._raw(nvars, out)


def monomial(nvars: int, powers: Mapping[int, int]) -> MPoly:
    e = [0] * nvars
    for i, a in powers.items():
        e[i] += a
    return MPoly._raw(nvars, {tuple(e): ONE})


def linear_diff(nvars: int, i: int, j: int, a: int = 1, b: int = 1) -> MPoly:
    """x_i^a - x_j^b."""
    return MPoly.var(nvars, i, a) - MPoly.var(nvars, j, b)


def product(factors: Iterable[MPoly], nvars: int) -> MPoly:
    acc = MPoly.constant(nvars)
    # multiply the small factors first to keep intermediate sizes down
    for f in sorted(factors, key=lambda f: len(f.terms)):
        acc = acc * f
    return acc


def substitute_q_powers(f: MPoly, mu: Sequence[int]) -> RatQ:
    """f(q^mu_1, ..., q^mu_n)."""
    mu = tuple(mu)
    if len(mu) != f.nvars:
        raise ValueError("substitution length does not match nvars")
    acc = ZERO
    for e, c in f.terms.items():
        acc = acc + c * q_pow(sum(a * m for a, m in zip(e, mu)))
    return acc
