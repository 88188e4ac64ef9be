"""Finite posets, the shifted-shape gluing constructions, d-completeness and hooks.

Elements are the integers ``0..p-1``.  Order relations are kept as bitmasks:
``down[x]`` is the principal order ideal of x (including x) and ``up[x]`` the
principal filter.  Cells of (shifted) shapes follow the usual convention that
x <= y iff x lies weakly below and weakly right of y, so the top-left cell is
the maximum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .multipoly import Partition


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Poset:
    """Immutable finite poset stored through its cover relation."""

    def __init__(
        self,
        size: int,
        covers: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
        diagonal: Sequence[int] | None = None,
        reduce: bool = True,
    ):
        self.size = size
        rel = {(a, b) for a, b in covers}
        for a, b in rel:
            if not (0 <= a < size and 0 <= b < size) or a == b:
                raise ValueError(f"bad cover ({a}, {b})")
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(size))
        if len(self.labels) != size:
            raise ValueError("label count does not match size")
        self._order = _toposort(size, rel)
        self.down, self.up = _closure(size, rel, self._order)
        if reduce:
            rel = _reduction(size, self.down, self._order)
        self.covers = frozenset(rel)
        self.diagonal = tuple(diagonal) if diagonal is not None else None
        if self.diagonal is not None:
            for a, b in zip(self.diagonal, self.diagonal[1:]):
                if not self.less(a, b):
                    raise ValueError("diagonal is not a chain")

    # -- basic queries ---------------------------------------------------
    def __len__(self):
        return self.size

    def leq(self, a: int, b: int) -> bool:
        return bool(self.down[b] >> a & 1)

    def less(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def linear_extension(self) -> tuple[int, ...]:
        return self._order

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        lc: list[list[int]] = [[] for _ in range(self.size)]
        for a, b in self.covers:
            lc[b].append(a)
        return tuple(tuple(sorted(x)) for x in lc)

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        uc: list[list[int]] = [[] for _ in range(self.size)]
        for a, b in self.covers:
            uc[a].append(b)
        return tuple(tuple(sorted(x)) for x in uc)

    def maximal(self) -> list[int]:
        return [x for x in range(self.size) if not self.upper_covers[x]]

    def minimal(self) -> list[int]:
        return [x for x in range(self.size) if not self.lower_covers[x]]

    def unique_max(self) -> int:
        m = self.maximal()
        if len(m) != 1:
            raise ValueError(f"poset has {len(m)} maximal elements, expected one")
        return m[0]

    def interval(self, w: int, z: int) -> int:
        return self.up[w] & self.down[z]

    def find(self, label: str) -> int:
        return self.labels.index(label)

    def relabel(self, labels: Sequence[str]) -> "Poset":
        return Poset(self.size, self.covers, labels, self.diagonal, reduce=False)

    def __repr__(self):
        return f"Poset({self.size} elements, {len(self.covers)} covers)"

    @cached_property
    def _d_intervals(self):
        return _find_d_intervals(self)

    def d_intervals(self) -> list["DInterval"]:
        """All d_k-intervals (k >= 3)."""
        return list(self._d_intervals)


def _toposort(size: int, rel: set[tuple[int, int]]) -> tuple[int, ...]:
    indeg = [0] * size
    succ: list[list[int]] = [[] for _ in range(size)]
    for a, b in rel:
        succ[a].append(b)
        indeg[b] += 1
    ready = sorted(i for i in range(size) if indeg[i] == 0)
    out = []
    import heapq

    heapq.heapify(ready)
    while ready:
        a = heapq.heappop(ready)
        out.append(a)
        for b in succ[a]:
            indeg[b] -= 1
            if indeg[b] == 0:
                heapq.heappush(ready, b)
    if len(out) != size:
        raise ValueError("cover relation has a cycle")
    return tuple(out)


def _closure(size, rel, order):
    below: list[list[int]] = [[] for _ in range(size)]
    for a, b in rel:
        below[b].append(a)
    down = [0] * size
    for x in order:
        m = 1 << x
        for a in below[x]:
            m |= down[a]
        down[x] = m
    up = [0] * size
    for x in range(size):
        for a in _bits(down[x]):
            up[a] |= 1 << x
    return tuple(down), tuple(up)


def _reduction(size, down, order):
    rel = set()
    for x in range(size):
        strict = down[x] & ~(1 << x)
        shadow = 0
        for y in _bits(strict):
            shadow |= down[y] & ~(1 << y)
        for y in _bits(strict & ~shadow):
            rel.add((y, x))
    return rel


# -- builders -----------------------------------------------------------

def build_chain(n: int) -> Poset:
    return Poset(n, [(i, i + 1) for i in range(n - 1)], [f"c{i + 1}" for i in range(n)])


def build_antichain(n: int) -> Poset:
    return Poset(n, [], [f"a{i + 1}" for i in range(n)])


def _cells_poset(cells: list[tuple[int, int]], prefix: str = "") -> Poset:
    index = {c: i for i, c in enumerate(cells)}
    covers = []
    for (r, c), i in index.items():
        for nb in ((r, c + 1), (r + 1, c)):
            j = index.get(nb)
            if j is not None:
                covers.append((j, i))
    return Poset(len(cells), covers, [f"{prefix}{r},{c}" for r, c in cells])


def young_cells(lam: Sequence[int]) -> list[tuple[int, int]]:
    return [(r, c) for r, row in enumerate(lam, start=1) for c in range(1, row + 1)]


def shifted_cells(lam: Sequence[int]) -> list[tuple[int, int]]:
    return [(r, c) for r, row in enumerate(lam, start=1) for c in range(r, r + row)]


def build_young(lam: Sequence[int]) -> Poset:
    lam = Partition(lam)
    return _cells_poset(young_cells(lam))


def build_shifted_young(lam: Sequence[int]) -> Poset:
    lam = Partition(lam)
    if not lam.is_strict():
        raise ValueError(f"shifted shape needs a strict partition, got {tuple(lam)}")
    return _cells_poset(shifted_cells([x for x in lam if x]))


def disjoint_union(*posets: Poset) -> Poset:
    covers, labels, off = [], [], 0
    for k, P in enumerate(posets):
        covers += [(a + off, b + off) for a, b in P.covers]
        labels += [f"{k}:{s}" for s in P.labels]
        off += P.size
    return Poset(off, covers, labels, reduce=False)


@dataclass(frozen=True)
class XEntry:
    lam: tuple[int, ...]  # zero-padded to length n_i
    n_i: int
    s_i: int

    @classmethod
    def make(cls, lam: Sequence[int], n_i: int, s_i: int) -> "XEntry":
        return cls(tuple(Partition(lam, n_i)), n_i, s_i)

    def __str__(self):
        return f"(({','.join(map(str, self.lam))}),{self.n_i},{self.s_i})"


@dataclass(frozen=True)
class XSet:
    entries: tuple[XEntry, ...]

    @classmethod
    def of(cls, *triples) -> "XSet":
        return cls(tuple(XEntry.make(*t) for t in triples))

    def validate(self, n: int) -> None:
        for e in self.entries:
            if e.n_i < 1 or e.s_i < 1 or e.s_i + e.n_i - 1 > n:
                raise ValueError(f"entry {e} does not fit on {n} diagonal elements")

    def covers_all_pairs(self, n: int) -> bool:
        """Every consecutive diagonal pair (j, j+1) lies inside some entry's range."""
        spans = [(e.s_i, e.s_i + e.n_i - 1) for e in self.entries]
        return all(any(a <= j and j + 1 <= b for a, b in spans) for j in range(1, n))

    def __str__(self):
        return "{" + ",".join(str(e) for e in self.entries) + "}"


class _Builder:
    """Mutable accumulator of elements and relations used by the constructions."""

    def __init__(self, P: Poset | None = None):
        self.labels: list[str] = list(P.labels) if P else []
        self.rel: set[tuple[int, int]] = set(P.covers) if P else set()

    def new(self, label: str) -> int:
        # repeated constructions (D of D, P++ ...) would otherwise reuse labels
        while label in self.labels:
            label += "'"
        self.labels.append(label)
        return len(self.labels) - 1

    def cover(self, lo: int, hi: int) -> None:
        self.rel.add((lo, hi))

    def done(self, diagonal=None) -> Poset:
        return Poset(len(self.labels), self.rel, self.labels, diagonal)


def _glue_shifted(b: _Builder, chain: Sequence[int], lam: Sequence[int], tag: str) -> None:
    n = len(chain)
    lam = tuple(Partition(lam, n))
    rows = [lam[r - 1] + n + 1 - r for r in range(1, n + 1)]
    cell_id: dict[tuple[int, int], int] = {}
    for r in range(1, n + 1):
        for c in range(r, r + rows[r - 1]):
            if c == r:
                cell_id[(r, c)] = chain[n - r]  # (1,1) is x_n, (n,n) is x_1
            else:
                cell_id[(r, c)] = b.new(f"{tag}:{r},{c}")
    for (r, c), i in cell_id.items():
        for nb in ((r, c + 1), (r + 1, c)):
            j = cell_id.get(nb)
            if j is not None:
                b.cover(j, i)


def attach_D(P: Poset, C: Sequence[int], lam: Sequence[int]) -> Poset:
    """Glue (lam + delta_{n+1})^* onto the chain C = (x_1 < ... < x_n) of P."""
    C = list(C)
    for a, c in zip(C, C[1:]):
        if not P.less(a, c):
            raise ValueError("attach_D: C is not an increasing chain")
    b = _Builder(P)
    _glue_shifted(b, C, lam, "D")
    return b.done(P.diagonal)


def build_PnX(n: int, X: XSet) -> Poset:
    return build_PnmX(n, 0, X)


def build_PnmX(n: int, m: int, X: XSet) -> Poset:
    X.validate(n)
    b = _Builder()
    diag = [b.new(f"x{i + 1}") for i in range(n)]
    for i in range(n - 1):
        b.cover(diag[i], diag[i + 1])
    for t, e in enumerate(X.entries):
        chain = diag[e.s_i - 1 : e.s_i - 1 + e.n_i]
        _glue_shifted(b, chain, e.lam, f"E{t + 1}")
    prev = diag[-1]
    for j in range(m):
        c = b.new(f"t{j + 1}")
        b.cover(prev, c)
        prev = c
    return b.done(diag)


def levels(P: Poset) -> list[int]:
    """Number of elements of each level: y <= x_i but not y <= x_{i-1}."""
    if P.diagonal is None:
        raise ValueError("levels need the diagonal annotation")
    out, prev = [], 0
    for x in P.diagonal:
        d = P.down[x]
        out.append(popcount(d & ~prev))
        prev = d
    return out


def levels_formula(n: int, X: XSet) -> list[int]:
    """Levels of P_n(X) computed from X alone (row r of an entry sits at level s+n_i-r)."""
    ell = [1] * n
    for e in X.entries:
        for r in range(1, e.n_i + 1):
            ell[e.s_i + e.n_i - r - 1] += e.lam[r - 1] + e.n_i - r
    return ell


def op_plus(P: Poset) -> Poset:
    b = _Builder(P)
    top = b.new("top+")
    for x in P.maximal():
        b.cover(x, top)
    return b.done(P.diagonal)


def remove_elements(P: Poset, drop: Iterable[int]) -> Poset:
    """Induced subposet on the complement of drop (order restricted, then reduced)."""
    drop = set(drop)
    keep = [x for x in range(P.size) if x not in drop]
    pos = {x: i for i, x in enumerate(keep)}
    rel = [(pos[a], pos[b]) for a in keep for b in keep if a != b and P.leq(a, b)]
    diag = None
    if P.diagonal is not None and not drop & set(P.diagonal):
        diag = [pos[x] for x in P.diagonal]
    return Poset(len(keep), rel, [P.labels[x] for x in keep], diag)


def op_minus(P: Poset) -> Poset:
    return remove_elements(P, [P.unique_max()])


def is_top_tree_element(P: Poset, x: int) -> bool:
    return all(len(P.upper_covers[y]) <= 1 for y in _bits(P.up[x]))


def acyclic_elements(P: Poset) -> list[int]:
    necks = set()
    for d in P.d_intervals():
        necks.update(d.neck)
    return [x for x in range(P.size) if is_top_tree_element(P, x) and x not in necks]


def slant_sum(P1: Poset, x: int, P2: Poset) -> Poset:
    """Disjoint union with the maximum of P2 placed directly below x in P1."""
    if x not in acyclic_elements(P1):
        raise ValueError(f"element {P1.labels[x]} is not acyclic")
    y = P2.unique_max()
    b = _Builder(P1)
    off = len(b.labels)
    for s in P2.labels:
        b.new(f"S:{s}")
    for lo, hi in P2.covers:
        b.cover(lo + off, hi + off)
    b.cover(y + off, x)
    return b.done(P1.diagonal)


def _add_z_chain(P: Poset, y2: int, m: int, k: int, with_y0: bool) -> Poset:
    y1 = P.unique_max()
    if (y2, y1) not in P.covers:
        raise ValueError("y2 must be covered by the maximum of P")
    if m < 0 or k < 0:
        raise ValueError("m and k must be nonnegative")
    b = _Builder(P)
    top = m if with_y0 else 0
    z = {j: b.new(f"z{j}") for j in range(-k, top + 1)}
    for j in range(-k, top):
        b.cover(z[j], z[j + 1])
    b.cover(y1, z[0])
    if k >= 1:
        b.cover(y2, z[-1])
    if with_y0:
        y0 = b.new("y0")
        if m >= 1:
            b.cover(y0, z[1])
        b.cover(y1, y0)
    return b.done(P.diagonal)


def build_Dmk(P: Poset, y2: int, m: int, k: int) -> Poset:
    """Add the chain z_m > ... > z_0 > ... > z_{-k} and y_0 (see module notes).

    Covers: z_1 > y_0 (when m >= 1), z_0 > y_1, z_{-1} > y_2 (when k >= 1),
    y_0 > y_1, where y_1 is the maximum of P and y_2 is covered by y_1.
    """
    return _add_z_chain(P, y2, m, k, True)


def build_Dk(P: Poset, y2: int, k: int) -> Poset:
    """build_Dmk without z_m..z_1 and y_0."""
    return _add_z_chain(P, y2, 0, k, False)


# -- order ideals -------------------------------------------------------

def order_ideals(P: Poset, max_size: int | None = None, guard: int = 10**6) -> list[int]:
    """All order ideals (as bitmasks), ordered by size then value.

    With max_size set only ideals of at most that many elements are produced;
    this family is closed under taking sub-ideals.
    """
    cap = P.size if max_size is None else min(max_size, P.size)
    level = [0]
    out = [0]
    strict_down = [P.down[x] & ~(1 << x) for x in range(P.size)]
    for _ in range(cap):
        nxt = set()
        for I in level:
            for x in range(P.size):
                if not I >> x & 1 and strict_down[x] & ~I == 0:
                    nxt.add(I | 1 << x)
        level = sorted(nxt)
        out.extend(level)
        if len(out) > guard:
            raise MemoryError(f"more than {guard} order ideals")
        if not level:
            break
    return out


# -- d-complete structure ----------------------------------------------

@dataclass(frozen=True)
class DInterval:
    k: int
    bottom: int
    top: int
    sides: tuple[int, int]
    neck: tuple[int, ...] = field(default=())
    members: int = 0


def _match_diamond(P: Poset, members: int, bottom: int, tail_above: int):
    """Match a chain-diamond-chain with k-2 singleton ranks below the pair.

    Returns (k, sides, ranks-list) or None.  tail_above is the number of
    singleton ranks above the pair minus (k-2): 0 for d_k, -1 for d_k^-.
    """
    elems = [x for x in P.linear_extension() if members >> x & 1]
    rank = {}
    for x in elems:
        below = [y for y in P.lower_covers[x] if members >> y & 1]
        rank[x] = 0 if x == bottom else 1 + max((rank[y] for y in below), default=-10**6)
        if rank[x] < 0:
            return None
    R = max(rank.values()) + 1
    by_rank: list[list[int]] = [[] for _ in range(R)]
    for x, r in rank.items():
        by_rank[r].append(x)
    wide = [r for r in range(R) if len(by_rank[r]) != 1]
    if len(wide) != 1 or len(by_rank[wide[0]]) != 2:
        return None
    rs = wide[0]
    k = rs + 2
    if R - 1 - rs != k - 2 + tail_above:
        return None
    x, y = by_rank[rs]
    below = by_rank[rs - 1][0]
    if (below, x) not in P.covers or (below, y) not in P.covers:
        return None
    if rs + 1 < R:
        above = by_rank[rs + 1][0]
        if (x, above) not in P.covers or (y, above) not in P.covers:
            return None
    for r in range(R - 1):
        if r in (rs - 1, rs):
            continue
        if (by_rank[r][0], by_rank[r + 1][0]) not in P.covers:
            return None
    ncov = sum(1 for a, b in P.covers if members >> a & 1 and members >> b & 1)
    if ncov != R + 1:
        return None
    return k, (x, y), by_rank, rs


def _find_d_intervals(P: Poset) -> tuple[DInterval, ...]:
    out = []
    for w in range(P.size):
        for z in _bits(P.up[w] & ~(1 << w)):
            I = P.interval(w, z)
            s = popcount(I)
            if s < 4 or s % 2:
                continue
            m = _match_diamond(P, I, w, 0)
            if m is None:
                continue
            k, sides, by_rank, rs = m
            neck = tuple(by_rank[r][0] for r in range(rs + 1, len(by_rank)))
            out.append(DInterval(k, w, z, sides, neck, I))
    return tuple(out)


def d_minus_sets(P: Poset) -> list[tuple[int, int, int]]:
    """d_k^- convex sets as (k, bottom, members-mask)."""
    out = []
    for w in range(P.size):
        ups = P.upper_covers[w]
        for i in range(len(ups)):
            for j in range(i + 1, len(ups)):
                out.append((3, w, 1 << w | 1 << ups[i] | 1 << ups[j]))
    for w in range(P.size):
        for v in _bits(P.up[w] & ~(1 << w)):
            I = P.interval(w, v)
            s = popcount(I)
            if s < 5 or s % 2 == 0:
                continue
            m = _match_diamond(P, I, w, -1)
            if m is not None:
                out.append((m[0], w, I))
    return out


@dataclass
class DCompleteResult:
    ok: bool
    witness: str = ""

    def __bool__(self):
        return self.ok


def is_d_complete(P: Poset) -> DCompleteResult:
    intervals = P.d_intervals()
    by_bottom_k: dict[tuple[int, int], list[DInterval]] = {}
    for d in intervals:
        by_bottom_k.setdefault((d.bottom, d.k), []).append(d)
    seen_tops: dict[tuple[int, int], int] = {}
    for k, w, I in d_minus_sets(P):
        hit = any(d.members & I == I and popcount(d.members) == popcount(I) + 1
                  for d in by_bottom_k.get((w, k), []))
        if not hit:
            names = sorted(P.labels[x] for x in _bits(I))
            return DCompleteResult(False, f"condition 1: d_{k}^- set {names} has no completing top")
        key = (k, I & ~(1 << w))
        if key in seen_tops and seen_tops[key] != w:
            names = sorted(P.labels[x] for x in _bits(key[1]))
            return DCompleteResult(False, f"condition 3: two d_{k}^- sets share {names}")
        seen_tops[key] = w
    for d in intervals:
        for y in P.lower_covers[d.top]:
            if not d.members >> y & 1:
                return DCompleteResult(
                    False, f"condition 2: top {P.labels[d.top]} of a d_{d.k}-interval covers {P.labels[y]}"
                )
    return DCompleteResult(True)


class HookError(ValueError):
    pass


def hook_lengths(P: Poset) -> tuple[int, ...]:
    """Hook length of every element, indexed by element id."""
    tops: dict[int, list[DInterval]] = {}
    for d in P.d_intervals():
        tops.setdefault(d.top, []).append(d)
    h = [0] * P.size
    for z in P.linear_extension():
        cands = tops.get(z)
        if not cands:
            h[z] = popcount(P.down[z])
            continue
        kmin = min(d.k for d in cands)
        best = [d for d in cands if d.k == kmin]
        if len({d.bottom for d in best}) != 1:
            raise HookError(f"element {P.labels[z]} tops several d_{kmin}-intervals")
        d = best[0]
        x, y = d.sides
        h[z] = h[x] + h[y] - h[d.bottom]
        if h[z] < 1:
            raise HookError(f"non-positive hook at {P.labels[z]}")
    return tuple(h)


# -- text format --------------------------------------------------------

def parse_poset(text: str) -> Poset:
    """Parse the line format ``elem <id>``, ``cover <lo> <hi>``, ``diag <id> ...``."""
    ids: dict[str, int] = {}
    covers, diag = [], None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "elem" and len(tok) == 2:
            if tok[1] in ids:
                raise ValueError(f"line {lineno}: duplicate element {tok[1]}")
            ids[tok[1]] = len(ids)
        elif tok[0] == "cover" and len(tok) == 3:
            try:
                covers.append((ids[tok[1]], ids[tok[2]]))
            except KeyError as e:
                raise ValueError(f"line {lineno}: unknown element {e.args[0]}") from None
        elif tok[0] == "diag" and len(tok) >= 2:
            try:
                diag = [ids[t] for t in tok[1:]]
            except KeyError as e:
                raise ValueError(f"line {lineno}: unknown element {e.args[0]}") from None
        else:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}")
    return Poset(len(ids), covers, list(ids), diag)


def format_poset(P: Poset) -> str:
    lines = [f"elem {P.labels[x]}" for x in range(P.size)]
    lines += [f"cover {P.labels[a]} {P.labels[b]}" for a, b in sorted(P.covers)]
    if P.diagonal:
        lines.append("diag " + " ".join(P.labels[x] for x in P.diagonal))
    return "\n".join(lines) + "\n"
