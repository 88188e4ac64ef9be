"""Per-instance verification, instance sweeps and the report line format."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from ..gfseries import gf_truncated, gf_via_theorem_attach, hook_product_series, series_of
from ..multipoly import partitions_in_box
from ..posets import build_PnmX, hook_lengths, is_d_complete
from ..qfield import RatQ
from ..qintegral import integrate_simplex
from . import reform
from .catalog import CATALOG, CLASS_IDS, ClassInstance, class_spec, lhs_integrand, make_instance, rhs_closed_form
from .hooks import class11_readings


@dataclass
class VerifyReport:
    instance: ClassInstance
    lhs: RatQ | None
    rhs: RatQ | None
    passed: bool
    seconds: float
    checks: list[tuple[str, bool]] = field(default_factory=list)

    def line(self, timings: bool = True) -> str:
        head = f"CLASS {self.instance.cid}"
        params = self.instance.params()
        if params:
            head += " " + params
        head += " PASS" if self.passed else " FAIL"
        if not self.passed:
            failed = [name for name, ok in self.checks if not ok]
            head += " [" + ",".join(failed) + "]"
        return f"{head} {self.seconds:.3f}" if timings else head


def lhs_qintegral(inst: ClassInstance) -> RatQ:
    return integrate_simplex(lhs_integrand(inst))


def _reform_mu(inst: ClassInstance) -> tuple[int, ...]:
    return tuple(x + 1 for x in inst.lam)


def verify_class(inst: ClassInstance, direct12: bool = False) -> VerifyReport:
    """Run every check that applies to the instance; pass means all of them hold.

    Class 12 goes through the two-stage integral unless ``direct12`` is set,
    in which case the six-variable integral is compared as well.
    """
    t = time.perf_counter()
    checks: list[tuple[str, bool]] = []
    lhs = rhs = None
    cid = inst.cid
    if cid == "12":
        lhs = reform.class12_reform_lhs(inst.lam)
        rhs = reform.class12_reform_rhs(inst.lam)
        checks.append(("two-stage", lhs == rhs))
        if direct12:
            checks.append(("direct", lhs_qintegral(inst) == rhs_closed_form(inst)))
    else:
        lhs = lhs_qintegral(inst)
        rhs = rhs_closed_form(inst)
        checks.append(("integral", lhs == rhs))
    if cid == "8d":
        a, b = reform.class8d_reform_sides(_reform_mu(inst))
        checks.append(("dmk-form", a == b))
    elif cid == "10":
        a, b = reform.class10_reform_sides(_reform_mu(inst))
        checks.append(("dmk-form", a == b))
    elif cid == "11":
        a, b = class11_readings(inst)
        checks.append(("readings", a == b))
    passed = all(ok for _, ok in checks)
    return VerifyReport(inst, lhs, rhs, passed, time.perf_counter() - t, checks)


@dataclass
class CrossReport:
    instance: ClassInstance
    size: int
    d_complete: bool
    dp_vs_hooks: bool
    attach_vs_dp: bool

    @property
    def passed(self) -> bool:
        return self.d_complete and self.dp_vs_hooks and self.attach_vs_dp


def cross_pipeline(inst: ClassInstance, N: int = 30) -> CrossReport:
    """Truncated GF of the poset against its hook product and the attach integral."""
    n, m, X = class_spec(inst)
    P = build_PnmX(n, m, X)
    dc = is_d_complete(P).ok
    dp = gf_truncated(P, N)
    hooks_ok = dc and dp == hook_product_series(hook_lengths(P), N)
    attach_ok = series_of(gf_via_theorem_attach(n, X, m), N) == dp
    return CrossReport(inst, P.size, dc, hooks_ok, attach_ok)


# -- sweeps ---------------------------------------------------------------------

@dataclass(frozen=True)
class SweepBounds:
    max_part: int = 2
    max_km: int = 2
    max_n: int = 4


def _n_range(cid: str, b: SweepBounds) -> range:
    d = CATALOG[cid]
    return range(d.n_min, b.max_n + 1)


def instances(cid: str, b: SweepBounds = SweepBounds()) -> Iterator[ClassInstance]:
    """Every instance of the class within the bounds, as validated instances."""
    d = CATALOG[cid]
    names = list(d.fields)
    ns = list(_n_range(cid, b)) if "n" in d.fields else [None]
    for n in ns:
        choices: list[list] = []
        for name in names:
            spec = d.fields[name]
            if name == "n":
                choices.append([n])
            elif spec == "int":
                if name == "eps":
                    choices.append([0, 1])
                elif cid == "11" and name == "k":
                    choices.append(list(range(1, b.max_km + 1)))
                else:
                    choices.append(list(range(b.max_km + 1)))
            else:
                length = spec(n) if callable(spec) else spec
                choices.append(partitions_in_box(length, b.max_part))
        for combo in _product(choices):
            yield make_instance(cid, **dict(zip(names, combo)))


def _product(choices):
    if not choices:
        yield ()
        return
    for head in choices[0]:
        for rest in _product(choices[1:]):
            yield (head,) + rest


def sweep(classes: Iterable[str] = CLASS_IDS, b: SweepBounds = SweepBounds()) -> list[ClassInstance]:
    out = [I for cid in classes for I in instances(cid, b)]
    return sorted(out, key=ClassInstance.key)


# -- instance files ----------------------------------------------------------

def parse_instance_line(line: str) -> ClassInstance:
    """`class <id> lambda=a,b mu=... k=.. m=.. eps=.. n=..`; fields in any order."""
    toks = line.split()
    if len(toks) < 2 or toks[0] != "class":
        raise ValueError(f"not an instance line: {line!r}")
    params: dict = {}
    keymap = {"lambda": "lam", "lam": "lam", "mu": "mu", "k": "k", "m": "m", "eps": "eps", "n": "n"}
    for tok in toks[2:]:
        key, sep, val = tok.partition("=")
        if not sep or key not in keymap:
            raise ValueError(f"bad field {tok!r}")
        name = keymap[key]
        if name in params:
            raise ValueError(f"field {key} given twice")
        try:
            if name in ("lam", "mu"):
                params[name] = tuple(int(x) for x in val.split(",")) if val else ()
            else:
                params[name] = int(val)
        except ValueError:
            raise ValueError(f"bad value in {tok!r}") from None
    return make_instance(toks[1], **params)


def parse_instance_file(text: str) -> list[ClassInstance]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(parse_instance_line(line))
    return out


def format_instance(inst: ClassInstance) -> str:
    p = inst.params()
    return f"class {inst.cid}" + (f" {p}" if p else "")
