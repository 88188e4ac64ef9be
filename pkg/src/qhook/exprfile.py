"""A small text format for q-integrals, used by ``qhook qint``.

A file has one ``vars <n>`` line, one or more ``expr`` lines (concatenated)
holding a prefix expression, and optionally a region:

    vars 3
    expr mul(alt(2,1,0; x1,x2,x3), mono(x3^2))
    region simplex

or explicit steps, innermost first, each bound being 0, 1 or a variable:

    step x1 0 x2
    step x2 0 x3
    step x3 0 1

Expressions:

    alt(e1,...,ek; xi1,...,xik)    alternant det(x^e), e strictly decreasing
    mono(x1^2 x3)                  monomial (``mono()`` is 1)
    const(3) / const(-2/5)         rational constant
    mul(a, b, ...)  add(a, b, ...)  sub(a, b)  neg(a)  pow(a, k)
    diff(xi, xj)                   shorthand for x_i - x_j

Lines starting with ``#`` are comments.  With no region line the simplex
0 <= x1 <= ... <= xn <= 1 is used.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .multipoly import MPoly, alternant, linear_diff
from .qfield import RatQ
from .qintegral import Region, Var

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z_0-9]*)|(-?\d+(?:/\d+)?)|(.))")


class ExprError(ValueError):
    pass


@dataclass
class QIntProblem:
    nvars: int
    expr: MPoly
    region: Region


def _tokens(s: str) -> list[str]:
    out = []
    pos = 0
    s = s.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            break
        tok = m.group(1) or m.group(2) or m.group(3)
        if tok.strip():
            out.append(tok)
        pos = m.end()
    return out


def _var_index(tok: str, nvars: int) -> int:
    m = re.fullmatch(r"x(\d+)", tok)
    if not m:
        raise ExprError(f"expected a variable x<i>, got {tok!r}")
    i = int(m.group(1))
    if not 1 <= i <= nvars:
        raise ExprError(f"variable {tok} outside x1..x{nvars}")
    return i - 1


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.toks = _tokens(text)
        self.i = 0
        self.n = nvars

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, want: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ExprError("unexpected end of expression")
        if want is not None and tok != want:
            raise ExprError(f"expected {want!r}, got {tok!r}")
        self.i += 1
        return tok

    def parse(self) -> MPoly:
        e = self.expr()
        if self.peek() is not None:
            raise ExprError(f"trailing input at {self.peek()!r}")
        return e

    def _args(self) -> list[MPoly]:
        self.take("(")
        args = [self.expr()]
        while self.peek() == ",":
            self.take(",")
            args.append(self.expr())
        self.take(")")
        return args

    def _int(self) -> int:
        tok = self.take()
        if not re.fullmatch(r"-?\d+", tok):
            raise ExprError(f"expected an integer, got {tok!r}")
        return int(tok)

    def expr(self) -> MPoly:
        head = self.take()
        n = self.n
        if head == "alt":
            self.take("(")
            exps = [self._int()]
            while self.peek() == ",":
                self.take(",")
                exps.append(self._int())
            self.take(";")
            vs = [_var_index(self.take(), n)]
            while self.peek() == ",":
                self.take(",")
                vs.append(_var_index(self.take(), n))
            self.take(")")
            if len(exps) != len(vs):
                raise ExprError("alt needs as many exponents as variables")
            return alternant(exps, vs, n)
        if head == "mono":
            self.take("(")
            e = [0] * n
            while self.peek() != ")":
                v = _var_index(self.take(), n)
                k = 1
                if self.peek() == "^":
                    self.take("^")
                    k = self._int()
                    if k < 0:
                        raise ExprError("negative exponent")
                e[v] += k
            self.take(")")
            return MPoly.monomial(e)
        if head == "const":
            self.take("(")
            tok = self.take()
            self.take(")")
            try:
                c = Fraction(tok)
            except ValueError:
                raise ExprError(f"bad constant {tok!r}") from None
            return MPoly.constant(n, RatQ(c.numerator) / RatQ(c.denominator))
        if head == "diff":
            self.take("(")
            a = _var_index(self.take(), n)
            self.take(",")
            b = _var_index(self.take(), n)
            self.take(")")
            return linear_diff(n, a, b)
        if head == "pow":
            self.take("(")
            base = self.expr()
            self.take(",")
            k = self._int()
            self.take(")")
            if k < 0:
                raise ExprError("negative power")
            return base ** k
        if head in ("mul", "add", "sub", "neg"):
            args = self._args()
            if head == "mul":
                out = args[0]
                for a in args[1:]:
                    out = out * a
                return out
            if head == "add":
                out = args[0]
                for a in args[1:]:
                    out = out + a
                return out
            if head == "sub":
                if len(args) != 2:
                    raise ExprError("sub takes two arguments")
                return args[0] - args[1]
            if len(args) != 1:
                raise ExprError("neg takes one argument")
            return -args[0]
        raise ExprError(f"unknown operator {head!r}")


def _bound(tok: str, nvars: int):
    if tok in ("0", "1"):
        return int(tok)
    return Var(_var_index(tok, nvars))


def parse_qint(text: str) -> QIntProblem:
    nvars = None
    expr_parts: list[str] = []
    steps = []
    simplex = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "vars":
            if nvars is not None:
                raise ExprError(f"line {lineno}: vars given twice")
            try:
                nvars = int(rest)
            except ValueError:
                raise ExprError(f"line {lineno}: bad vars line") from None
            if nvars < 1:
                raise ExprError(f"line {lineno}: need at least one variable")
        elif key == "expr":
            expr_parts.append(rest)
        elif key == "region":
            if rest != "simplex":
                raise ExprError(f"line {lineno}: only 'region simplex' is named")
            simplex = True
        elif key == "step":
            steps.append((lineno, rest.split()))
        else:
            raise ExprError(f"line {lineno}: cannot parse {raw!r}")
    if nvars is None:
        raise ExprError("missing vars line")
    if not expr_parts:
        raise ExprError("missing expr line")
    if simplex and steps:
        raise ExprError("give either 'region simplex' or step lines, not both")
    expr = _Parser(" ".join(expr_parts), nvars).parse()
    if steps:
        out = []
        for lineno, toks in steps:
            if len(toks) != 3:
                raise ExprError(f"line {lineno}: step needs a variable and two bounds")
            try:
                out.append((_var_index(toks[0], nvars), _bound(toks[1], nvars), _bound(toks[2], nvars)))
            except ExprError as e:
                raise ExprError(f"line {lineno}: {e}") from None
        region = Region(tuple(out))
        region.validate(nvars, complete=True)
    else:
        region = Region.simplex(nvars)
    return QIntProblem(nvars, expr, region)
