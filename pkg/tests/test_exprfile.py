import pytest

from qhook.classes import lhs_qintegral, make_instance
from qhook.classes.reform import class12_inner
from qhook.exprfile import ExprError, parse_qint
from qhook.multipoly import MPoly, alternant
from qhook.qfield import RatQ
from qhook.qintegral import integrate_region, integrate_simplex, integrate_steps


def test_class3_file_matches_catalog():
    prob = parse_qint("vars 2\nexpr mul(mono(x1), alt(2,0; x1,x2), alt(2,0; x1,x2))\n")
    inst = make_instance("3", lam=(1, 0), mu=(1, 0), m=1)
    assert integrate_region(prob.expr, prob.region) == lhs_qintegral(inst)


def test_operators():
    prob = parse_qint(
        "vars 3\nexpr add(mul(const(-2/5), pow(diff(x1,x2), 2)), sub(mono(x3^2 x1), neg(mono())))\nregion simplex\n"
    )
    x = [MPoly.var(3, i) for i in range(3)]
    one = MPoly.constant(3)
    want = MPoly.constant(3, RatQ(-2) / RatQ(5)) * (x[0] - x[1]) * (x[0] - x[1]) + x[2] * x[2] * x[0] + one
    assert prob.expr == want
    assert integrate_region(prob.expr, prob.region) == integrate_simplex(want)


def test_alt_in_file():
    prob = parse_qint("vars 3\nexpr alt(3,1,0; x3,x1,x2)\n")
    assert prob.expr == alternant((3, 1, 0), (2, 0, 1), 3)


def test_gy_steps_reproduce_inner():
    text = "\n".join(
        [
            "vars 9",
            "expr mul(diff(x1,x2), diff(x3,x4), diff(x5,x6), alt(2,1,0; x1,x2,x3), alt(2,1,0; x4,x5,x6))",
            "step x1 0 x2",
            "step x2 0 x7",
            "step x3 x7 x8",
            "step x4 x8 x9",
            "step x5 x9 x6",
            "step x6 x9 1",
        ]
    )
    # a partial region: parse the steps but keep y free
    with pytest.raises(ValueError):
        parse_qint(text)
    prob = parse_qint(text + "\nstep x7 0 x8\nstep x8 0 x9\nstep x9 0 1\n")
    g = integrate_steps(prob.expr, type(prob.region)(prob.region.steps[:6]))
    assert g.restrict([6, 7, 8]) == class12_inner()


@pytest.mark.parametrize(
    "text",
    [
        "expr mono()\n",
        "vars 2\n",
        "vars 2\nexpr mono(x3)\n",
        "vars 2\nexpr alt(1,1; x1,x2)\n",
        "vars 2\nexpr alt(1,0; x1)\n",
        "vars 2\nexpr frob(x1)\n",
        "vars 2\nexpr mono(x1) mono(x2)\n",
        "vars 2\nexpr mono(x1)\nregion cube\n",
        "vars 2\nexpr mono(x1)\nregion simplex\nstep x1 0 x2\n",
        "vars 1\nexpr mono(x1)\nstep x1 0 5\n",
        "vars 1\nvars 1\nexpr mono()\n",
        "vars 1\nexpr const(1/0)\n",
        "vars 1\nexpr pow(mono(x1), -1)\n",
        "vars 1\nexpr mul(mono(x1)\n",
        "bogus line\n",
    ],
)
def test_errors(text):
    with pytest.raises((ExprError, ValueError, ZeroDivisionError)):
        parse_qint(text)
