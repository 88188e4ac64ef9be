import random
from fractions import Fraction

import pytest

from qhook.classes.partial_fractions import (
    PF_IDS,
    alt_identity_sides,
    build_identity,
    diff,
    pfexp2_from_pfexp1,
    prove,
    verify_partial_fraction,
)


def test_a_id_examples():
    l, r = build_identity("a_id", 1).sides_at({"a1": 5})
    assert l == r == 5 * (1 - 5)
    l, r = build_identity("a_id", 2).sides_at({"a1": 2, "a2": 3})
    assert l == r == -30


def test_alt_identity_n2():
    l, r = alt_identity_sides((1, 0))
    assert l == r


@pytest.mark.parametrize("name", ["a_id", "pfexp1", "pfexp2", "ww_pfe"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_identities_at_random_points(name, n):
    # independent of the grid proof: plain rational evaluation
    ident = build_identity(name, n)
    rng = random.Random(f"{name}-{n}")
    for _ in range(5):
        pt = {v: Fraction(rng.randint(2, 40), rng.randint(1, 7)) for v in ident.variables}
        try:
            l, r = ident.sides_at(pt)
        except ZeroDivisionError:
            continue
        assert l == r


@pytest.mark.parametrize("name", PF_IDS)
def test_small_n_pass(name):
    rep = verify_partial_fraction(name, 2)
    assert rep.passed
    assert rep.line(timings=False).startswith(f"PFE {name} n=2 PASS points=")


def test_perturbed_identity_fails():
    ident = build_identity("a_id", 3)
    ident.rhs[0].coef = 2
    assert not prove(ident, 3).passed
    ident = build_identity("pfexp2", 2)
    ident.rhs[1].mul(diff("a1", "a2")).div(diff("a2", "a1"))  # sign flip
    assert not prove(ident, 2).passed


def test_pfexp2_from_pfexp1():
    rng = random.Random(5)
    for n in (1, 2, 3):
        pt = {"t": Fraction(3, 7), **{f"a{i}": Fraction(rng.randint(2, 9), i + 1) for i in range(1, n + 1)}}
        assert pfexp2_from_pfexp1(n, pt)


def test_unknown_identity():
    with pytest.raises(ValueError):
        build_identity("nope", 2)
    with pytest.raises(ValueError):
        build_identity("a_id", 0)
