import random

import pytest

from qhook.classes import CLASS_IDS, class_spec, instances, lhs_qintegral, make_instance, rhs_closed_form
from qhook.gfseries import (
    check_hlf,
    gf_brute_force,
    gf_truncated,
    gf_via_theorem_attach,
    hook_product,
    hook_product_series,
    series_of,
    verify_lemma_dmkp,
    verify_lemma_Pplus,
)
from qhook.posets import (
    Poset,
    XSet,
    acyclic_elements,
    build_antichain,
    build_chain,
    build_PnmX,
    build_shifted_young,
    build_young,
    disjoint_union,
    hook_lengths,
    is_d_complete,
    slant_sum,
)
from qhook.qfield import inverse_factor_series


def test_gf_examples():
    assert gf_truncated(build_chain(2), 4).as_ints() == [1, 1, 2, 2, 3]
    assert gf_truncated(build_antichain(2), 2).as_ints() == [1, 2, 3]
    assert gf_truncated(Poset(0, []), 5).as_ints() == [1, 0, 0, 0, 0, 0]


def test_hook_series_examples():
    assert hook_product_series([1, 2, 3], 10) == inverse_factor_series([1, 2, 3], 10)
    assert hook_product_series([3, 1, 1], 3).as_ints() == [1, 2, 3, 5]
    assert hook_product_series([], 4).as_ints() == [1, 0, 0, 0, 0]


@pytest.mark.parametrize(
    "P",
    [build_young((4, 3, 1)), build_shifted_young((6, 4, 1)), build_chain(5)],
    ids=["young-431", "shifted-641", "chain-5"],
)
def test_check_hlf_examples(P):
    rep = check_hlf(P, 30, "x")
    assert rep.match and rep.mismatch_degree is None
    assert rep.line(timings=False) == "GF x N=30 MATCH"


def test_check_hlf_reports_mismatch():
    V = Poset(3, [(0, 1), (0, 2)])
    rep = check_hlf(V, 10, "v")
    assert not rep.match and rep.line(timings=False) == "GF v N=10 MISMATCH@3"
    assert not is_d_complete(V).ok


def _random_poset(rng, n):
    rel = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.35]
    return Poset(n, rel)


def test_dp_matches_brute_force():
    rng = random.Random(11)
    for _ in range(25):
        P = _random_poset(rng, rng.randint(1, 5))
        assert gf_truncated(P, 8) == gf_brute_force(P, 8)


def test_product_rule():
    rng = random.Random(3)
    for _ in range(15):
        A = _random_poset(rng, rng.randint(1, 4))
        B = _random_poset(rng, rng.randint(1, 4))
        N = 14
        assert gf_truncated(disjoint_union(A, B), N) == gf_truncated(A, N) * gf_truncated(B, N)


def test_slant_sum_keeps_hook_property():
    P1 = build_young((3, 2))
    for x in acyclic_elements(P1):
        for P2 in (build_chain(2), build_young((2, 1))):
            S = slant_sum(P1, x, P2)
            assert check_hlf(S, 20).match


def test_lemma_Pplus_examples():
    assert verify_lemma_Pplus(build_chain(2), 20)
    assert verify_lemma_Pplus(build_antichain(2), 20)
    assert verify_lemma_Pplus(build_young((2, 1)), 20)


def test_lemma_dmkp_examples():
    C = build_chain(2)
    assert verify_lemma_dmkp(C, 0, 1, 1, 25)
    Y = build_young((2, 1))
    y2 = Y.lower_covers[Y.unique_max()][0]
    assert verify_lemma_dmkp(Y, y2, 1, 2, 25)
    assert verify_lemma_dmkp(Y, y2, 0, 1, 25)
    with pytest.raises(ValueError):
        verify_lemma_dmkp(Y, y2, 1, 0, 10)


def test_attach_class1_matches_integral():
    inst = make_instance("1", n=2, lam=(0, 0), mu=(0, 0))
    n, m, X = class_spec(inst)
    val = gf_via_theorem_attach(n, X, m)
    P = build_PnmX(n, m, X)
    assert val == hook_product(hook_lengths(P))
    assert lhs_qintegral(inst) == rhs_closed_form(inst)


def test_attach_prefactor_trivial_at_m0():
    X = XSet.of(((1, 0), 2, 1))
    assert series_of(gf_via_theorem_attach(2, X, 0), 25) == gf_truncated(build_PnmX(2, 0, X), 25)
    assert series_of(gf_via_theorem_attach(2, X, 2), 25) == gf_truncated(build_PnmX(2, 2, X), 25)


@pytest.mark.parametrize("cid", CLASS_IDS)
def test_class_posets_are_d_complete(cid):
    inst = next(iter(instances(cid)))
    n, m, X = class_spec(inst)
    assert is_d_complete(build_PnmX(n, m, X)).ok
