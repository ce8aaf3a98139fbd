import random
from fractions import Fraction

import pytest

from parhiggs.exact_core import DomainError
from parhiggs.parbun import ParabolicLineBundle, pardeg
from parhiggs.stability import (
    DecomposableHiggsModel,
    SpTripleModel,
    WeightedFiltration,
    alpha_stability_check_gl,
    arrow_feasibility_violations,
    coordinate_filtration,
    general_mw_interval,
    hitchin_model,
    hitchin_sp_triple,
    invariant_subsets,
    is_maximal,
    milnor_wood_bound,
    model_from_json,
    model_to_json,
    pardeg_of_reduction_gl,
    relative_degree,
    sp_dual,
    sp_filtration_degree,
    sp_support_membership,
    sp_triple_from_json,
    sp_triple_to_json,
    stability_verdict,
    toledo,
)
from parhiggs.surface import standard_surface

F = Fraction
HYP = [(2, 1), (1, 2), (0, 3)]


def lines(surf, *specs):
    """specs: (degree, weight-at-every-point) pairs."""
    return tuple(ParabolicLineBundle(d, {x: F(w) for x in surf.labels()})
                 for d, w in specs)


def rand_line(rng, labels):
    return ParabolicLineBundle(
        rng.randint(-3, 3),
        {x: F(rng.randrange(0, 4), 4) for x in labels})


# ------------------------------------------------------- invariant sets ----

def test_invariant_subsets_chain():
    surf = standard_surface(2, 1)
    m = DecomposableHiggsModel(surf, lines(surf, (0, 0), (0, 0), (0, 0)),
                               frozenset({(0, 1), (1, 2)}))
    assert invariant_subsets(m) == [(0,), (0, 1)]


def test_invariant_subsets_two_cycle():
    surf = standard_surface(2, 1)
    m = DecomposableHiggsModel(surf, lines(surf, (1, 0), (-1, 0)),
                               frozenset({(0, 1), (1, 0)}))
    assert invariant_subsets(m) == []


def test_invariant_subsets_no_arrows():
    surf = standard_surface(1, 1)
    m = DecomposableHiggsModel(surf, lines(surf, (0, 0), (0, 0)))
    assert invariant_subsets(m) == [(0,), (1,)]


def test_arrow_out_of_range():
    surf = standard_surface(2, 1)
    with pytest.raises(DomainError):
        DecomposableHiggsModel(surf, lines(surf, (0, 0)), frozenset({(0, 1)}))


# ------------------------------------------------------------- verdicts ----

def test_verdict_stable_chain():
    surf = standard_surface(2, 1)
    # subset (1,) has slope -1 < 0
    m = DecomposableHiggsModel(surf, lines(surf, (1, 0), (-1, 0)),
                               frozenset({(1, 0)}))
    r = stability_verdict(m)
    assert (r.verdict, r.witness, r.slope) == ("stable", None, F(0))


def test_verdict_unstable_witness_is_first_maximizer():
    surf = standard_surface(2, 1)
    m = DecomposableHiggsModel(surf, lines(surf, (2, 0), (2, 0), (-4, 0)))
    r = stability_verdict(m)
    assert r.verdict == "unstable"
    assert r.witness == (0,)
    assert r.slope == F(0)


def test_verdict_polystable_vs_strictly_semistable():
    surf = standard_surface(2, 1)
    split = DecomposableHiggsModel(surf, lines(surf, (1, 0), (1, 0)))
    assert stability_verdict(split).verdict == "polystable"
    joined = DecomposableHiggsModel(surf, lines(surf, (1, 0), (1, 0)),
                                    frozenset({(0, 1)}))
    r = stability_verdict(joined)
    assert r.verdict == "strictly_semistable"
    assert r.witness == (0,)


def test_split_with_non_stable_component_is_not_polystable():
    surf = standard_surface(2, 1)
    # components {0} and {1,2} both of slope 0, but {1,2} is only strictly
    # semistable on its own, so the split does not certify polystability.
    m = DecomposableHiggsModel(surf, lines(surf, (0, 0), (0, 0), (0, 0)),
                               frozenset({(2, 1)}))
    r = stability_verdict(m)
    assert r.verdict == "strictly_semistable"
    assert r.witness == (0,)


def test_single_summand_is_stable():
    surf = standard_surface(0, 3)
    m = DecomposableHiggsModel(surf, lines(surf, (5, F(1, 2))))
    assert stability_verdict(m).verdict == "stable"


def test_feasibility_warnings():
    surf = standard_surface(0, 3)     # deg K(D) = 1
    m = DecomposableHiggsModel(surf, lines(surf, (0, 0), (3, 0)),
                               frozenset({(0, 1), (1, 0)}))
    assert arrow_feasibility_violations(m) == [(0, 1)]


# ------------------------------------------------------ Toledo and MW ----

def test_milnor_wood_values():
    assert milnor_wood_bound(2, 2, 1) == F(3)
    assert milnor_wood_bound(1, 0, 3) == F(1, 2)
    with pytest.raises(DomainError) as e:
        milnor_wood_bound(1, 1, 0)
    assert e.value.code == "not_hyperbolic"


def test_general_interval_no_hyperbolicity_check():
    assert general_mw_interval(2, 3, 2, 1) == (F(-6), F(9))
    assert general_mw_interval(1, 1, 1, 0) == (F(0), F(0))
    assert general_mw_interval(0, 2, 1, 2) == (F(0), F(4))
    with pytest.raises(DomainError):
        general_mw_interval(-1, 0, 2, 1)


def test_sp_triple_requires_symmetric_supports():
    surf = standard_surface(2, 1)
    v = lines(surf, (0, 0), (0, 0))
    with pytest.raises(DomainError) as e:
        SpTripleModel(surf, v, frozenset({(0, 1)}), frozenset())
    assert e.value.code == "asymmetric_support"
    SpTripleModel(surf, v, frozenset({(0, 1), (1, 0)}), frozenset({(0, 0)}))


def test_to_decomposable_arrow_layout():
    surf = standard_surface(2, 1)
    v = lines(surf, (1, 0), (2, 0))
    m = SpTripleModel(surf, v, frozenset({(0, 1), (1, 0)}),
                      frozenset({(1, 1)}))
    d = m.to_decomposable()
    assert d.n == 4
    assert d.arrows == frozenset({(0, 3), (1, 2), (3, 1)})
    assert pardeg(d.summands[2], surf) == -pardeg(v[0], surf)


def test_sp_dual_negates_toledo():
    rng = random.Random(11)
    for n in (1, 2, 3):
        for g, s in HYP:
            surf = standard_surface(g, s)
            v = tuple(rand_line(rng, surf.labels()) for _ in range(n))
            m = SpTripleModel(surf, v, frozenset({(0, 0)}), frozenset())
            assert toledo(sp_dual(m)) == -toledo(m)
            back = sp_dual(sp_dual(m))
            assert toledo(back) == toledo(m)
            assert back.beta_arrows == m.beta_arrows


# ------------------------------------------------------ Hitchin family ----

def test_hitchin_pardegs_frozen():
    m3 = hitchin_model(3, 2, 1)
    assert m3.pardegs() == [F(-3), F(0), F(3)]
    m4 = hitchin_model(4, 2, 1)
    assert m4.pardegs() == [F(-9, 2), F(-3, 2), F(3, 2), F(9, 2)]


def test_hitchin_total_pardeg_zero_and_stable():
    for k in range(2, 6):
        for g, s in HYP:
            m = hitchin_model(k, g, s)
            assert m.sub_pardeg(range(k)) == 0
            assert stability_verdict(m).verdict == "stable"


def test_hitchin_weights_by_parity():
    surf = standard_surface(2, 1)
    assert hitchin_model(4, 2, 1).summands[0].weight("x1") == F(1, 2)
    assert hitchin_model(3, 2, 1).summands[0].weight("x1") == F(0)
    del surf


def test_hitchin_rejects_bad_input():
    with pytest.raises(DomainError):
        hitchin_model(1, 2, 1)
    with pytest.raises(DomainError) as e:
        hitchin_model(2, 1, 0)
    assert e.value.code == "not_hyperbolic"
    with pytest.raises(DomainError):
        hitchin_sp_triple(3, 2, 1)


def test_hitchin_sp_triple_is_maximal_and_stable():
    for k in (2, 4):
        for g, s in HYP:
            t = hitchin_sp_triple(k, g, s)
            assert toledo(t) == milnor_wood_bound(k // 2, g, s)
            assert is_maximal(t)
            assert not is_maximal(sp_dual(t))
            assert stability_verdict(t.to_decomposable()).verdict == "stable"


def test_hitchin_sp_triple_k4_supports():
    t = hitchin_sp_triple(4, 2, 1)
    assert t.beta_arrows == frozenset({(0, 0), (1, 1), (0, 1), (1, 0)})
    assert t.gamma_arrows == frozenset({(0, 1), (1, 0)})
    assert [pardeg(v, t.surface) for v in t.v_summands] == [F(9, 2), F(-3, 2)]


# ------------------------------------------- randomized Milnor-Wood law ----

def _rand_involution_support(rng, n, pair_ok):
    """Symmetric pattern with each index in at most one arrow pair, every
    pair passing the degree gate `pair_ok`.  Shared targets would make the
    kernel of the field a non-coordinate subbundle, outside the regime the
    coordinate verdict decides."""
    pat = set()
    free = list(range(n))
    rng.shuffle(free)
    while free:
        i = free.pop()
        if rng.random() < 0.35:
            continue
        cands = [j for j in free + [i] if pair_ok(i, j)]
        if not cands:
            continue
        j = rng.choice(cands)
        pat |= {(i, j), (j, i)}
        if j != i:
            free.remove(j)
    return frozenset(pat)


def rand_feasible_triple(rng, n, g, s):
    """Random triple with degree-feasible involutive beta/gamma supports."""
    surf = standard_surface(g, s)
    kd = 2 * g - 2 + s
    v = tuple(rand_line(rng, surf.labels()) for _ in range(n))
    p = [pardeg(l, surf) for l in v]
    beta = _rand_involution_support(rng, n, lambda i, j: -p[i] - p[j] <= kd)
    gamma = _rand_involution_support(rng, n, lambda i, j: p[i] + p[j] <= kd)
    return SpTripleModel(surf, v, beta, gamma)


def test_random_semistable_triples_obey_milnor_wood():
    rng = random.Random(2024)
    seen_semistable = 0
    for n in (1, 2, 3):
        for g, s in HYP:
            bound = milnor_wood_bound(n, g, s)
            for _ in range(200):
                t = rand_feasible_triple(rng, n, g, s)
                assert toledo(sp_dual(t)) == -toledo(t)
                for pat in (t.beta_arrows, t.gamma_arrows):
                    for k in range(n):
                        assert sum(1 for (i, j) in pat if i == k) <= 1
                v = stability_verdict(t.to_decomposable()).verdict
                if v != "unstable":
                    seen_semistable += 1
                    assert abs(toledo(t)) <= bound
    assert seen_semistable > 50     # the property was actually exercised


# ------------------------------------------------ filtration machinery ----

def two_step(n, first, weights):
    return coordinate_filtration(n, [first, list(range(n))], weights)


def test_relative_degree_frozen_examples():
    a = two_step(2, [1], (F(-1), F(1)))
    assert relative_degree(a, a) == F(2)
    b = two_step(2, [0], (F(-1), F(1)))
    assert relative_degree(a, b) == F(-2)
    diag = WeightedFiltration(
        2, (((F(1), F(1)),), ((F(1), F(0)), (F(0), F(1)))), (F(-1), F(1)))
    assert relative_degree(diag, a) == F(-2)


def test_weighted_filtration_validation():
    with pytest.raises(DomainError):
        two_step(2, [0], (F(1), F(1)))                      # weights flat
    with pytest.raises(DomainError):
        WeightedFiltration(2, (((F(1), F(0)),),), (F(0),))  # never reaches 2
    with pytest.raises(DomainError):
        WeightedFiltration(
            2, (((F(1), F(0)),), ((F(0), F(1)),)), (F(0), F(1)))  # not nested


def test_pardeg_of_reduction_matches_weighted_pardegs():
    rng = random.Random(5)
    for _ in range(40):
        g, s = rng.choice(HYP)
        surf = standard_surface(g, s)
        n = rng.randint(2, 4)
        m = DecomposableHiggsModel(
            surf, tuple(rand_line(rng, surf.labels()) for _ in range(n)))
        k = rng.randint(1, n)
        order = list(range(n))
        rng.shuffle(order)
        cuts = sorted(rng.sample(range(1, n), k - 1)) + [n]
        steps = [sorted(order[:c]) for c in cuts]
        lam = sorted(rng.sample(range(-5, 6), k))
        lam = [F(x) for x in lam]
        expected = lam[-1] * m.sub_pardeg(range(n))
        for i in range(k - 1):
            expected += (lam[i] - lam[i + 1]) * m.sub_pardeg(steps[i])
        assert pardeg_of_reduction_gl(m, steps, lam) == expected


def test_reduction_input_validation():
    surf = standard_surface(2, 1)
    m = DecomposableHiggsModel(surf, lines(surf, (0, 0), (1, 0)))
    with pytest.raises(DomainError):
        pardeg_of_reduction_gl(m, [[0]], [F(1)])           # never reaches full
    with pytest.raises(DomainError):
        pardeg_of_reduction_gl(m, [[1], [0, 1]], [F(1)])   # shape mismatch


def test_alpha_check_agrees_with_verdict_at_mean_slope():
    rng = random.Random(77)
    for _ in range(120):
        g, s = rng.choice(HYP)
        surf = standard_surface(g, s)
        n = rng.randint(1, 4)
        arrows = set()
        for i in range(n):
            for j in range(n):
                if i != j and rng.random() < 0.3:
                    arrows.add((i, j))
        m = DecomposableHiggsModel(
            surf, tuple(rand_line(rng, surf.labels()) for _ in range(n)),
            frozenset(arrows))
        mu = m.sub_pardeg(range(n)) / n
        ok, witness = alpha_stability_check_gl(m, mu)
        verdict = stability_verdict(m).verdict
        assert ok == (verdict != "unstable")
        if not ok:
            assert m.sub_pardeg(witness) / len(witness) > mu


def test_sp_filtration_degree_frozen_example():
    m = hitchin_model(2, 2, 1)
    val = sp_filtration_degree(m, [[0], [0, 1]], (F(-1), F(1)), F(0))
    assert val == F(3)
    assert m.pardegs() == [F(-3, 2), F(3, 2)]


def test_sp_support_membership():
    surf = standard_surface(2, 1)
    v = lines(surf, (0, 0), (0, 0))
    t = SpTripleModel(surf, v, frozenset({(0, 0)}), frozenset({(1, 1)}))
    assert sp_support_membership(t, [[0], [0, 1]], (F(-1), F(1)))
    assert not sp_support_membership(t, [[0], [0, 1]], (F(1), F(2)))
    one = hitchin_sp_triple(2, 2, 1)
    assert sp_support_membership(one, [[0]], (F(0),))
    assert not sp_support_membership(one, [[0]], (F(1),))
    assert not sp_support_membership(one, [[0]], (F(-1),))


# ---------------------------------------------------------------- JSON ----

def test_model_json_round_trip():
    rng = random.Random(3)
    surf = standard_surface(1, 2)
    m = DecomposableHiggsModel(
        surf, tuple(rand_line(rng, surf.labels()) for _ in range(3)),
        frozenset({(0, 1), (2, 0)}))
    back = model_from_json(model_to_json(m))
    assert back == m
    t = hitchin_sp_triple(4, 2, 1)
    assert sp_triple_from_json(sp_triple_to_json(t)) == t
