import math
from fractions import Fraction

import pytest
from mpmath import mp

from oracles import PHI
from phigraph.extremal import ExtremalParams, blow_up, build_tree, rootward_orientation
from phigraph.flow import Orientation, orient_bounded_outdegree, pseudoarboricity
from phigraph.generators import (
    GenSpec,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    random_gnp,
    random_k_degenerate,
    random_tree,
    star_graph,
)
from phigraph.graph import Graph
from phigraph.inequality import (
    arc_certificate,
    check_cubed_bound,
    check_main,
    degree_power_sum,
    edge_product_sum,
    weighted_amgm,
)

T42 = build_tree(ExtremalParams(4, 2))
# oracle: 10^(phi^2) + 10 * 5^(phi^2) + 40, evaluated in floats
T42_RHS = 10 ** (PHI * PHI) + 10 * 5 ** (PHI * PHI) + 40


@pytest.mark.parametrize(
    "x, y, p, q, lhs, rhs",
    [(4, 4, "0.5", "0.5", 4, 4), (1, 1, "0.3", "0.7", 1, 1), (2, 8, "0.5", "0.5", 4, 5)],
)
def test_weighted_amgm_examples(x, y, p, q, lhs, rhs):
    got_l, got_r = weighted_amgm(x, y, p, q)
    assert got_l == pytest.approx(lhs, rel=1e-15)
    assert got_r == pytest.approx(rhs, rel=1e-15)


def test_weighted_amgm_errors():
    with pytest.raises(ValueError, match="sum to 1"):
        weighted_amgm(1, 2, 0.5, 0.6)
    with pytest.raises(ValueError):
        weighted_amgm(0, 2, 0.5, 0.5)
    with pytest.raises(ValueError):
        weighted_amgm(1, 2, 1, 0)


def test_weighted_amgm_random():
    import random

    rng = random.Random(0)
    for _ in range(200):
        x, y = rng.uniform(0.01, 100), rng.uniform(0.01, 100)
        with mp.workdps(60):
            p = mp.mpf(rng.uniform(0.01, 0.99))
            q = 1 - p
        lhs, rhs = weighted_amgm(x, y, p, q)
        assert lhs <= rhs * (1 + 1e-30)


@pytest.mark.parametrize("g, expected", [(complete_graph(2), 1), (path_graph(3), 4), (T42, 700)])
def test_edge_product_sum(g, expected):
    assert edge_product_sum(g) == expected


def test_t42_shape():
    assert T42.n == 51
    assert sorted(T42.degree).count(1) == 40
    assert T42.degree[0] == 10 and T42.degree.count(5) == 10
    assert edge_product_sum(T42) == 10 * (10 * 5) + 40 * (5 * 1)


def test_degree_power_sum_examples():
    phi_sq = (1 + mp.sqrt(5)) / 2 + 1
    assert degree_power_sum(complete_graph(2), phi_sq) == pytest.approx(2, rel=1e-40)
    assert degree_power_sum(cycle_graph(4), 3) == 32
    assert float(degree_power_sum(path_graph(3), phi_sq)) == pytest.approx(2 + 2 ** (PHI * PHI), rel=1e-14)


def test_degree_power_sum_ignores_isolated():
    g = Graph(5, ((0, 1),))
    assert degree_power_sum(g, 3) == 2


@pytest.mark.parametrize(
    "g, lhs, rhs, equality",
    [
        (cycle_graph(4), 16, Fraction(16), True),
        (complete_graph(4), 54, Fraction(54), True),
        (path_graph(3), 4, Fraction(5), False),
    ],
)
def test_cubed_examples(g, lhs, rhs, equality):
    r = check_cubed_bound(g)
    assert (r.lhs, r.rhs, r.equality, r.holds) == (lhs, rhs, equality, True)


def test_cubed_equality_iff_regular(small_corpus):
    # the converse of regular => equality is an empirical observation only;
    # in general equality needs equal degrees across every edge
    for g in small_corpus:
        r = check_cubed_bound(g)
        assert r.holds
        assert r.equality == all(g.degree[u] == g.degree[v] for u, v in g.edges)
        if g.is_connected():
            assert r.equality == r.regular


@pytest.mark.parametrize("g", [cycle_graph(n) for n in range(3, 11)] + [complete_graph(n) for n in range(2, 9)] + [petersen_graph()])
def test_cubed_equality_regular_family(g):
    assert check_cubed_bound(g).equality


def test_check_main_k2():
    r = check_main(complete_graph(2), 1)
    assert r.lhs == 1 and r.holds and r.ratio == 0.5
    assert r.to_json()["rhs"].startswith("2.0000000000")


def test_check_main_c4_exact_cancellation():
    r = check_main(blow_up(complete_graph(2), 2), 2)
    assert r.lhs == 16 and r.holds
    assert abs(r.rhs - 32) < mp.mpf("1e-45")


def test_check_main_t42():
    r = check_main(T42, 1)
    assert r.lhs == 700 and r.holds
    assert float(r.rhs) == pytest.approx(T42_RHS, rel=1e-12)
    assert r.ratio == pytest.approx(700 / T42_RHS, rel=1e-12)
    assert r.ratio == pytest.approx(0.619, abs=5e-4)


def test_check_main_json_schema():
    data = check_main(petersen_graph(), 2, hypothesis_verified=True).to_json()
    assert list(data) == ["n", "m", "k", "lhs", "rhs", "ratio", "holds", "precision", "hypothesis_verified"]
    assert data["lhs"] == "135" and data["hypothesis_verified"] is True


def test_check_main_can_fail_outside_hypothesis():
    # K8 has mad 7 > 2, so k = 1 violates the mad <= 2k hypothesis and the bound fails
    r = check_main(complete_graph(8), 1)
    assert not r.holds and r.ratio > 1


def test_holds_above_pseudoarboricity(small_corpus):
    for g in small_corpus:
        k0 = max(1, pseudoarboricity(g))
        for k in range(k0, k0 + 3):
            assert check_main(g, k).holds


def test_rhs_monotone_in_k():
    g = random_gnp(12, 0.5, 1)
    rhs = [check_main(g, k).rhs for k in range(1, 8)]
    assert all(a < b for a, b in zip(rhs, rhs[1:]))


def test_certificate_k2():
    g = complete_graph(2)
    cert = arc_certificate(g, Orientation(g, ((0, 1),)), 1)
    (rec,) = cert.records
    assert abs(rec.lhs_term - 1) < mp.mpf("1e-45")
    assert abs(rec.rhs_term - 1) < mp.mpf("1e-45")
    assert cert.holds


def test_certificate_t42():
    cert = arc_certificate(T42, rootward_orientation(T42), 1)
    assert len(cert.records) == 50
    assert cert.all_arcs_hold and cert.holds


def test_certificate_star():
    s = star_graph(3)
    cert = arc_certificate(s, rootward_orientation(s), 1)
    expected_rhs = (2 - PHI) + (PHI - 1) * 3**PHI
    for rec in cert.records:
        assert rec.head == 0
        assert float(rec.lhs_term) == pytest.approx(3, rel=1e-14)
        assert float(rec.rhs_term) == pytest.approx(expected_rhs, rel=1e-13)
        assert rec.holds


def test_certificate_rejects_bad_orientation():
    s = star_graph(5)
    with pytest.raises(ValueError, match="outdegree"):
        arc_certificate(s, Orientation(s, s.edges), 1)


def test_certificate_consistency():
    for seed in range(15):
        for k in (1, 2, 3):
            g = random_k_degenerate(GenSpec(20, k, 0.7, seed))
            o = orient_bounded_outdegree(g, k)
            cert = arc_certificate(g, o, k)
            assert cert.holds
            with mp.workdps(60):
                recovered = cert.lhs_sum / cert.scale
                assert abs(recovered - edge_product_sum(g)) <= 1e-9 * max(1, edge_product_sum(g))


def test_blow_up_ratio_invariance():
    for seed in range(10):
        t = random_tree(15, seed)
        base = check_main(t, 1).ratio
        for k in (2, 3):
            assert math.isclose(check_main(blow_up(t, k), k).ratio, base, rel_tol=1e-9)
