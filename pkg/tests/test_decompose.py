"""End-to-end forest-plus-sparse decompositions and their verification."""

import random
from fractions import Fraction

import pytest

import sparsity_forge as sf
from sparsity_forge.errors import NotSparseError

from conftest import atlas_graphs, random_graph


def test_c5_two_forests():
    c5 = sf.circulant(5, 1)
    d = sf.decompose_ksw(c5, Fraction(6, 5))
    assert d.trace == "small_m_two_forests"
    assert bool(sf.verify_decomposition(d))


def test_k5_at_two():
    d = sf.decompose_ksw(sf.complete_graph(5), 2)
    assert d.trace == "large_m_case_A"
    assert len(d.F) == 4 and len(d.Gp) == 6
    assert sf.is_sparse(d.host.edge_subgraph(d.Gp.ids), sf.SparsityParams(2, -3)).sparse
    assert bool(sf.verify_decomposition(d))


def test_k6_at_five_halves():
    d = sf.decompose_ksw(sf.complete_graph(6), Fraction(5, 2))
    assert d.trace == "large_m_case_C"
    assert bool(sf.verify_decomposition(d))


def test_triangle_free_branch():
    d = sf.decompose_ksw(sf.complete_graph(4), Fraction(9, 5))
    assert d.trace == "small_m_triangle_free"
    assert bool(sf.verify_decomposition(d))


def test_rejections():
    with pytest.raises(ValueError, match="m > 1"):
        sf.decompose_ksw(sf.complete_graph(3), 1)
    with pytest.raises(NotSparseError):
        sf.decompose_ksw(sf.complete_graph(5), Fraction(3, 2))


def test_degenerate_graphs():
    for g in (sf.Graph(0, []), sf.Graph(1, []), sf.Graph(3, [])):
        d = sf.decompose_ksw(g, 2)
        assert bool(sf.verify_decomposition(d))
        assert len(d.F) == 0 and len(d.Gp) == 0


def test_case_labels_over_eps_regions():
    # a path is (m, 0)-sparse for every m >= 1, so it exercises all labels
    p6 = sf.Graph(6, [(i, i + 1) for i in range(5)])
    expectations = [
        (Fraction(6, 5), "small_m_two_forests"),
        (Fraction(9, 5), "small_m_triangle_free"),
        (Fraction(2), "large_m_case_A"),                     # eps = 0 < 3/6
        (Fraction(3) + Fraction(5, 12), "large_m_case_B"),   # 3/8 <= 5/12 < 1/2
        (Fraction(2) + Fraction(1, 2), "large_m_case_C"),
        (Fraction(2) + Fraction(almost := Fraction(18, 25)), "large_m_case_D1"),
        (Fraction(2) + Fraction(9, 10), "large_m_case_D2"),  # eps >= 6/7
        (Fraction(2) + Fraction(4, 5), "large_m_case_D3"),   # 3/4 < 4/5 < 6/7
        (Fraction(3) + Fraction(7, 9), "large_m_case_D2"),   # k=3 boundary
    ]
    for m, label in expectations:
        k = m.numerator // m.denominator
        eps = m - k
        if label == "large_m_case_B":
            assert Fraction(3, 2 * k + 2) <= eps < Fraction(1, 2)
        d = sf.decompose_ksw(p6, m)
        assert d.trace == label, (m, d.trace, label)
        assert bool(sf.verify_decomposition(d))


def test_d1_beats_d2_in_overlap():
    # k = 5: (k+4)/(2k+3) = 9/13 < 3/4, so eps = 18/25 lies in both windows
    eps = Fraction(18, 25)
    assert Fraction(5 + 4, 13) <= eps <= Fraction(3, 4)
    p6 = sf.Graph(6, [(i, i + 1) for i in range(5)])
    d = sf.decompose_ksw(p6, 5 + eps)
    assert d.trace == "large_m_case_D1"


def test_d2_branch_runs_refinement_end_to_end():
    # K5 plus a pendant edge is (20/7, 0)-sparse; eps = 6/7 routes through D2
    edges = [(i, j) for j in range(5) for i in range(j)] + [(0, 5)]
    host = sf.Graph(6, edges)
    m = Fraction(20, 7)
    assert sf.is_sparse(host, sf.SparsityParams(m, 0)).sparse
    d = sf.decompose_ksw(host, m)
    assert d.trace == "large_m_case_D2"
    assert bool(sf.verify_decomposition(d))


def test_verify_rejects_corrupted_split():
    k5 = sf.complete_graph(5)
    d = sf.decompose_ksw(k5, 2)
    moved = next(iter(d.Gp.ids))
    bad = sf.Decomposition(
        host=k5,
        F=d.F.plus(moved) if hasattr(d.F, "plus") else d.F,
        Gp=d.Gp.minus(moved),
        m=d.m,
        trace=d.trace,
    )
    report = sf.verify_decomposition(bad)
    assert not report.ok
    assert report.problems


def test_verify_decomposition_flags_overlap_and_gaps():
    k4 = sf.complete_graph(4)
    d = sf.decompose_ksw(k4, 2)
    overlap = sf.Decomposition(k4, d.F, sf.full_edge_set(k4), d.m, d.trace)
    rep = sf.verify_decomposition(overlap)
    assert not rep.ok and any("overlap" in p for p in rep.problems)


def test_end_to_end_small_sample(rng):
    m_values = [Fraction(6, 5), Fraction(3, 2), Fraction(9, 5), Fraction(2),
                Fraction(7, 3), Fraction(5, 2), Fraction(11, 4), Fraction(3),
                Fraction(10, 3), Fraction(4)]
    done = 0
    for g in atlas_graphs(5):
        for m in m_values:
            if not sf.brute_sparse(g, m, 0).sparse:
                continue
            d = sf.decompose_ksw(g, m)
            assert bool(sf.verify_decomposition(d))
            done += 1
    assert done > 200


def test_decompose_agrees_with_brute_existence(rng):
    # whenever the pipeline outputs a decomposition, exhaustive search confirms
    # one exists under the same bounds (and the output itself is one)
    m_values = [Fraction(3, 2), Fraction(2), Fraction(5, 2)]
    done = 0
    while done < 12:
        g = random_graph(rng, rng.randint(3, 6), rng.random())
        if g.e > 12:
            continue
        for m in m_values:
            if not sf.brute_sparse(g, m, 0).sparse:
                continue
            d = sf.decompose_ksw(g, m)
            assert bool(sf.verify_decomposition(d))
            exists, _ = sf.brute_partition_exists(g, 1, -1, m, 1 - 2 * m)
            assert exists
            done += 1


# -- hypergraph overlap bound --------------------------------------------------


def test_hypergraph_bound_spec_example():
    g = sf.Graph(4, [])
    f1 = sf.VertexSet(g, [0, 1, 2])
    f2 = sf.VertexSet(g, [1, 2, 3])
    assert sf.check_hypergraph_bound([f1, f2], 2)  # 6 >= 4 + 2


def test_hypergraph_bound_precondition():
    g = sf.Graph(6, [])
    f1 = sf.VertexSet(g, [0, 1])
    f2 = sf.VertexSet(g, [2, 3])
    with pytest.raises(ValueError, match=r"\[0, 1\]"):
        sf.check_hypergraph_bound([f1, f2], 1)


def test_hypergraph_bound_random_families(rng):
    g = sf.Graph(14, [])
    done = 0
    while done < 500:
        r = rng.randint(2, 5)
        s = rng.randint(1, 3)
        families = []
        for _ in range(r):
            size = rng.randint(s + 1, 8)
            families.append(sf.VertexSet(g, rng.sample(range(14), size)))
        try:
            result = sf.check_hypergraph_bound(families, s)
        except ValueError:
            continue  # rejection sampling on the overlap precondition
        assert result
        done += 1
