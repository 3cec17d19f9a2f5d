import json
import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betapath import Hypergraph, double_dual_correspondence, dual, validate
from betapath import generators as gen
from betapath.core import IncidenceIndex, is_linear
from betapath.errors import DuplicateStar, InfeasibleParameters, InvalidHypergraph, IsolatedVertex


def test_construction_rejects_bad_input():
    with pytest.raises(InvalidHypergraph):
        Hypergraph(["a", "b"], [["a", "b"], ["b", "a"]])
    with pytest.raises(InvalidHypergraph):
        Hypergraph(["a"], [["a", "z"]])
    with pytest.raises(InvalidHypergraph):
        Hypergraph(["a"], [[]])


def test_json_roundtrip_and_default_names():
    H = Hypergraph.from_json('{"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"]]}')
    assert H.edge_names == ("e0", "e1")
    assert Hypergraph.from_json(json.loads(json.dumps(H.to_json()))) == H
    assert H.edge_index("e1") == 1 and H.edge_index("1") == 1 and H.edge_index(0) == 0


def test_validate_linear_triangle_of_triples():
    H = Hypergraph.from_edges([["u", "v", "x1"], ["u", "w", "x2"], ["v", "w", "x3"]])
    # oracle: exhaustive pair scan
    shared = [len(a & b) for i, a in enumerate(H.edges) for b in H.edges[i + 1 :]]
    assert max(shared) == 1
    assert validate(H, k=3, require_linear=True).ok


def test_validate_reports_shared_pair():
    H = Hypergraph.from_edges([["a", "b", "c"], ["a", "b", "d"]])
    rep = validate(H, require_linear=True)
    assert rep.linearity == [(0, 1, ["a", "b"])]
    assert not rep.ok


def test_validate_uniformity_and_empty():
    assert validate(Hypergraph([], []), k=3, require_linear=True).ok
    rep = validate(Hypergraph.from_edges([["a", "b"], ["b", "c", "d"]]), k=3)
    assert rep.uniformity == [(0, 2)]


def test_dual_triangle_is_triangle(triangle):
    D, corr = dual(triangle)
    assert D.num_vertices == 3 and D.num_edges == 3
    assert sorted(len(e) for e in D.edges) == [2, 2, 2]


def test_dual_pasch_is_k4(pasch):
    D, corr = dual(pasch)
    # oracle: stars vertex by vertex
    stars = {frozenset(pasch.edge_names[i] for i, e in enumerate(pasch.edges) if v in e) for v in pasch.vertices}
    assert set(D.edges) == stars
    assert len(D.edges) == 6 and all(len(e) == 2 for e in D.edges)
    assert {frozenset(p) for p in combinations(D.vertices, 2)} == set(D.edges)
    for v in pasch.vertices:
        assert D.edges[corr.dual_edge(v)] == frozenset(pasch.edge_names[i] for i in pasch.star(v))


def test_dual_errors():
    with pytest.raises(IsolatedVertex) as exc:
        dual(Hypergraph(["a", "b", "c"], [["b", "c"]]))
    assert exc.value.details["vertex"] == "a"
    with pytest.raises(DuplicateStar):
        dual(gen.single_edge(3))
    with pytest.raises(DuplicateStar):
        double_dual_correspondence(gen.single_edge(3))


@pytest.mark.parametrize("H", [gen.pasch(), gen.triangle2()], ids=["pasch", "triangle"])
def test_double_dual_identity(H):
    iso = double_dual_correspondence(H)
    assert all(k == v for k, v in iso.vertex_map.items())
    assert all(k == v for k, v in iso.edge_map.items())


def test_incidence_index_permutation_invariant(pasch):
    idx = IncidenceIndex.build(pasch)
    order = [3, 1, 0, 2]
    Hp = Hypergraph(pasch.vertices, [pasch.edges[i] for i in order])
    idx2 = IncidenceIndex.build(Hp)
    for v in pasch.vertices:
        assert {frozenset(pasch.edges[i]) for i in idx.star[v]} == {frozenset(Hp.edges[i]) for i in idx2.star[v]}


def _dualizable_linear(k, seed):
    rng = random.Random(seed)
    n = rng.randint(k + 4, 16)
    H = gen.random_linear(k, n, rng.randint(3, 10), seed=seed, max_tries=5000)
    return gen.strip_to_dualizable(H)


@settings(max_examples=40, deadline=None)
@given(k=st.integers(2, 4), seed=st.integers(0, 10_000))
def test_dual_degree_and_linearity_properties(k, seed):
    try:
        H = _dualizable_linear(k, seed)
    except InfeasibleParameters:
        return
    D, corr = dual(H)
    for i, e in enumerate(H.edges):
        assert len(D.star(corr.dual_vertex(i))) == len(e)
    assert is_linear(D)
    for v in H.vertices:
        for i, e in enumerate(H.edges):
            assert (v in e) == (corr.dual_vertex(i) in D.edges[corr.dual_edge(v)])
    iso = double_dual_correspondence(H)
    assert sorted(iso.vertex_map.values()) == sorted(H.vertices)


def test_regular_gives_uniform_dual(pasch):
    D, _ = dual(pasch)
    assert validate(D, k=2).ok
