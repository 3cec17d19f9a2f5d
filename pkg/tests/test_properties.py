import random
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from betapath import Hypergraph
from betapath import generators as gen
from betapath.properties import (
    p2_duality_check,
    p2_star_count,
    p_ell_count,
    peel_P2_star,
    peel_P_ell,
)
from conftest import named_instances


def sequential_peel(elements, count, d, rng):
    """Remove one violating element at a time, in random order."""
    alive = set(elements)
    while True:
        bad = sorted(x for x in alive if count(x, alive) < d)
        if not bad:
            return alive
        alive.discard(rng.choice(bad))


def test_pasch_full_witness(pasch):
    res = peel_P_ell(pasch, 2, 2)
    assert res.witness == set(pasch.vertices)
    assert res.removal_trace == []
    assert res.witness == oracles.max_closed_subset(pasch.vertices, oracles.p_ell_closed(pasch, 2, 2))


def test_sunflower_empty():
    H = gen.sunflower(3, 3)
    res = peel_P_ell(H, 2, 2)
    assert res.witness == frozenset()
    assert res.removal_trace == [(1, ["a1", "a2", "a3", "b1", "b2", "b3"]), (2, ["c"])]
    assert oracles.max_closed_subset(H.vertices, oracles.p_ell_closed(H, 2, 2)) == set()


def test_empty_hypergraph():
    H = Hypergraph([], [])
    assert peel_P_ell(H, 1, 1).witness == frozenset()
    assert peel_P2_star(H, 1).witness == frozenset()


def test_p2_star_examples(pasch, lpath):
    assert peel_P2_star(pasch, 2).witness == {0, 1, 2, 3}
    res = peel_P2_star(lpath, 2)
    assert res.witness == frozenset()
    assert res.removal_trace == [(1, [0, 2]), (2, [1])]
    assert oracles.max_closed_subset(range(3), oracles.p2_star_closed(lpath, 2)) == set()
    for d in (1, 2, 3):
        assert peel_P2_star(gen.single_edge(3), d).witness == frozenset()


def test_ell_above_k_warns(pasch):
    with pytest.warns(UserWarning):
        assert peel_P_ell(pasch, 4, 1).witness == frozenset()


@pytest.mark.parametrize(
    "H",
    [gen.pasch(), gen.strip_to_dualizable(gen.sunflower(3, 3)), gen.strip_to_dualizable(gen.loose_path(3, 3))],
    ids=["pasch", "sunflower", "loose"],
)
def test_duality_examples(H):
    for d in (1, 2):
        assert p2_duality_check(H, d)


def _random_instance(seed):
    rng = random.Random(seed)
    k = rng.choice([2, 3])
    n = rng.randint(5, 10)
    m = rng.randint(2, max(2, min(8, n * (n - 1) // (2 * k * (k - 1)))))
    return gen.random_linear(k, n, m, seed=seed, max_tries=5000)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 100_000))
def test_confluence_and_maximality(seed):
    H = _random_instance(seed)
    rng = random.Random(seed)
    for ell in (1, 2):
        for d in (1, 2, 3):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                res = peel_P_ell(H, ell, d)
            count = lambda v, alive: p_ell_count(H, v, alive, ell)  # noqa: E731
            for _ in range(5):
                assert sequential_peel(H.vertices, count, d, rng) == res.witness
            assert all(count(v, set(res.witness)) >= d for v in res.witness)
            for x in set(H.vertices) - res.witness:
                grown = set(res.witness) | {x}
                assert not oracles.p_ell_closed(H, ell, d)(grown)
    for d in (1, 2, 3):
        res = peel_P2_star(H, d)
        count = lambda e, alive: p2_star_count(H, e, alive)  # noqa: E731
        assert sequential_peel(range(H.num_edges), count, d, rng) == res.witness
        assert res.witness == oracles.max_closed_subset(range(H.num_edges), oracles.p2_star_closed(H, d))


@pytest.mark.filterwarnings("ignore::UserWarning")
@settings(max_examples=40, deadline=None)
@given(st.integers(0, 100_000))
def test_monotone_in_d_and_ell(seed):
    H = _random_instance(seed)
    for ell in (1, 2):
        for d in (1, 2, 3):
            assert peel_P_ell(H, ell, d + 1).witness <= peel_P_ell(H, ell, d).witness
            assert peel_P_ell(H, ell + 1, d).witness <= peel_P_ell(H, ell, d).witness
        assert peel_P2_star(H, d + 1).witness <= peel_P2_star(H, d).witness


@pytest.mark.parametrize("name,H", sorted(named_instances().items()))
def test_families_against_subset_oracle(name, H):
    if H.num_vertices > 12:
        pytest.skip("too many vertices for subset enumeration")
    for ell in (1, 2):
        for d in (1, 2):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                got = peel_P_ell(H, ell, d).witness
            assert got == oracles.max_closed_subset(H.vertices, oracles.p_ell_closed(H, ell, d))


def test_json_shape(lpath):
    out = peel_P2_star(lpath, 2).to_json(lpath, edges=True)
    assert out["trace"] == [{"round": 1, "removed": ["e0", "e2"]}, {"round": 2, "removed": ["e1"]}]
    assert out["witness"] == []
