"""Named and random instance families."""

from __future__ import annotations

import random
import string
from dataclasses import asdict, dataclass
from itertools import combinations
from math import comb
from typing import Any, Mapping

from .core import Hypergraph
from .errors import InfeasibleParameters
from .skeleton import GeneratorSet

FAMILIES = ("loose_path", "sunflower", "pasch", "triangle2", "single_edge", "fig1", "random_linear")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    k: int | None = None
    m: int | None = None
    n: int | None = None
    p: int | None = None
    seed: int = 0

    def to_json(self) -> dict[str, Any]:
        return {key: val for key, val in asdict(self).items() if val is not None}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> FamilySpec:
        known = {"family", "k", "m", "n", "p", "seed"}
        extra = set(data) - known
        if extra:
            raise InfeasibleParameters(f"unknown family parameters {sorted(extra)}")
        return cls(**data)


def loose_path(k: int, m: int) -> Hypergraph:
    """First m edges of the infinite loose path on 1, 2, 3, ...; edge i is {(k-1)i+1 .. (k-1)i+k}."""
    if k < 2 or m < 0:
        raise InfeasibleParameters("loose_path needs k >= 2 and m >= 0", k=k, m=m)
    n = (k - 1) * m + 1 if m else 0
    edges = [[(k - 1) * i + j for j in range(1, k + 1)] for i in range(m)]
    return Hypergraph(range(1, n + 1), edges)


def sunflower(k: int, p: int) -> Hypergraph:
    """p edges of size k sharing only the core vertex ``c``."""
    if k < 2 or p < 1:
        raise InfeasibleParameters("sunflower needs k >= 2 and p >= 1", k=k, p=p)
    letters = string.ascii_lowercase[: k - 1]
    edges = [["c"] + [f"{a}{i}" for a in letters] for i in range(1, p + 1)]
    verts = ["c"] + [v for e in edges for v in e[1:]]
    return Hypergraph(verts, edges)


def pasch() -> Hypergraph:
    return Hypergraph(range(1, 7), [[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]])


def triangle2() -> Hypergraph:
    return Hypergraph("abc", [["a", "b"], ["b", "c"], ["a", "c"]])


def single_edge(k: int = 3) -> Hypergraph:
    if not 1 <= k <= 26:
        raise InfeasibleParameters("single_edge needs 1 <= k <= 26", k=k)
    letters = string.ascii_lowercase[:k]
    return Hypergraph(letters, [letters])


def fig1() -> Hypergraph:
    """Seven-vertex, three-edge hypergraph read off the skeleton figure.

    e = {u, x1, x2, v}, f = {x3, u, v}, g = {v, w, x4}. The memberships come
    from a drawing, so this is one consistent reading rather than ground truth.
    Note that e and f share both u and v, so the instance is not linear.
    """
    return Hypergraph.from_edges(
        [["u", "x1", "x2", "v"], ["x3", "u", "v"], ["v", "w", "x4"]], ["e", "f", "g"]
    )


def fig1_generator() -> GeneratorSet:
    """The generator {(u, e), (v, e), (u, f), (w, g)} drawn with ``fig1``."""
    return GeneratorSet(frozenset({("u", 0), ("v", 0), ("u", 1), ("w", 2)}))


def random_linear(k: int, n: int, m: int, seed: int = 0, max_tries: int | None = None) -> Hypergraph:
    """Greedy random linear k-uniform hypergraph on vertices 1..n with exactly m edges.

    Random k-sets are drawn and rejected when they share two vertices with an
    accepted edge. Raises InfeasibleParameters if m edges cannot be placed.
    """
    if k < 2 or n < k or m < 0:
        raise InfeasibleParameters("random_linear needs 2 <= k <= n and m >= 0", k=k, n=n, m=m)
    if m * comb(k, 2) > comb(n, 2):
        raise InfeasibleParameters(
            f"{m} linear {k}-edges need {m * comb(k, 2)} vertex pairs; only {comb(n, 2)} exist",
            k=k, n=n, m=m,
        )
    rng = random.Random(seed)
    tries = max_tries if max_tries is not None else 2000 * max(m, 1)
    used: set[tuple[int, int]] = set()
    edges: list[list[int]] = []
    for _ in range(tries):
        if len(edges) == m:
            break
        cand = sorted(rng.sample(range(1, n + 1), k))
        pairs = list(combinations(cand, 2))
        if any(pr in used for pr in pairs):
            continue
        used.update(pairs)
        edges.append(cand)
    if len(edges) < m:
        raise InfeasibleParameters(
            f"placed only {len(edges)} of {m} edges in {tries} tries", k=k, n=n, m=m, seed=seed
        )
    return Hypergraph(range(1, n + 1), edges)


def trim_min_degree(H: Hypergraph, min_degree: int = 2) -> Hypergraph:
    """Repeatedly delete edges through low-degree vertices, then drop isolated vertices.

    Uniformity and linearity are preserved; the result may be empty.
    """
    alive = set(range(H.num_edges))
    while True:
        deg = {v: sum(1 for e in H.star(v) if e in alive) for v in H.vertices}
        bad = {e for e in alive if any(deg[v] < min_degree for v in H.edges[e])}
        if not bad:
            break
        alive -= bad
    keep = sorted(alive)
    verts = [v for v in H.vertices if any(e in alive for e in H.star(v))]
    return Hypergraph(verts, [H.edges[e] for e in keep], [H.edge_names[e] for e in keep])


def strip_to_dualizable(H: Hypergraph) -> Hypergraph:
    """Drop isolated vertices and all but one degree-one vertex per edge.

    On a linear hypergraph the result has pairwise distinct, nonempty stars,
    so ``dual`` succeeds on it.
    """
    drop: set[str] = {v for v in H.vertices if H.degree(v) == 0}
    for e in H.edges:
        lonely = sorted(v for v in e if H.degree(v) == 1)
        drop.update(lonely[1:])
    verts = [v for v in H.vertices if v not in drop]
    return Hypergraph(verts, [e - drop for e in H.edges], H.edge_names)


def make(spec: FamilySpec | Mapping[str, Any]) -> Hypergraph:
    if not isinstance(spec, FamilySpec):
        spec = FamilySpec.from_json(spec)

    def need(name: str) -> int:
        val = getattr(spec, name)
        if val is None:
            raise InfeasibleParameters(f"family {spec.family!r} needs parameter {name!r}")
        return val

    fam = spec.family
    if fam == "loose_path":
        return loose_path(need("k"), need("m"))
    if fam == "sunflower":
        return sunflower(need("k"), need("p"))
    if fam == "pasch":
        return pasch()
    if fam == "triangle2":
        return triangle2()
    if fam == "single_edge":
        return single_edge(spec.k if spec.k is not None else 3)
    if fam == "fig1":
        return fig1()
    if fam == "random_linear":
        return random_linear(need("k"), need("n"), need("m"), spec.seed)
    raise InfeasibleParameters(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)}")
