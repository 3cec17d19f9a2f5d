"""Skeleton graphs of a hypergraph and the generator sets that produce them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable, Mapping

from .beta import BetaSequence, iter_beta_paths, reduce_paths_to_cycle
from .core import Hypergraph
from .errors import DegreeTooLow, InvalidPair, PreconditionViolated

Pair = tuple[str, int]


@dataclass(frozen=True)
class GeneratorSet:
    """A set T of incidences (v, e) with v in e.

    Canonical generators also record the root chosen per component and one
    witnessing beta-path ``root ... v e`` for each pair.
    """

    pairs: frozenset[Pair]
    roots: Mapping[str, str] = field(default_factory=dict)
    witnesses: Mapping[Pair, BetaSequence] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", frozenset((str(v), int(e)) for v, e in self.pairs))

    def fiber(self, f: int) -> list[Pair]:
        return sorted(p for p in self.pairs if p[1] == f)

    def fiber_sizes(self) -> dict[int, int]:
        return dict(sorted(Counter(e for _, e in self.pairs).items()))

    @property
    def max_fiber(self) -> int:
        return max(self.fiber_sizes().values(), default=0)

    def to_json(self, H: Hypergraph | None = None) -> dict[str, Any]:
        def name(e: int):
            return H.edge_names[e] if H is not None else str(e)

        out: dict[str, Any] = {
            "pairs": [[v, e] for v, e in sorted(self.pairs, key=lambda p: (p[1], p[0]))],
            "roots": dict(self.roots),
            "fibers": {name(e): n for e, n in self.fiber_sizes().items()},
            "max_fiber": self.max_fiber,
        }
        if self.witnesses:
            out["witnesses"] = [
                {"pair": [v, e], "path": self.witnesses[(v, e)].to_json()}
                for v, e in sorted(self.witnesses, key=lambda p: (p[1], p[0]))
            ]
        return out

    @classmethod
    def from_json(cls, data: Mapping[str, Any], H: Hypergraph) -> GeneratorSet:
        pairs = []
        for item in data.get("pairs", []):
            v, e = item
            e = e if isinstance(e, int) else H.edge_index(str(e))
            pairs.append((str(v), e))
        witnesses = {}
        for w in data.get("witnesses", []):
            v, e = w["pair"]
            e = e if isinstance(e, int) else H.edge_index(str(e))
            witnesses[(str(v), e)] = BetaSequence.from_json(w["path"], H)
        return cls(frozenset(pairs), dict(data.get("roots", {})), witnesses)


@dataclass(frozen=True)
class SkeletonGraph:
    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    def neighbors(self, v: str) -> set[str]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def to_json(self) -> dict[str, Any]:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in sorted(self.edges)]}


def _check_pairs(H: Hypergraph, pairs: Iterable[Pair]) -> None:
    for v, e in pairs:
        if not 0 <= e < H.num_edges or v not in H.edges[e]:
            raise InvalidPair(f"({v!r}, {e}) is not an incidence of H", vertex=v, edge=e)


def build_skeleton(H: Hypergraph, T: GeneratorSet) -> SkeletonGraph:
    """Join v to every other vertex of e, for each (v, e) in T. Loops are dropped."""
    _check_pairs(H, T.pairs)
    edges = set()
    for v, e in T.pairs:
        for w in H.edges[e]:
            if w != v:
                edges.add((v, w) if v < w else (w, v))
    return SkeletonGraph(H.vertices, frozenset(edges))


def components(H: Hypergraph) -> list[tuple[str, list[str], list[int]]]:
    """Connected components via shared vertices, ordered by least vertex id."""
    parent = {v: v for v in H.vertices}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in H.edges:
        first, *rest = sorted(e)
        for w in rest:
            a, b = find(first), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[str, list[str]] = {}
    for v in H.vertices:
        groups.setdefault(find(v), []).append(v)
    out = []
    for i, vs in enumerate(sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])):
        members = set(vs)
        es = [j for j, e in enumerate(H.edges) if e & members]
        out.append((f"component{i}", vs, es))
    return out


def canonical_generator(
    H: Hypergraph, root_rule: str | Mapping[str, str] = "least"
) -> GeneratorSet:
    """T = {(v, e): some beta-path runs from the component root and ends ``... v e``}.

    ``root_rule`` is ``"least"`` (least vertex id per component) or a map from
    component id to root; components missing from the map use the least vertex.
    """
    explicit = {} if root_rule == "least" else dict(root_rule)
    roots: dict[str, str] = {}
    witnesses: dict[Pair, BetaSequence] = {}
    for cid, vs, es in components(H):
        root = explicit.get(cid, vs[0])
        if root not in vs:
            raise PreconditionViolated(f"root {root!r} is not in {cid}", component=cid)
        roots[cid] = root
        total = sum(len(H.edges[e]) for e in es)
        found = 0
        for path in iter_beta_paths(H, root):
            pair = (path.vertices[-1], path.edges[-1])
            if pair not in witnesses:
                witnesses[pair] = path
                found += 1
                if found == total:
                    break
    return GeneratorSet(frozenset(witnesses), roots, witnesses)


def generator_cycle_certificates(H: Hypergraph, T: GeneratorSet, f: int) -> list[BetaSequence]:
    """Close every pair of witnessing paths ending in f into a beta-cycle through f."""
    fiber = T.fiber(f)
    if len(fiber) < 2:
        raise PreconditionViolated(f"edge {f} has {len(fiber)} generator pair(s); need 2", edge=f)
    missing = [p for p in fiber if p not in T.witnesses]
    if missing:
        raise PreconditionViolated("generator lacks witnessing beta-paths", pairs=missing)
    return [
        reduce_paths_to_cycle(H, T.witnesses[p], T.witnesses[q]) for p, q in combinations(fiber, 2)
    ]


@dataclass
class WitnessExtraction:
    edges: frozenset[int]
    claims: dict[str, bool]

    def to_json(self, H: Hypergraph | None = None) -> dict[str, Any]:
        names = sorted(self.edges) if H is None else [H.edge_names[e] for e in sorted(self.edges)]
        return {"edges": names, "claims": dict(sorted(self.claims.items()))}


def extract_witness(
    H: Hypergraph, T: GeneratorSet, gprime: Iterable[str], m: int
) -> WitnessExtraction:
    """Edges meeting the subgraph's vertex set in at least m vertices.

    Each chosen vertex must have degree at least m inside the skeleton
    restricted to ``gprime``. ``claims[v]`` records whether some selected edge
    e has (v, e) in T.
    """
    if m < 1:
        raise ValueError("m must be positive")
    gp = set(gprime)
    unknown = gp - set(H.vertices)
    if unknown:
        raise PreconditionViolated("vertices not in H", vertices=sorted(unknown))
    G = build_skeleton(H, T)
    for v in sorted(gp):
        deg = len(G.neighbors(v) & gp)
        if deg < m:
            raise DegreeTooLow(f"{v!r} has degree {deg} < {m} in the subgraph", vertex=v, degree=deg)
    chosen = frozenset(i for i, e in enumerate(H.edges) if len(e & gp) >= m)
    claims = {v: any((v, e) in T.pairs for e in chosen) for v in gp}
    return WitnessExtraction(chosen, claims)
