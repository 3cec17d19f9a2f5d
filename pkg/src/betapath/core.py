"""Hypergraph data model, validation, incidence index and dualization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any, Iterable, Mapping, Sequence

from .errors import DuplicateStar, InvalidHypergraph, IsolatedVertex, NotInvolutive


@dataclass(frozen=True)
class Hypergraph:
    """Finite hypergraph with stable edge indices.

    Vertices are opaque strings. Edges are kept in a tuple so that every
    downstream structure can refer to an edge by its index; two edges with
    the same vertex set are rejected rather than merged.
    """

    vertices: tuple[str, ...]
    edges: tuple[frozenset[str], ...]
    edge_names: tuple[str, ...] = ()

    def __init__(
        self,
        vertices: Iterable[Any],
        edges: Iterable[Iterable[Any]],
        edge_names: Sequence[str] | None = None,
    ) -> None:
        verts = tuple(dict.fromkeys(str(v) for v in vertices))
        es = tuple(frozenset(str(v) for v in e) for e in edges)
        if edge_names is None:
            names = tuple(f"e{i}" for i in range(len(es)))
        else:
            names = tuple(str(n) for n in edge_names)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "edge_names", names)
        self._check()

    def _check(self) -> None:
        if len(self.edge_names) != len(self.edges):
            raise InvalidHypergraph(
                "edge_names length does not match edges",
                names=len(self.edge_names),
                edges=len(self.edges),
            )
        if len(set(self.edge_names)) != len(self.edge_names):
            raise InvalidHypergraph("edge names must be unique")
        vset = set(self.vertices)
        seen: dict[frozenset[str], int] = {}
        for i, e in enumerate(self.edges):
            if not e:
                raise InvalidHypergraph(f"edge {i} is empty", edge=i)
            stray = e - vset
            if stray:
                raise InvalidHypergraph(
                    f"edge {i} uses unknown vertices {sorted(stray)}",
                    edge=i,
                    vertices=sorted(stray),
                )
            if e in seen:
                raise InvalidHypergraph(
                    f"edges {seen[e]} and {i} have the same vertex set",
                    edges=[seen[e], i],
                )
            seen[e] = i

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[Any]], edge_names=None) -> Hypergraph:
        """Build a hypergraph whose vertex set is the union of the edges, sorted."""
        es = [[str(v) for v in e] for e in edges]
        verts = sorted({v for e in es for v in e})
        return cls(verts, es, edge_names)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def index(self) -> IncidenceIndex:
        return IncidenceIndex.build(self)

    def star(self, v: str) -> frozenset[int]:
        return self.index.star[v]

    def degree(self, v: str) -> int:
        return len(self.index.star[v])

    def edge_index(self, ref: int | str) -> int:
        """Resolve an edge reference given as an index or an edge name."""
        if isinstance(ref, int):
            if 0 <= ref < len(self.edges):
                return ref
            raise KeyError(f"edge index {ref} out of range")
        pos = self._name_pos.get(ref)
        if pos is not None:
            return pos
        if ref.isdigit() and int(ref) < len(self.edges):
            return int(ref)
        raise KeyError(f"unknown edge {ref!r}")

    @cached_property
    def _name_pos(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.edge_names)}

    def sizes(self) -> list[int]:
        return [len(e) for e in self.edges]

    def sorted_edge(self, i: int) -> list[str]:
        return sorted(self.edges[i])

    def to_json(self) -> dict[str, Any]:
        return {
            "vertices": list(self.vertices),
            "edges": [self.sorted_edge(i) for i in range(len(self.edges))],
            "edge_names": list(self.edge_names),
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any] | str) -> Hypergraph:
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, Mapping) or "edges" not in data:
            raise InvalidHypergraph("hypergraph JSON needs an 'edges' list")
        edges = data["edges"]
        vertices = data.get("vertices")
        if vertices is None:
            return cls.from_edges(edges, data.get("edge_names"))
        return cls(vertices, edges, data.get("edge_names"))


@dataclass(frozen=True)
class IncidenceIndex:
    star: Mapping[str, frozenset[int]]

    @classmethod
    def build(cls, H: Hypergraph) -> IncidenceIndex:
        acc: dict[str, set[int]] = {v: set() for v in H.vertices}
        for i, e in enumerate(H.edges):
            for v in e:
                acc[v].add(i)
        return cls({v: frozenset(s) for v, s in acc.items()})


@dataclass
class ValidationReport:
    uniformity: list[tuple[int, int]] = field(default_factory=list)
    linearity: list[tuple[int, int, list[str]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.uniformity and not self.linearity

    def to_json(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "uniformity": [{"edge": i, "size": s} for i, s in self.uniformity],
            "linearity": [
                {"edges": [i, j], "shared": shared} for i, j, shared in self.linearity
            ],
        }


def validate(H: Hypergraph, k: int | None = None, require_linear: bool = False) -> ValidationReport:
    """Report edges of the wrong size and pairs of edges sharing two or more vertices."""
    report = ValidationReport()
    if k is not None:
        report.uniformity = [(i, len(e)) for i, e in enumerate(H.edges) if len(e) != k]
    if require_linear:
        for i, j in combinations(range(H.num_edges), 2):
            shared = H.edges[i] & H.edges[j]
            if len(shared) >= 2:
                report.linearity.append((i, j, sorted(shared)))
    return report


def is_linear(H: Hypergraph) -> bool:
    return validate(H, require_linear=True).ok


def is_uniform(H: Hypergraph, k: int) -> bool:
    return validate(H, k=k).ok


@dataclass(frozen=True)
class DualCorrespondence:
    """Links a hypergraph with its dual.

    Dual vertex ``source.edge_names[i]`` stands for source edge ``i`` and
    dual edge ``j`` is the star of ``source.vertices[j]``.
    """

    source: Hypergraph
    dual: Hypergraph

    def dual_vertex(self, edge: int) -> str:
        return self.source.edge_names[edge]

    def dual_edge(self, vertex: str) -> int:
        return self._vpos[vertex]

    def source_edge(self, dual_vertex: str) -> int:
        return self.source.edge_index(dual_vertex)

    def source_vertex(self, dual_edge: int) -> str:
        return self.source.vertices[dual_edge]

    @cached_property
    def _vpos(self) -> dict[str, int]:
        return {v: j for j, v in enumerate(self.source.vertices)}

    def to_json(self) -> dict[str, Any]:
        return {
            "vertex_to_edge": {self.dual_vertex(i): i for i in range(self.source.num_edges)},
            "edge_to_vertex": {str(j): v for j, v in enumerate(self.source.vertices)},
        }


def dual(H: Hypergraph) -> tuple[Hypergraph, DualCorrespondence]:
    """Return the dual hypergraph together with its correspondence table.

    Raises IsolatedVertex or DuplicateStar when dualizing would lose
    information (empty stars, or two vertices collapsing to one dual edge).
    """
    stars: dict[frozenset[int], str] = {}
    for v in H.vertices:
        s = H.star(v)
        if not s:
            raise IsolatedVertex(f"vertex {v!r} lies in no edge", vertex=v)
        if s in stars:
            raise DuplicateStar(
                f"vertices {stars[s]!r} and {v!r} have the same star",
                vertices=[stars[s], v],
            )
        stars[s] = v
    D = Hypergraph(
        H.edge_names,
        ([H.edge_names[i] for i in H.star(v)] for v in H.vertices),
        H.vertices,
    )
    return D, DualCorrespondence(H, D)


@dataclass(frozen=True)
class Isomorphism:
    """Vertex and edge bijections from one hypergraph onto another."""

    vertex_map: Mapping[str, str]
    edge_map: Mapping[int, int]

    def to_json(self) -> dict[str, Any]:
        return {
            "vertex_map": dict(sorted(self.vertex_map.items())),
            "edge_map": {str(k): v for k, v in sorted(self.edge_map.items())},
        }


def double_dual_correspondence(H: Hypergraph) -> Isomorphism:
    """Compose the two dual correspondences into a map from dual(dual(H)) onto H."""
    D, c1 = dual(H)
    DD, c2 = dual(D)
    vmap = {x: c1.source_vertex(c2.source_edge(x)) for x in DD.vertices}
    emap = {j: c1.source_edge(c2.source_vertex(j)) for j in range(DD.num_edges)}
    if len(set(vmap.values())) != H.num_vertices or len(set(emap.values())) != H.num_edges:
        raise NotInvolutive("double dual correspondence is not a bijection")
    for j, e in enumerate(DD.edges):
        if frozenset(vmap[x] for x in e) != H.edges[emap[j]]:
            raise NotInvolutive(
                f"double dual edge {j} does not match source edge {emap[j]}", edge=j
            )
    return Isomorphism(vmap, emap)
