"""Beta-paths and beta-cycles: checks, enumeration, and the max-index reductions."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Any, Iterator, Mapping, Sequence

from .core import DualCorrespondence, Hypergraph, is_linear
from .errors import MalformedSequence, MissingLabel, PreconditionViolated
from .pathsearch import Labeling

DEFAULT_LIMIT = 10_000


def default_limit() -> int:
    """Enumeration cap, overridable through ``BETAPATH_LIMIT``."""
    raw = os.environ.get("BETAPATH_LIMIT")
    return int(raw) if raw else DEFAULT_LIMIT


@dataclass(frozen=True)
class BetaSequence:
    """Alternating vertex/edge sequence; edges are indices into a hypergraph.

    A path reads ``v1 e1 v2 e2 ...`` and ends either on an edge
    (``len(vertices) == len(edges)``) or on a vertex
    (``len(vertices) == len(edges) + 1``). A cycle reads ``e1 v1 e2 v2 ... en vn``
    and closes back to ``e1``; vertex ``vi`` sits between ``ei`` and ``e(i+1)``.
    Distinctness is not enforced here, only shape; the predicates decide validity.
    """

    kind: str
    vertices: tuple[str, ...]
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        nv, ne = len(self.vertices), len(self.edges)
        if self.kind == "path":
            if nv == 0 or ne not in (nv, nv - 1):
                raise MalformedSequence("path must alternate starting with a vertex")
        elif self.kind == "cycle":
            if ne == 0 or nv != ne:
                raise MalformedSequence("cycle must alternate edge, vertex, ... edge, vertex")
        else:
            raise MalformedSequence(f"unknown sequence kind {self.kind!r}")

    @classmethod
    def path(cls, vertices: Sequence[str], edges: Sequence[int]) -> BetaSequence:
        return cls("path", tuple(vertices), tuple(edges))

    @classmethod
    def cycle(cls, edges: Sequence[int], vertices: Sequence[str]) -> BetaSequence:
        return cls("cycle", tuple(vertices), tuple(edges))

    @property
    def ends_with_edge(self) -> bool:
        return self.kind == "path" and len(self.vertices) == len(self.edges)

    def items(self) -> list[tuple[str, Any]]:
        out: list[tuple[str, Any]] = []
        if self.kind == "path":
            for i, v in enumerate(self.vertices):
                out.append(("v", v))
                if i < len(self.edges):
                    out.append(("e", self.edges[i]))
        else:
            for e, v in zip(self.edges, self.vertices):
                out.append(("e", e))
                out.append(("v", v))
        return out

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.kind, "items": [f"{t}:{x}" for t, x in self.items()]}

    @classmethod
    def from_json(cls, data: Mapping[str, Any], H: Hypergraph) -> BetaSequence:
        try:
            kind = data["kind"]
            raw = list(data["items"])
        except (KeyError, TypeError) as exc:
            raise MalformedSequence("sequence JSON needs 'kind' and 'items'") from exc
        tags: list[str] = []
        verts: list[str] = []
        edges: list[int] = []
        for item in raw:
            tag, sep, ref = str(item).partition(":")
            if not sep or tag not in ("v", "e"):
                raise MalformedSequence(f"bad sequence item {item!r}")
            tags.append(tag)
            if tag == "v":
                verts.append(ref)
            else:
                try:
                    edges.append(H.edge_index(ref))
                except KeyError as exc:
                    raise MalformedSequence(str(exc)) from exc
        first = "v" if kind == "path" else "e"
        other = "e" if first == "v" else "v"
        if any(t != (first if i % 2 == 0 else other) for i, t in enumerate(tags)):
            raise MalformedSequence("items do not alternate correctly")
        return cls(kind, tuple(verts), tuple(edges))


def _check_edges(H: Hypergraph, s: BetaSequence) -> None:
    for e in s.edges:
        if not 0 <= e < H.num_edges:
            raise MalformedSequence(f"edge index {e} out of range", edge=e)


def _positions(H: Hypergraph, v: str, edges: Sequence[int]) -> set[int]:
    return {i for i, e in enumerate(edges) if v in H.edges[e]}


def _distinct(s: BetaSequence) -> bool:
    return len(set(s.vertices)) == len(s.vertices) and len(set(s.edges)) == len(s.edges)


def is_beta_path(H: Hypergraph, s: BetaSequence) -> bool:
    """Each vertex lies in exactly its neighbouring edges of the sequence and no others."""
    if s.kind != "path":
        raise MalformedSequence("expected a path sequence")
    if not s.edges:
        raise MalformedSequence("a beta-path needs at least one edge")
    _check_edges(H, s)
    if not _distinct(s):
        return False
    n = len(s.edges)
    for i, v in enumerate(s.vertices):
        if v not in H.index.star:
            return False
        allowed = {j for j in (i - 1, i) if 0 <= j < n}
        if _positions(H, v, s.edges) != allowed:
            return False
    return True


def is_beta_cycle(H: Hypergraph, s: BetaSequence) -> bool:
    if s.kind != "cycle":
        raise MalformedSequence("expected a cycle sequence")
    _check_edges(H, s)
    n = len(s.edges)
    if n < 3 or not _distinct(s):
        return False
    for i, v in enumerate(s.vertices):
        if v not in H.index.star:
            return False
        if _positions(H, v, s.edges) != {i, (i + 1) % n}:
            return False
    return True


@dataclass(frozen=True, order=True)
class CanonicalCycle:
    """A beta-cycle rotated to its least edge and read in the smaller direction."""

    edges: tuple[int, ...]
    vertices: tuple[str, ...]

    def to_sequence(self) -> BetaSequence:
        return BetaSequence.cycle(self.edges, self.vertices)

    def to_json(self) -> dict[str, Any]:
        return self.to_sequence().to_json()


def canonical(c: BetaSequence | CanonicalCycle) -> CanonicalCycle:
    if isinstance(c, BetaSequence) and c.kind != "cycle":
        raise MalformedSequence("only cycles have a canonical form")
    edges, verts = tuple(c.edges), tuple(c.vertices)
    n = len(edges)
    redges = (edges[0],) + edges[:0:-1]
    rverts = verts[::-1]
    best = None
    for es, vs in ((edges, verts), (redges, rverts)):
        for r in range(n):
            cand = (es[r:] + es[:r], vs[r:] + vs[:r])
            if best is None or cand < best:
                best = cand
    return CanonicalCycle(*best)


@dataclass(frozen=True)
class CycleEnumeration:
    cycles: tuple[CanonicalCycle, ...]
    truncated: bool

    def __len__(self) -> int:
        return len(self.cycles)

    def to_json(self) -> dict[str, Any]:
        return {
            "count": len(self.cycles),
            "truncated": self.truncated,
            "cycles": [c.to_json() for c in self.cycles],
        }


def parse_ref(ref: str | tuple[str, Any], H: Hypergraph) -> tuple[str, Any]:
    """Turn ``"v:a"`` / ``"e:0"`` / ``"all"`` (or a tagged tuple) into a tagged reference."""
    if isinstance(ref, tuple):
        tag, x = ref
    elif ref == "all":
        return ("all", None)
    else:
        tag, sep, x = ref.partition(":")
        if not sep or tag not in ("v", "e"):
            raise MalformedSequence(f"bad reference {ref!r}; use v:<id>, e:<ref> or all")
    if tag == "e":
        return ("e", H.edge_index(x))
    return (tag, x)


def enumerate_beta_cycles(
    H: Hypergraph,
    through: str | tuple[str, Any] = "all",
    limit: int | None = None,
) -> CycleEnumeration:
    """All beta-cycles up to rotation and reversal, optionally through one vertex or edge.

    Backtracks from each edge taken as the least edge of the cycle. A vertex
    is admitted only if it lies in the current edge and in none of the earlier
    ones; an edge only if it avoids every placed vertex but the last.
    """
    tag, target = parse_ref(through, H)
    if limit is None:
        limit = default_limit()
    found: set[CanonicalCycle] = set()
    edges = H.edges
    m = H.num_edges

    def wanted(es: list[int], vs: list[str]) -> bool:
        if tag == "v":
            return target in vs
        if tag == "e":
            return target in es
        return True

    def extend(es: list[int], vs: list[str], placed: set[str]) -> bool:
        # es = e1..ei, vs = v1..v(i-1); returns False once the limit is hit
        cur = edges[es[-1]]
        if len(es) >= 3:
            for x in sorted(cur & edges[es[0]]):
                if x in placed or any(x in edges[e] for e in es[1:-1]):
                    continue
                if wanted(es, vs + [x]):
                    found.add(canonical(CanonicalCycle(tuple(es), tuple(vs + [x]))))
                    if len(found) >= limit:
                        return False
        for x in sorted(cur):
            if x in placed or any(x in edges[e] for e in es[:-1]):
                continue
            for g in sorted(H.star(x)):
                if g <= es[0] or g in es:
                    continue
                if any(p in edges[g] for p in placed):
                    continue
                placed.add(x)
                es.append(g)
                vs.append(x)
                ok = extend(es, vs, placed)
                vs.pop()
                es.pop()
                placed.discard(x)
                if not ok:
                    return False
        return True

    truncated = False
    for s in range(m):
        if tag == "e" and target < s:
            break
        if not extend([s], [], set()):
            truncated = True
            break
    return CycleEnumeration(tuple(sorted(found)), truncated)


def iter_beta_paths(
    H: Hypergraph, start: str, max_edges: int | None = None
) -> Iterator[BetaSequence]:
    """Yield every beta-path ``start e1 v2 e2 ... vn en`` in depth-first order.

    Each prefix ending on an edge is itself a beta-path, so the search emits
    every node it visits.
    """
    if start not in H.index.star:
        return
    limit = H.num_edges if max_edges is None else max_edges
    vs: list[str] = [start]
    es: list[int] = []

    def grow() -> Iterator[BetaSequence]:
        if len(es) >= limit:
            return
        pv = set(vs)
        for g in sorted(H.star(vs[-1])):
            if g in es or any(p in H.edges[g] for p in vs[:-1]):
                continue
            es.append(g)
            yield BetaSequence.path(vs, es)
            cur = H.edges[g]
            for x in sorted(cur - pv):
                if any(x in H.edges[e] for e in es[:-1]):
                    continue
                vs.append(x)
                yield from grow()
                vs.pop()
            es.pop()

    yield from grow()


def _max_index(items: Sequence[Any], pred) -> int:
    for j in range(len(items) - 1, -1, -1):
        if pred(items[j]):
            return j
    return -1


def reduce_paths_to_cycle(H: Hypergraph, P1: BetaSequence, P2: BetaSequence) -> BetaSequence:
    """Close two beta-paths ``u ... v f`` and ``u ... w f`` into a beta-cycle ``f v ... w``.

    Walks P1 backwards then P2 forwards (dropping the final f), and from
    ``f, v`` repeatedly takes the last edge holding the current vertex, then
    the last vertex lying in that edge, until ``w`` is reached.
    """
    if not is_linear(H):
        raise PreconditionViolated("hypergraph is not linear")
    for name, P in (("P1", P1), ("P2", P2)):
        if P.kind != "path" or not P.ends_with_edge:
            raise PreconditionViolated(f"{name} must be a path ending with an edge")
        if not is_beta_path(H, P):
            raise PreconditionViolated(f"{name} is not a beta-path")
    if P1.vertices[0] != P2.vertices[0]:
        raise PreconditionViolated("paths must share their first vertex")
    if P1.edges[-1] != P2.edges[-1]:
        raise PreconditionViolated("paths must share their final edge")
    f = P1.edges[-1]
    v, w = P1.vertices[-1], P2.vertices[-1]
    if v == w:
        raise PreconditionViolated("final vertices before f must differ", vertex=v)

    seq_e = [P1.edges[i] for i in range(len(P1.edges) - 1, -1, -1)]
    seq_u = [P1.vertices[i] for i in range(len(P1.vertices) - 1, -1, -1)]
    seq_e += list(P2.edges[:-1])
    seq_u += list(P2.vertices[1:])

    cyc_e, cyc_v = [f], [v]
    cur = v
    for _ in range(len(seq_e)):
        if cur == w:
            break
        a = _max_index(seq_e, lambda e: cur in H.edges[e])
        fi = seq_e[a]
        b = _max_index(seq_u, lambda x: x in H.edges[fi])
        cur = seq_u[b]
        cyc_e.append(fi)
        cyc_v.append(cur)
    out = BetaSequence.cycle(cyc_e, cyc_v)
    if cur != w or not is_beta_cycle(H, out):
        raise PreconditionViolated("reduction did not close into a beta-cycle")
    return out


def splice_reduce(H: Hypergraph, P1: BetaSequence, P2: BetaSequence) -> BetaSequence:
    """Join ``vC ... v1`` with ``v1 e1 ... vi ei`` and reduce to a beta-path ``vC ... vi ei``.

    P1 may be a lone vertex. The two paths may not share edges or any vertex
    besides the junction, and the final edge of P2 must avoid P1's vertices.
    """
    if P1.kind != "path" or P1.ends_with_edge:
        raise PreconditionViolated("P1 must be a path ending with a vertex")
    if P2.kind != "path" or not P2.ends_with_edge:
        raise PreconditionViolated("P2 must be a path ending with an edge")
    if P1.edges and not is_beta_path(H, P1):
        raise PreconditionViolated("P1 is not a beta-path")
    if P1.vertices[0] not in H.index.star:
        raise PreconditionViolated("P1 starts at an unknown vertex")
    if not is_beta_path(H, P2):
        raise PreconditionViolated("P2 is not a beta-path")
    junction = P1.vertices[-1]
    if P2.vertices[0] != junction:
        raise PreconditionViolated("P2 must start where P1 ends")
    if set(P1.edges) & set(P2.edges):
        raise PreconditionViolated("P1 and P2 share an edge")
    if (set(P1.vertices) & set(P2.vertices)) - {junction}:
        raise PreconditionViolated("P1 and P2 share a vertex besides the junction")
    last = H.edges[P2.edges[-1]]
    if any(x in last for x in P1.vertices[:-1]):
        raise PreconditionViolated("final edge of P2 meets a vertex of P1")

    W = list(P1.vertices) + list(P2.vertices[1:])
    G = list(P1.edges) + list(P2.edges)
    out_v: list[str] = []
    out_e: list[int] = []
    x = W[0]
    while True:
        a = _max_index(G, lambda e: x in H.edges[e])
        out_v.append(x)
        out_e.append(G[a])
        if a == len(G) - 1:
            break
        b = _max_index(W, lambda y: y in H.edges[G[a]])
        x = W[b]
    out = BetaSequence.path(out_v, out_e)
    if out_v[-1] != W[-1] or not is_beta_path(H, out):
        raise PreconditionViolated("splice did not reduce to a beta-path")
    return out


def dual_transform(P: BetaSequence, corr: DualCorrespondence) -> BetaSequence:
    """Map ``v1 e1 v2 e2 v3 ...`` in H to ``e1 v2* e2 v3* ...`` in the dual.

    The first vertex is dropped, so only the rest of P has to satisfy the
    beta-path conditions; PreconditionViolated is raised when the image is
    not a beta-path of the dual.
    """
    if P.kind != "path":
        raise MalformedSequence("expected a path sequence")
    if len(P.vertices) < 2:
        raise MalformedSequence("transform of a one-vertex path is empty")
    _check_edges(corr.source, P)
    try:
        image = BetaSequence.path(
            [corr.dual_vertex(e) for e in P.edges],
            [corr.dual_edge(v) for v in P.vertices[1:]],
        )
    except KeyError as exc:
        raise PreconditionViolated(f"unknown vertex {exc.args[0]!r}") from exc
    if not is_beta_path(corr.dual, image):
        raise PreconditionViolated("image is not a beta-path of the dual")
    return image


def induced_labeling(phi: Labeling, corr: DualCorrespondence) -> Labeling:
    """Carry a labeling of H over to the dual: ``v* -> phi(v)`` or ``e -> phi(e)``."""
    if phi.target == "vertices":
        return Labeling("edges", {corr.dual_edge(v): x for v, x in phi.map.items()})
    return Labeling("vertices", {corr.dual_vertex(e): x for e, x in phi.map.items()})


def is_increasing_beta(s: BetaSequence, phi: Labeling) -> bool:
    """Labels strictly increase along the sequence's vertices (or edges)."""
    items = s.vertices if phi.target == "vertices" else s.edges
    try:
        labels = [phi.map[x] for x in items]
    except KeyError as exc:
        raise MissingLabel(f"no label for {exc.args[0]!r}") from exc
    return all(a < b for a, b in zip(labels, labels[1:]))
