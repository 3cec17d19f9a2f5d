"""Loose paths in uniform hypergraphs under vertex and edge labelings.

A loose path with vertex sequence ``v1 v2 ...`` uses the consecutive
k-blocks ``{v1..vk}, {vk..v(2k-1)}, ...``, so neighbouring edges overlap in
exactly one vertex. Three monotonicity conditions are supported:

* ``full``: labels increase along every consecutive pair of vertices;
* ``skip``: each edge's first vertex has a smaller label than its last;
* ``edge``: edge labels increase along the path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Hashable, Iterable, Mapping, Sequence

from .core import Hypergraph
from .errors import (
    BadLength,
    InvalidLabeling,
    MissingLabel,
    NotAnEdge,
    RepeatedVertex,
    TooLarge,
)

MODES = ("full", "skip", "edge")
DEFAULT_SEARCH_BOUND = 9


@dataclass(frozen=True)
class Labeling:
    """Injective positive-integer labels on vertices (keys are ids) or edges (indices).

    Labelings read from JSON must be bijections onto 1..n; in memory any
    injective labeling is accepted so that order-preserving relabelings can
    be compared directly.
    """

    target: str
    map: Mapping[Hashable, int]

    def __post_init__(self) -> None:
        if self.target not in ("vertices", "edges"):
            raise InvalidLabeling(f"unknown labeling target {self.target!r}")
        values = list(self.map.values())
        if len(set(values)) != len(values) or any(x < 1 for x in values):
            raise InvalidLabeling("labels must be distinct positive integers")

    @property
    def bijective(self) -> bool:
        return sorted(self.map.values()) == list(range(1, len(self.map) + 1))

    @classmethod
    def from_sequence(cls, target: str, items: Iterable[Hashable]) -> Labeling:
        """Label ``items`` 1, 2, 3, ... in the given order."""
        return cls(target, {x: i for i, x in enumerate(items, 1)})

    def __getitem__(self, key: Hashable) -> int:
        try:
            return self.map[key]
        except KeyError:
            raise MissingLabel(f"no label for {key!r}", key=str(key)) from None

    def to_json(self, H: Hypergraph | None = None) -> dict[str, Any]:
        if self.target == "edges" and H is not None:
            m = {H.edge_names[e]: x for e, x in sorted(self.map.items())}
        else:
            m = {str(k): x for k, x in sorted(self.map.items(), key=lambda kv: kv[1])}
        return {"target": self.target, "map": m}

    @classmethod
    def from_json(cls, data: Mapping[str, Any], H: Hypergraph) -> Labeling:
        target = data.get("target", "vertices")
        raw = data.get("map", {})
        if target == "edges":
            try:
                phi = cls(target, {H.edge_index(str(k)): int(v) for k, v in raw.items()})
            except KeyError as exc:
                raise InvalidLabeling(str(exc)) from exc
        else:
            phi = cls(target, {str(k): int(v) for k, v in raw.items()})
        if not phi.bijective:
            raise InvalidLabeling("labels must be a bijection onto 1..n")
        return phi


@dataclass(frozen=True)
class LoosePath:
    k: int
    vertex_seq: tuple[str, ...]
    edge_seq: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_seq)

    def blocks(self) -> list[tuple[str, ...]]:
        step = self.k - 1
        return [self.vertex_seq[step * i : step * i + self.k] for i in range(self.length)]

    def to_json(self, H: Hypergraph | None = None) -> dict[str, Any]:
        edges: list[Any] = list(self.edge_seq)
        if H is not None:
            edges = [H.edge_names[e] for e in self.edge_seq]
        return {"k": self.k, "length": self.length, "vertices": list(self.vertex_seq), "edges": edges}


def derive_edges(H: Hypergraph, k: int, vertex_seq: Sequence[Any]) -> LoosePath:
    seq = tuple(str(v) for v in vertex_seq)
    if k < 2:
        raise BadLength("loose paths need k >= 2", k=k)
    if not seq:
        return LoosePath(k, (), ())
    if len(seq) < k or (len(seq) - k) % (k - 1):
        raise BadLength(
            f"length {len(seq)} is not k + (k-1)m for k={k}", length=len(seq), k=k
        )
    if len(set(seq)) != len(seq):
        raise RepeatedVertex("loose path vertices must be distinct")
    lookup = {e: i for i, e in enumerate(H.edges)}
    edge_seq = []
    for i in range((len(seq) - 1) // (k - 1)):
        block = seq[(k - 1) * i : (k - 1) * i + k]
        j = lookup.get(frozenset(block))
        if j is None:
            raise NotAnEdge(f"block {i} {list(block)} is not an edge", block=i)
        edge_seq.append(j)
    return LoosePath(k, seq, tuple(edge_seq))


def is_increasing(P: LoosePath, phi: Labeling, mode: str = "full") -> bool:
    if phi.target != "vertices":
        raise InvalidLabeling("vertex modes need a vertex labeling")
    if mode == "full":
        labels = [phi[v] for v in P.vertex_seq]
        return all(a < b for a, b in zip(labels, labels[1:]))
    if mode == "skip":
        return all(phi[b[0]] < phi[b[-1]] for b in P.blocks())
    raise ValueError(f"unknown vertex mode {mode!r}")


def is_edge_increasing(P: LoosePath, phi: Labeling) -> bool:
    if phi.target != "edges":
        raise InvalidLabeling("edge mode needs an edge labeling")
    labels = [phi[e] for e in P.edge_seq]
    return all(a < b for a, b in zip(labels, labels[1:]))


def satisfies(P: LoosePath, phi: Labeling, mode: str) -> bool:
    if mode == "edge":
        return is_edge_increasing(P, phi)
    return is_increasing(P, phi, mode)


def _check_mode(phi: Labeling, mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    want = "edges" if mode == "edge" else "vertices"
    if phi.target != want:
        raise InvalidLabeling(f"mode {mode!r} needs a labeling of {want}")


class _Search:
    """Branch and bound over loose paths, visiting vertex sequences in lexicographic order.

    Siblings are generated in lexicographic order of the block they append,
    so the first path of maximum length met is the lexicographically least.
    Two partial paths with the same used-vertex set and the same frontier have
    identical continuations; the later one is skipped.
    """

    def __init__(self, H: Hypergraph, k: int, phi: Labeling, mode: str) -> None:
        self.H, self.k, self.phi, self.mode = H, k, phi, mode
        self.edge_ids = [i for i, e in enumerate(H.edges) if len(e) == k]
        self.best: tuple[str, ...] = ()
        self.best_edges: tuple[int, ...] = ()
        self.best_len = 0
        self._edge_set = set(self.edge_ids)
        self.seen: set[tuple[Any, ...]] = set()
        self._ub: dict[Any, int] = {}

    def lab(self, x: Any) -> int:
        return self.phi[x]

    def blocks_from(self, x: str | None, e: int, prev_edge: int | None):
        """Blocks (without the junction) continuing a path through edge e from junction x."""
        verts = self.H.edges[e]
        if self.mode == "full":
            order = sorted(verts, key=self.lab)
            if x is not None and order[0] != x:
                return
            yield tuple(order) if x is None else tuple(order[1:])
            return
        if self.mode == "edge" and prev_edge is not None and self.lab(e) <= self.lab(prev_edge):
            return
        starts = sorted(verts) if x is None else [x]
        for s in starts:
            for y in sorted(verts - {s}):
                if self.mode == "skip" and self.lab(s) >= self.lab(y):
                    continue
                mid = tuple(sorted(verts - {s, y}))
                block = mid + (y,)
                yield (s,) + block if x is None else block

    def upper(self, x: str, prev_edge: int | None) -> int:
        """Edges still attainable from junction x, ignoring vertex distinctness."""
        key = prev_edge if self.mode == "edge" else x
        hit = self._ub.get(key)
        if hit is not None:
            return hit
        best = 0
        if self.mode == "edge":
            here = self.H.edges[prev_edge]
            for e in self.edge_ids:
                if self.lab(e) > self.lab(prev_edge) and self.H.edges[e] & here:
                    best = max(best, 1 + self.upper("", e))
        else:
            for e in self.H.star(x):
                if e not in self._edge_set:
                    continue
                for block in self.blocks_from(x, e, None):
                    best = max(best, 1 + self.upper(block[-1], None))
        self._ub[key] = best
        return best

    def run(self) -> LoosePath:
        firsts = []
        for e in self.edge_ids:
            for block in self.blocks_from(None, e, None):
                firsts.append((block, e))
        firsts.sort()
        for block, e in firsts:
            self.dfs(list(block), [e], set(block))
        return LoosePath(self.k, self.best, self.best_edges)

    def dfs(self, seq: list[str], es: list[int], used: set[str]) -> None:
        n = len(es)
        if n > self.best_len:
            self.best_len, self.best, self.best_edges = n, tuple(seq), tuple(es)
        x = seq[-1]
        if n + self.upper(x, es[-1]) <= self.best_len:
            return
        state = (x, es[-1] if self.mode == "edge" else None, frozenset(used))
        if state in self.seen:
            return
        self.seen.add(state)
        cands = []
        for e in self.H.star(x):
            if e not in self._edge_set or e in es:
                continue
            for block in self.blocks_from(x, e, es[-1]):
                if used.isdisjoint(block):
                    cands.append((block, e))
        cands.sort()
        for block, e in cands:
            seq.extend(block)
            es.append(e)
            used.update(block)
            self.dfs(seq, es, used)
            used.difference_update(block)
            es.pop()
            del seq[len(seq) - len(block) :]


def longest_increasing_path(H: Hypergraph, k: int, phi: Labeling, mode: str = "full") -> LoosePath:
    """Exact longest loose path satisfying ``mode`` under ``phi``.

    Length is the number of edges; ties go to the lexicographically least
    vertex sequence. Edges whose size differs from k are ignored.
    """
    _check_mode(phi, mode)
    if k < 2:
        raise BadLength("loose paths need k >= 2", k=k)
    return _Search(H, k, phi, mode).run()


def labeled_length(P: LoosePath, mode: str) -> int:
    """Count of labeled objects along P: vertices in vertex modes, edges in edge mode."""
    return P.length if mode == "edge" else len(P.vertex_seq)


def adversarial_min_max(
    H: Hypergraph, k: int, mode: str = "full", bound: int = DEFAULT_SEARCH_BOUND
) -> tuple[int, Labeling]:
    """Labeling that minimizes the longest increasing path, by exhaustive search.

    The value is measured in labeled objects (see ``labeled_length``). Labelings
    are tried in lexicographic order of their label vectors; the first minimizer wins.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    target = "edges" if mode == "edge" else "vertices"
    items: list[Any] = list(range(H.num_edges)) if mode == "edge" else sorted(H.vertices)
    if len(items) > bound:
        raise TooLarge(
            f"{len(items)} {target} exceeds the search bound {bound}", size=len(items), bound=bound
        )
    best: tuple[int, Labeling] | None = None
    for perm in itertools.permutations(range(1, len(items) + 1)):
        phi = Labeling(target, dict(zip(items, perm)))
        value = labeled_length(longest_increasing_path(H, k, phi, mode), mode)
        if best is None or value < best[0]:
            best = (value, phi)
    if best is None:
        best = (0, Labeling(target, {}))
    return best
