"""Finite-threshold peeling for the vertex property P_ell and the edge property P2*.

"Infinitely many" is replaced by a threshold ``d``. Peeling removes every
currently violating element in each round, which makes the trace
deterministic; the fixpoint is the unique maximal witness set.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable

from .core import Hypergraph, dual


@dataclass
class PeelResult:
    witness: frozenset
    qualifying_counts: dict[Hashable, int]
    removal_trace: list[tuple[int, list]] = field(default_factory=list)

    def to_json(self, H: Hypergraph | None = None, edges: bool = False) -> dict[str, Any]:
        def name(x):
            return H.edge_names[x] if edges and H is not None else x

        return {
            "witness": sorted(name(x) for x in self.witness),
            "counts": {str(name(x)): c for x, c in sorted(self.qualifying_counts.items())},
            "trace": [
                {"round": r, "removed": sorted(name(x) for x in removed)}
                for r, removed in self.removal_trace
            ],
        }


def _peel(
    elements: Iterable[Hashable],
    count: Callable[[Hashable, set], int],
    d: int,
) -> PeelResult:
    elements = list(elements)
    alive = set(elements)
    trace: list[tuple[int, list]] = []
    rnd = 0
    while True:
        bad = [x for x in alive if count(x, alive) < d]
        if not bad:
            break
        rnd += 1
        alive.difference_update(bad)
        trace.append((rnd, sorted(bad)))
    counts = {x: count(x, alive) for x in elements}
    return PeelResult(frozenset(alive), counts, trace)


def p_ell_count(H: Hypergraph, v: str, Vp: set, ell: int) -> int:
    """Edges through v that meet ``Vp`` in at least ``ell`` vertices."""
    return sum(1 for e in H.star(v) if len(H.edges[e] & Vp) >= ell)


def p2_star_count(H: Hypergraph, e: int, Ep: set) -> int:
    """Vertices of edge e that also lie in some other edge of ``Ep``."""
    return sum(1 for v in H.edges[e] if any(f != e and f in Ep for f in H.star(v)))


def peel_P_ell(H: Hypergraph, ell: int, d: int) -> PeelResult:
    if ell < 1 or d < 1:
        raise ValueError("ell and d must be positive")
    sizes = set(H.sizes())
    if len(sizes) == 1 and ell > sizes.pop():
        warnings.warn(f"ell={ell} exceeds the edge size; the witness is empty", stacklevel=2)
    return _peel(H.vertices, lambda v, alive: p_ell_count(H, v, alive, ell), d)


def peel_P2_star(H: Hypergraph, d: int) -> PeelResult:
    if d < 1:
        raise ValueError("d must be positive")
    return _peel(range(H.num_edges), lambda e, alive: p2_star_count(H, e, alive), d)


def p2_duality_check(H: Hypergraph, d: int) -> bool:
    """Compare the P_2 witness of H, mapped by v -> v*, with the P2* witness of dual(H)."""
    D, corr = dual(H)
    if d < 1:
        raise ValueError("d must be positive")
    ell_witness = _peel(H.vertices, lambda v, alive: p_ell_count(H, v, alive, 2), d).witness
    left = {corr.dual_edge(v) for v in ell_witness}
    right = set(peel_P2_star(D, d).witness)
    return left == right
