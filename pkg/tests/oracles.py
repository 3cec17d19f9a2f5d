"""Brute-force reference implementations.

These work straight from the definitions by exhaustive enumeration and share
no search code with the package; only the Hypergraph container is reused.
"""

from __future__ import annotations

from itertools import combinations, permutations, product


def _incident(H, v, edge_list):
    return {i for i, e in enumerate(edge_list) if v in H.edges[e]}


def beta_cycle_ok(H, edges, verts):
    n = len(edges)
    if n < 3 or len(set(edges)) != n or len(set(verts)) != n:
        return False
    return all(_incident(H, v, edges) == {i, (i + 1) % n} for i, v in enumerate(verts))


def beta_path_ok(H, verts, edges):
    n = len(edges)
    if n == 0 or len(set(edges)) != n or len(set(verts)) != len(verts):
        return False
    for i, v in enumerate(verts):
        want = {j for j in (i - 1, i) if 0 <= j < n}
        if _incident(H, v, edges) != want:
            return False
    return True


def canon(edges, verts):
    n = len(edges)
    variants = []
    for es, vs in ((list(edges), list(verts)), ([edges[0]] + list(edges[:0:-1]), list(verts[::-1]))):
        for r in range(n):
            variants.append((tuple(es[r:] + es[:r]), tuple(vs[r:] + vs[:r])))
    return min(variants)


def beta_cycles(H):
    """All beta-cycles as canonical (edges, vertices) tuples.

    Every ordering of every subset of at least three edges is tried; each
    connecting vertex must lie in both neighbouring edges, so candidates are
    drawn from those intersections (any other choice fails the definition).
    """
    out = set()
    m = H.num_edges
    for n in range(3, m + 1):
        for edges in permutations(range(m), n):
            choices = [sorted(H.edges[edges[i]] & H.edges[edges[(i + 1) % n]]) for i in range(n)]
            for verts in product(*choices):
                if beta_cycle_ok(H, edges, verts):
                    out.add(canon(edges, verts))
    return out


def beta_paths_from(H, root):
    """All beta-paths ``root e1 v2 e2 ... vn en`` (ending on an edge)."""
    out = []
    m = H.num_edges
    for n in range(1, m + 1):
        for edges in permutations(range(m), n):
            if root not in H.edges[edges[0]]:
                continue
            choices = [sorted(H.edges[edges[i - 1]] & H.edges[edges[i]]) for i in range(1, n)]
            for rest in product(*choices):
                verts = (root,) + rest
                if beta_path_ok(H, verts, edges):
                    out.append((verts, edges))
    return out


def loose_paths(H, k):
    """Every loose path (vertex sequence, edge sequence) with at least one edge."""
    ks = [i for i, e in enumerate(H.edges) if len(e) == k]
    lookup = {H.edges[i]: i for i in ks}
    found = []

    def grow(seq, es):
        found.append((tuple(seq), tuple(es)))
        last = seq[-1]
        for i in ks:
            e = H.edges[i]
            if last not in e:
                continue
            for rest in permutations(sorted(e - {last})):
                new = seq + list(rest)
                if len(set(new)) != len(new):
                    continue
                grow(new, es + [i])

    for i in ks:
        for order in permutations(sorted(H.edges[i])):
            grow(list(order), [i])
    # sanity: recompute edges from blocks
    for seq, es in found:
        for j, e in enumerate(es):
            assert lookup[frozenset(seq[(k - 1) * j : (k - 1) * j + k])] == e
    return found


def increasing(H, k, seq, es, labels, mode):
    if mode == "edge":
        vals = [labels[e] for e in es]
        return all(a < b for a, b in zip(vals, vals[1:]))
    if mode == "full":
        vals = [labels[v] for v in seq]
        return all(a < b for a, b in zip(vals, vals[1:]))
    return all(labels[seq[(k - 1) * j]] < labels[seq[(k - 1) * j + k - 1]] for j in range(len(es)))


def longest(H, k, labels, mode, paths=None):
    """(edge count, lexicographically least vertex sequence) of the best path."""
    best = (0, ())
    for seq, es in paths if paths is not None else loose_paths(H, k):
        if not increasing(H, k, seq, es, labels, mode):
            continue
        n = len(es)
        if n > best[0] or (n == best[0] and seq < best[1]):
            best = (n, seq)
    return best


def max_closed_subset(elements, closed):
    """Union of all subsets passing ``closed``; also checked to be closed itself."""
    elements = list(elements)
    union = set()
    for r in range(1, len(elements) + 1):
        for sub in combinations(elements, r):
            s = set(sub)
            if closed(s):
                union |= s
    return union


def p_ell_closed(H, ell, d):
    def closed(Vp):
        return all(
            sum(1 for e in H.edges if v in e and len(Vp & e) >= ell) >= d for v in Vp
        )

    return closed


def p2_star_closed(H, d):
    def closed(Ep):
        for i in Ep:
            shared = 0
            for v in H.edges[i]:
                if any(j != i and v in H.edges[j] for j in Ep):
                    shared += 1
            if shared < d:
                return False
        return True

    return closed
