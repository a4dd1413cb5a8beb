"""Exact structural invariants of hypergraphs.

Distance and diameter live on the primal graph (one primal edge = one
hyperedge of path length).  Girth is half the shortest cycle of the
bipartite incidence representation.  The weak chromatic number comes
from exact backtracking, host trees from an exhaustive labeled-tree
search, and isomorphism from pruned bijection search -- all answers are
exact, never heuristic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Hashable

from .arith import Factorization, exponent_vector
from .hypergraph import Hypergraph
from .topology import SimpleGraph, simple_graph

INFINITE = math.inf


class ColoringContradiction(RuntimeError):
    """The closed-form two-coloring failed verification.

    Raised instead of returning, because a failure here contradicts the
    chromatic classification and must surface as a finding.
    """


def primal_adjacency(h: Hypergraph) -> list[int]:
    """Bitmask adjacency of the primal graph (co-membership in an edge)."""
    adj = [0] * len(h.vertices)
    for e in h.edges:
        for i in e:
            for j in e:
                if i != j:
                    adj[i] |= 1 << j
    return adj


def is_connected(h: Hypergraph) -> bool:
    """Vacuously true for at most one vertex."""
    n = len(h.vertices)
    if n <= 1:
        return True
    adj = primal_adjacency(h)
    reached = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            bit = frontier & -frontier
            frontier &= frontier - 1
            nxt |= adj[bit.bit_length() - 1]
        frontier = nxt & ~reached
        reached |= frontier
    return reached == (1 << n) - 1


def _bfs_distances(adj: list[int], source: int) -> list[float]:
    n = len(adj)
    dist: list[float] = [INFINITE] * n
    dist[source] = 0
    reached = 1 << source
    frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        while frontier:
            bit = frontier & -frontier
            frontier &= frontier - 1
            nxt |= adj[bit.bit_length() - 1]
        frontier = nxt & ~reached
        reached |= frontier
        m = frontier
        while m:
            bit = m & -m
            m &= m - 1
            dist[bit.bit_length() - 1] = d
    return dist


def distance(h: Hypergraph, u: Hashable, v: Hashable):
    """Hyperedge count of a shortest path between the labelled vertices;
    0 for u == v, math.inf when unreachable."""
    iu = h.vertex_index(u)
    iv = h.vertex_index(v)
    if iu == iv:
        return 0
    return _bfs_distances(primal_adjacency(h), iu)[iv]


def diameter(h: Hypergraph):
    """Maximum pairwise distance; None for the empty hypergraph,
    math.inf when disconnected."""
    n = len(h.vertices)
    if n == 0:
        return None
    if n == 1:
        return 0
    adj = primal_adjacency(h)
    best = 0
    for s in range(n):
        best = max(best, max(_bfs_distances(adj, s)))
        if best == INFINITE:
            return INFINITE
    return best


def girth(h: Hypergraph):
    """Length of a shortest hypergraph cycle, math.inf if acyclic.

    Computed as half the shortest cycle of the vertex/edge incidence
    graph: a hypergraph cycle of length k (k distinct vertices and k
    distinct hyperedges, closed) is exactly an incidence cycle of
    length 2k, so in particular two hyperedges sharing two vertices
    give girth 2.
    """
    nv = len(h.vertices)
    if len(h.edges) < 2:
        return INFINITE
    adj: list[list[int]] = [[] for _ in range(nv + len(h.edges))]
    for j, e in enumerate(h.edges):
        for v in e:
            adj[v].append(nv + j)
            adj[nv + j].append(v)
    best = INFINITE
    # every cycle alternates sides, so rooting at vertex nodes suffices
    for root in range(nv):
        dist = {root: 0}
        parent = {root: -1}
        layer = [root]
        while layer:
            nxt = []
            for u in layer:
                du = dist[u]
                if du * 2 >= best:
                    continue
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = du + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w and parent[w] != u:
                        cand = du + dist[w] + 1
                        if cand < best:
                            best = cand
            layer = nxt
    return best if best is INFINITE else best // 2


def chromatic_number(h: Hypergraph) -> int:
    """Smallest k admitting a weak proper k-coloring (no monochromatic
    hyperedge), by exact backtracking from k = 1; 0 for the empty
    hypergraph."""
    n = len(h.vertices)
    if n == 0:
        return 0
    if not h.edges:
        return 1
    for k in range(1, n + 1):
        if _try_color(h, k) is not None:
            return k
    raise AssertionError("n colors always suffice")  # pragma: no cover


def _try_color(h: Hypergraph, k: int) -> list[int] | None:
    """Backtracking weak coloring with k colors, or None."""
    n = len(h.vertices)
    member = [[] for _ in range(n)]
    for j, e in enumerate(h.edges):
        for v in e:
            member[v].append(j)
    # color most-constrained vertices first
    order = sorted(range(n), key=lambda v: -len(member[v]))
    pos = [0] * n
    for idx, v in enumerate(order):
        pos[v] = idx
    edge_last = [max(pos[v] for v in e) for e in h.edges]
    colors = [-1] * n

    def feasible(j: int, upto: int) -> bool:
        # an edge fully colored at step `upto` must see two colors
        if edge_last[j] != upto:
            return True
        e = h.edges[j]
        first = colors[e[0]]
        return any(colors[v] != first for v in e)

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        limit = k if i > 0 else 1  # symmetry break on the first vertex
        for c in range(limit):
            colors[v] = c
            if all(feasible(j, i) for j in member[v]) and extend(i + 1):
                return True
        colors[v] = -1
        return False

    return list(colors) if extend(0) else None


def constructive_two_coloring(f: Factorization, h: Hypergraph) -> dict:
    """The closed-form proper 2-coloring of the trivial-intersection
    hypergraph: color A = vertices with the full exponent of the smallest
    prime, color B = the rest.  Verified before returning."""
    if f.omega < 2:
        raise ValueError("two-coloring needs at least two prime divisors")
    alpha1 = f.factors[0][1]
    coloring = {}
    for lab in h.vertices:
        exps = exponent_vector(lab, f)
        coloring[lab] = "A" if exps[0] == alpha1 else "B"
    for e in h.edge_label_sets():
        seen = {coloring[lab] for lab in e}
        if len(seen) != 2:
            raise ColoringContradiction(
                f"edge {e} is monochromatic under the A/B split for n={f.n}")
    return coloring


def is_star(h: Hypergraph) -> bool:
    """True iff some vertex lies on every hyperedge (vacuously true with
    no edges)."""
    if not h.edges:
        return True
    common = set(h.edges[0])
    for e in h.edges[1:]:
        common.intersection_update(e)
        if not common:
            return False
    return True


@dataclass(frozen=True)
class HostTreeResult:
    """Outcome of the exact host-tree search.

    status is "yes" (tree is a verified witness), "no" (exhaustive
    search found none) or "unknown" (vertex count above the search
    limit; tree is None).
    """

    status: str
    tree: SimpleGraph | None = None


def has_host_tree(h: Hypergraph, search_limit: int = 9) -> HostTreeResult:
    """Exhaustive search for a spanning tree in which every hyperedge
    induces a subtree.

    Enumerates all labeled trees on the vertex set, one per parent
    vector rooted at the first processed vertex, pruning on a monotone
    invariant: paths inside a growing forest are final, so two
    components may only be joined across a hyperedge that straddles
    them by an edge whose endpoints both lie in that hyperedge.  Exact
    up to search_limit vertices; "unknown" beyond, never a heuristic.
    """
    m = len(h.vertices)
    if m > search_limit:
        return HostTreeResult("unknown")
    labels = tuple(str(lab) for lab in h.vertices)
    if m <= 1:
        return HostTreeResult("yes", simple_graph(m, [], labels))
    edge_masks = [sum(1 << v for v in e) for e in h.edges]

    # processing/candidate order is pure heuristic: tightly constrained
    # vertices first, co-hyperedge partners as preferred parents
    membership = [sum(1 for em in edge_masks if em >> v & 1) for v in range(m)]
    order = sorted(range(m), key=lambda v: (-membership[v], v))
    shares = [0] * m
    for em in edge_masks:
        rest = em
        while rest:
            bit = rest & -rest
            rest &= rest - 1
            shares[bit.bit_length() - 1] |= em
    cand_order = [sorted((u for u in range(m) if u != v),
                         key=lambda u: (not shares[v] >> u & 1, u))
                  for v in range(m)]

    comp_id = list(range(m))
    comp_mask = [1 << v for v in range(m)]
    chosen: list[tuple[int, int]] = []

    def attach(step: int) -> bool:
        if step == m:
            return True
        v = order[step]
        for u in cand_order[v]:
            cu, cv = comp_id[u], comp_id[v]
            if cu == cv:
                continue
            mu, mv = comp_mask[cu], comp_mask[cv]
            ebit = (1 << u) | (1 << v)
            ok = True
            for em in edge_masks:
                if em & mu and em & mv and (em & ebit) != ebit:
                    ok = False
                    break
            if not ok:
                continue
            merged = mu | mv
            saved = [w for w in range(m) if comp_id[w] == cv]
            for w in saved:
                comp_id[w] = cu
            comp_mask[cu] = merged
            chosen.append((min(u, v), max(u, v)))
            if attach(step + 1):
                return True
            chosen.pop()
            comp_mask[cu] = mu
            for w in saved:
                comp_id[w] = cv
        return False

    if attach(1):
        tree = simple_graph(m, chosen, labels)
        if not verify_host_tree(h, tree):
            raise AssertionError("search produced an invalid host tree")
        return HostTreeResult("yes", tree)
    return HostTreeResult("no")


def host_tree_relabelled(result: HostTreeResult, h_from: Hypergraph,
                         h_to: Hypergraph, mapping: dict) -> HostTreeResult:
    """Carry a host-tree answer across a verified isomorphism.

    Host-tree existence is an isomorphism invariant; a "yes" witness is
    re-indexed through the mapping and re-verified on the target."""
    if result.status != "yes":
        return result
    index_map = {h_from.vertex_index(a): h_to.vertex_index(b)
                 for a, b in mapping.items()}
    tree = simple_graph(len(h_to.vertices),
                        [(index_map[u], index_map[v]) for u, v in result.tree.edges],
                        [str(lab) for lab in h_to.vertices])
    if not verify_host_tree(h_to, tree):
        raise AssertionError("witness did not survive relabelling")
    return HostTreeResult("yes", tree)


def verify_host_tree(h: Hypergraph, tree: SimpleGraph) -> bool:
    """Independent check: spanning, acyclic, connected, and every
    hyperedge induces a connected subgraph."""
    m = len(h.vertices)
    if tree.vertex_count != m:
        return False
    if m == 0:
        return not tree.edges
    if len(tree.edges) != m - 1:
        return False
    adj = tree.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != m:
        return False  # disconnected (with m-1 edges this also means a cycle)
    for e in h.edges:
        inside = set(e)
        start = e[0]
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in inside and w not in comp:
                    comp.add(w)
                    stack.append(w)
        if comp != inside:
            return False
    return True


def isomorphic(h1: Hypergraph, h2: Hypergraph):
    """Exact hypergraph isomorphism; returns (True, vertex label map) or
    (False, None).

    Backtracking over vertex bijections pruned by per-vertex incident
    edge-size multisets and pairwise co-membership counts; a complete
    candidate is accepted only if it maps the edge set exactly onto the
    edge set.
    """
    n = len(h1.vertices)
    if n != len(h2.vertices) or len(h1.edges) != len(h2.edges):
        return False, None
    if sorted(map(len, h1.edges)) != sorted(map(len, h2.edges)):
        return False, None
    if n == 0:
        return True, {}

    def signatures(h: Hypergraph) -> list[tuple[int, ...]]:
        sig = [[] for _ in range(len(h.vertices))]
        for e in h.edges:
            for v in e:
                sig[v].append(len(e))
        return [tuple(sorted(s)) for s in sig]

    sig1, sig2 = signatures(h1), signatures(h2)
    if sorted(sig1) != sorted(sig2):
        return False, None

    def comembership(h: Hypergraph) -> list[list[int]]:
        co = [[0] * len(h.vertices) for _ in range(len(h.vertices))]
        for e in h.edges:
            for a in e:
                for b in e:
                    if a != b:
                        co[a][b] += 1
        return co

    co1, co2 = comembership(h1), comembership(h2)
    # rarest signatures first
    freq: dict[tuple[int, ...], int] = {}
    for s in sig1:
        freq[s] = freq.get(s, 0) + 1
    order = sorted(range(n), key=lambda v: (freq[sig1[v]], sig1[v], v))
    mapping = [-1] * n
    used = [False] * n
    edge_set2 = {frozenset(e) for e in h2.edges}

    def extend(k: int) -> bool:
        if k == n:
            mapped = {frozenset(mapping[v] for v in e) for e in h1.edges}
            return mapped == edge_set2
        v = order[k]
        for w in range(n):
            if used[w] or sig2[w] != sig1[v]:
                continue
            if any(co1[v][order[i]] != co2[w][mapping[order[i]]] for i in range(k)):
                continue
            mapping[v] = w
            used[w] = True
            if extend(k + 1):
                return True
            used[w] = False
            mapping[v] = -1
        return False

    if extend(0):
        return True, {h1.vertices[v]: h2.vertices[mapping[v]] for v in range(n)}
    return False, None


def verify_isomorphism(h1: Hypergraph, h2: Hypergraph, mapping: dict) -> bool:
    """Check a claimed witness bijection maps hyperedges onto hyperedges."""
    if set(mapping.keys()) != set(h1.vertices):
        return False
    if set(mapping.values()) != set(h2.vertices):
        return False
    if len(set(mapping.values())) != len(mapping):
        return False
    image = {frozenset(mapping[lab] for lab in e) for e in h1.edge_label_sets()}
    target = {frozenset(e) for e in h2.edge_label_sets()}
    return image == target
