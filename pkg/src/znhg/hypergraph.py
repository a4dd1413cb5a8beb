"""Hypergraphs on the subgroups of Z_n.

Two constructions on the proper nontrivial subgroups <d> of Z_n:

* the trivial-intersection hypergraph: vertices are subgroups having a
  partner with trivial intersection (equivalently lcm(d, d') = n), and
  hyperedges are the maximal families of pairwise trivially
  intersecting subgroups;
* the co-maximal hypergraph: same construction with <d><d'> = Z_n,
  which for Z_n reduces to gcd(d, d') = 1 (validated element-wise
  against the group engine in groups.py).

Hyperedges are exactly the maximal cliques of the underlying
compatibility graph, enumerated with pivoted Bron-Kerbosch over
bitmasks and re-sorted into a canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Hashable, Sequence

from .arith import Factorization, exponent_vector, proper_nontrivial_divisors


@dataclass(frozen=True)
class SubgroupOfZn:
    """The subgroup <generator> of Z_n, with 1 < generator < n."""

    generator: int
    exponents: tuple[int, ...]
    order: int


@dataclass(frozen=True)
class Hypergraph:
    """Vertex labels plus a canonical list of maximal hyperedges.

    ``edges`` holds tuples of vertex indices, each sorted ascending, the
    whole list sorted lexicographically.  The empty hypergraph is
    Hypergraph((), ()).
    """

    vertices: tuple[Hashable, ...]
    edges: tuple[tuple[int, ...], ...]

    @property
    def is_empty(self) -> bool:
        return not self.vertices and not self.edges

    def edge_label_sets(self) -> tuple[tuple[Hashable, ...], ...]:
        """Edges as tuples of vertex labels instead of indices."""
        return tuple(tuple(self.vertices[i] for i in e) for e in self.edges)

    def vertex_index(self, label: Hashable) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise KeyError(f"no vertex labelled {label!r}") from None

    def validate(self) -> None:
        """Check the structural invariants; raises ValueError on violation."""
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise ValueError("duplicate vertex labels")
        covered = set()
        seen = set()
        for e in self.edges:
            if len(e) < 2:
                raise ValueError(f"hyperedge {e} has fewer than 2 vertices")
            if list(e) != sorted(set(e)):
                raise ValueError(f"hyperedge {e} not sorted/deduplicated")
            if e[-1] >= n or e[0] < 0:
                raise ValueError(f"hyperedge {e} references unknown vertex")
            seen.add(frozenset(e))
            covered.update(e)
        for a in seen:
            for b in seen:
                if a < b:
                    raise ValueError(f"hyperedge {set(a)} contained in {set(b)}")
        if covered != set(range(n)):
            raise ValueError("some vertex lies on no hyperedge")
        if list(self.edges) != sorted(self.edges):
            raise ValueError("hyperedges not in canonical order")


def canonical_hypergraph(vertices: Sequence[Hashable],
                         edges: Sequence[Sequence[int]]) -> Hypergraph:
    """Build a Hypergraph in canonical form from raw index sets."""
    canon = sorted(tuple(sorted(set(e))) for e in edges)
    return Hypergraph(tuple(vertices), tuple(canon))


def enumerate_maximal_edges(vertex_count: int,
                            compatible: Callable[[int, int], bool]) -> list[tuple[int, ...]]:
    """All maximal cliques of size >= 2 of the given symmetric relation.

    Self-pairs are ignored.  Output is canonical: each clique sorted
    ascending, cliques sorted lexicographically.
    """
    adj = [0] * vertex_count
    for i in range(vertex_count):
        for j in range(i + 1, vertex_count):
            if compatible(i, j):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    cliques: list[int] = []
    if vertex_count:
        _bron_kerbosch_pivot(adj, 0, (1 << vertex_count) - 1, 0, cliques)
    out = []
    for mask in cliques:
        members = _mask_to_tuple(mask)
        if len(members) >= 2:
            out.append(members)
    out.sort()
    return out


def _bron_kerbosch_pivot(adj: list[int], r: int, p: int, x: int,
                         out: list[int]) -> None:
    if p == 0 and x == 0:
        out.append(r)
        return
    # pivot: element of P|X with the most neighbours inside P
    best, pivot_adj = -1, 0
    px = p | x
    while px:
        u = (px & -px).bit_length() - 1
        px &= px - 1
        k = (p & adj[u]).bit_count()
        if k > best:
            best, pivot_adj = k, adj[u]
    cand = p & ~pivot_adj
    while cand:
        bit = cand & -cand
        v = bit.bit_length() - 1
        _bron_kerbosch_pivot(adj, r | bit, p & adj[v], x & adj[v], out)
        p &= ~bit
        x |= bit
        cand &= ~bit


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        bit = mask & -mask
        out.append(bit.bit_length() - 1)
        mask &= mask - 1
    return tuple(out)


def _require_proper_divisor(d: int, f: Factorization) -> None:
    if not (1 < d < f.n) or f.n % d != 0:
        raise ValueError(f"{d} is not a proper nontrivial divisor of {f.n}")


def trivially_intersects(d1: int, d2: int, f: Factorization) -> bool:
    """True iff <d1> and <d2> meet only in the identity, i.e. lcm(d1, d2) = n."""
    _require_proper_divisor(d1, f)
    _require_proper_divisor(d2, f)
    r = exponent_vector(d1, f)
    s = exponent_vector(d2, f)
    return all(max(ri, si) == a for ri, si, a in zip(r, s, f.exponents))


def comaximal(d1: int, d2: int, f: Factorization) -> bool:
    """True iff <d1><d2> = Z_n, i.e. gcd(d1, d2) = 1."""
    _require_proper_divisor(d1, f)
    _require_proper_divisor(d2, f)
    return gcd(d1, d2) == 1


def vertex_set(f: Factorization) -> list[SubgroupOfZn]:
    """Vertices of the trivial-intersection hypergraph, ascending by generator.

    A proper nontrivial <d> qualifies iff its exponent vector attains the
    full exponent in at least one coordinate; empty when omega(n) <= 1.
    """
    if f.omega <= 1:
        return []
    out = []
    alphas = f.exponents
    for d in proper_nontrivial_divisors(f):
        exps = exponent_vector(d, f)
        if any(r == a for r, a in zip(exps, alphas)):
            out.append(SubgroupOfZn(d, exps, f.n // d))
    return out


def comaximal_vertex_generators(f: Factorization) -> list[int]:
    """Divisors d coprime to some other proper nontrivial divisor, ascending."""
    divs = proper_nontrivial_divisors(f)
    return [d for d in divs
            if any(gcd(d, e) == 1 for e in divs if e != d)]


def build_intersection_hypergraph(f: Factorization) -> Hypergraph:
    """The trivial-intersection hypergraph of Z_n on generator labels."""
    verts = vertex_set(f)
    gens = [v.generator for v in verts]
    exps = [v.exponents for v in verts]
    alphas = f.exponents

    def compat(i: int, j: int) -> bool:
        return all(max(ri, si) == a
                   for ri, si, a in zip(exps[i], exps[j], alphas))

    return canonical_hypergraph(gens, enumerate_maximal_edges(len(gens), compat))


def build_comaximal_hypergraph(f: Factorization) -> Hypergraph:
    """The co-maximal hypergraph of Z_n on generator labels."""
    gens = comaximal_vertex_generators(f)

    def compat(i: int, j: int) -> bool:
        return gcd(gens[i], gens[j]) == 1

    return canonical_hypergraph(gens, enumerate_maximal_edges(len(gens), compat))
