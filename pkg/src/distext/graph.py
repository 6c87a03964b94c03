"""Simple undirected graphs, the join/union/diamond operators and the extremal families.

Vertices are ``0..n-1``; adjacency is stored as one integer bitmask per vertex.
Family constructors lay blocks out in the order they appear in the written
expression, so ``join(K_2k, union(K_m, K_1))`` puts the clique first, then the
``K_m`` block, then the pendant part.  Equitable partitions of these graphs are
therefore contiguous index ranges.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class ParameterRangeWarning(UserWarning):
    """Family parameters lie outside the range where the theorems apply."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        if self.bipartition is not None:
            left, right = self.bipartition
            lm, rm = _mask(left), _mask(right)
            if lm & rm or (lm | rm) != full or len(left) + len(right) != self.n:
                raise ValueError("bipartition must split the vertex set into two disjoint parts")
            for v in left:
                if self.adj[v] & lm:
                    raise ValueError(f"edge inside part U at vertex {v}")
            for v in right:
                if self.adj[v] & rm:
                    raise ValueError(f"edge inside part W at vertex {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], bipartition=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if bipartition is not None:
            bipartition = (tuple(sorted(bipartition[0])), tuple(sorted(bipartition[1])))
        return cls(n, tuple(adj), bipartition)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.adj[v] & ((1 << v) - 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def add_edge(self, u: int, v: int) -> "Graph":
        """Return a copy with the edge ``uv`` added; the bipartition is kept only if still valid."""
        if u == v:
            raise ValueError("self-loop")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        bip = self.bipartition
        if bip is not None and (u in bip[0]) == (v in bip[0]):
            bip = None
        return Graph(self.n, tuple(adj), bip)

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.adj[u] >> v & 1]

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled ``0..m-1`` in increasing order."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        kmask = _mask(keep)
        adj = tuple(sum(1 << pos[u] for u in _bits(self.adj[v] & kmask)) for v in keep)
        bip = None
        if self.bipartition is not None:
            bip = tuple(tuple(pos[v] for v in part if v in pos) for part in self.bipartition)
        return Graph(len(keep), adj, bip)

    def remove(self, vertices: Iterable[int]) -> "Graph":
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            adj[perm[v]] = sum(1 << perm[u] for u in _bits(self.adj[v]))
        bip = None
        if self.bipartition is not None:
            bip = tuple(tuple(sorted(perm[v] for v in part)) for part in self.bipartition)
        return Graph(self.n, tuple(adj), bip)

    def with_bipartition(self, left: Iterable[int], right: Iterable[int]) -> "Graph":
        return Graph(self.n, self.adj, (tuple(sorted(left)), tuple(sorted(right))))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges}, g6={write_graph6(self)!r})"


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# -- operators ---------------------------------------------------------------


def complete(m: int) -> Graph:
    full = (1 << m) - 1
    return Graph(m, tuple(full & ~(1 << v) for v in range(m)))


def empty(m: int) -> Graph:
    return Graph(m, (0,) * m)


def union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    adj = g.adj + tuple(row << shift for row in h.adj)
    bip = None
    if g.bipartition is not None and h.bipartition is not None:
        bip = (
            g.bipartition[0] + tuple(v + shift for v in h.bipartition[0]),
            g.bipartition[1] + tuple(v + shift for v in h.bipartition[1]),
        )
    return Graph(g.n + h.n, adj, bip)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between ``V(g)`` and ``V(h)``.

    When both sides are edgeless the result is complete bipartite and carries the
    bipartition ``(V(g), V(h))``.
    """
    shift = g.n
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << shift
    adj = tuple(row | hmask for row in g.adj) + tuple((row << shift) | gmask for row in h.adj)
    bip = None
    if g.num_edges == 0 and h.num_edges == 0:
        bip = (tuple(range(g.n)), tuple(range(shift, shift + h.n)))
    return Graph(g.n + h.n, adj, bip)


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    out = empty(0)
    for g in graphs:
        out = union(out, g)
    return out


def diamond(a: int, b: int, c: int, d: int) -> Graph:
    """K_{a,b} ⋄ K_{c,d}: two complete bipartite graphs plus all b-part/c-part edges.

    Layout is ``a | b | c | d``; the bipartition is ``(a ∪ c, b ∪ d)``.
    """
    if min(a, b, c, d) < 0:
        raise ValueError("part sizes must be nonnegative")
    if a + b + c + d < 1:
        raise ValueError("diamond needs at least one vertex")
    A = range(0, a)
    B = range(a, a + b)
    C = range(a + b, a + b + c)
    D = range(a + b + c, a + b + c + d)
    edges = [(x, y) for x in A for y in B]
    edges += [(x, y) for x in B for y in C]
    edges += [(x, y) for x in C for y in D]
    return Graph.from_edges(a + b + c + d, edges, (list(A) + list(C), list(B) + list(D)))


def configuration(s: int, parts: Sequence[int]) -> Graph:
    """K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_p})."""
    if s < 1 or len(parts) < 1 or any(p < 0 for p in parts):
        raise ValueError("configuration needs s >= 1, at least one part, nonnegative sizes")
    return join(complete(s), disjoint_union(complete(p) for p in parts))


def extremal_general(n: int, k: int) -> Graph:
    """K_{2k} ∨ (K_{2n-2k-1} ∪ K_1) on 2n vertices: not k-extendable, minimal radius."""
    if not (k >= 1 and n >= k + 1):
        warnings.warn(f"extremal-general({n},{k}) outside k>=1, n>=k+1", ParameterRangeWarning, stacklevel=2)
    return configuration(2 * k, [2 * n - 2 * k - 1, 1])


def extremal_bipartite(n: int, k: int) -> Graph:
    """K_{n-k,n-1} ⋄ K_{k,1} on 2n vertices."""
    if not (k >= 1 and n >= k + 1):
        warnings.warn(f"extremal-bipartite({n},{k}) outside k>=1, n>=k+1", ParameterRangeWarning, stacklevel=2)
    return diamond(n - k, n - 1, k, 1)


def extremal_factor_critical(n: int, k: int) -> Graph:
    """K_k ∨ (K_{n-k-1} ∪ K_1) on n vertices."""
    if not (k >= 1 and n >= k + 2 and (n - k) % 2 == 0):
        warnings.warn(
            f"extremal-factor-critical({n},{k}) outside k>=1, n>=k+2, n≡k (mod 2)",
            ParameterRangeWarning,
            stacklevel=2,
        )
    return configuration(k, [n - k - 1, 1])


def general_family(n: int, k: int, s: int) -> Graph:
    """K_s ∨ (K_{2n-2s+2k-1} ∪ (s-2k+1)K_1); equals extremal_general(n, k) at s = 2k."""
    return configuration(s, [2 * n - 2 * s + 2 * k - 1] + [1] * (s - 2 * k + 1))


def bipartite_family(n: int, k: int, s: int) -> Graph:
    """K_{s,s+k-1} ⋄ K_{n-s,n-s-k+1}; at s = 1 this is the extremal bipartite graph up to isomorphism."""
    return diamond(s, s + k - 1, n - s, n - s - k + 1)


# -- family specs --------------------------------------------------------------

FAMILY_KINDS = (
    "join",
    "union",
    "complete",
    "empty",
    "diamond",
    "extremal-general",
    "extremal-bipartite",
    "extremal-factor-critical",
    "configuration",
)


@dataclass(frozen=True)
class GraphFamilySpec:
    """A named graph family plus its integer parameters.

    ``join``/``union`` take a flat list of complete-graph orders, e.g.
    ``join [2, 3]`` is ``K_2 ∨ K_3``.  ``configuration`` takes ``[s, n_1, ..., n_p]``;
    ``extremal-*`` take ``[n, k]``; ``diamond`` takes ``[a, b, c, d]``.
    """

    kind: str
    parameters: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if any(p < 0 for p in self.parameters):
            raise ValueError("family parameters must be nonnegative")


def build(spec: GraphFamilySpec) -> Graph:
    kind, p = spec.kind, list(spec.parameters)

    def need(count):
        if len(p) != count:
            raise ValueError(f"{kind} takes {count} parameters, got {len(p)}")

    if kind == "complete":
        need(1)
        return complete(p[0])
    if kind == "empty":
        need(1)
        return empty(p[0])
    if kind == "join":
        if not p:
            raise ValueError("join needs at least one block")
        out = complete(p[0])
        for m in p[1:]:
            out = join(out, complete(m))
        return out
    if kind == "union":
        return disjoint_union(complete(m) for m in p)
    if kind == "diamond":
        need(4)
        return diamond(*p)
    if kind == "configuration":
        if len(p) < 2 or p[0] < 1:
            raise ValueError("configuration takes [s, n_1, ..., n_p] with s >= 1, p >= 1")
        return configuration(p[0], p[1:])
    need(2)
    if kind == "extremal-general":
        return extremal_general(*p)
    if kind == "extremal-bipartite":
        return extremal_bipartite(*p)
    return extremal_factor_critical(*p)


# -- connectivity ----------------------------------------------------------------


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Vertex bitmasks of the connected components of the subgraph induced on ``within``."""
    rest = (1 << g.n) - 1 if within is None else within
    comps = []
    while rest:
        seed = rest & -rest
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(component_masks(g)) == 1


def two_coloring(g: Graph) -> tuple[list[int], list[int]] | None:
    """A proper 2-colouring as ``(colour-0 vertices, colour-1 vertices)``, or None if not bipartite."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in _bits(g.adj[v]):
                if colour[u] < 0:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
    return [v for v in range(g.n) if colour[v] == 0], [v for v in range(g.n) if colour[v] == 1]


# -- graph6 ------------------------------------------------------------------------


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def write_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 short form supports at most 62 vertices")
    out = [chr(63 + g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(">>graph6<<"):
        s = s[10:]
        base = 10
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid character {ch!r}", base + i)
    if s[0] == "~":
        raise Graph6Error("graphs with more than 62 vertices are not supported", base)
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = s[1:]
    if len(payload) < need:
        raise Graph6Error(f"truncated payload: expected {need} data bytes, got {len(payload)}", base + 1 + len(payload))
    if len(payload) > need:
        raise Graph6Error(f"trailing data after {need} data bytes", base + 1 + need)
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(payload[pos // 6]) - 63
            if byte >> (5 - pos % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    if need and pos % 6:
        pad = (ord(payload[-1]) - 63) & ((1 << (6 - pos % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits", base + need)
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]):
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)
