"""Maximum matchings (Edmonds blossom, Hopcroft-Karp), odd components, Tutte-Berge."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graph import Graph, _bits, component_masks
from .iso import UnsupportedSizeError


@dataclass(frozen=True)
class Matching:
    edges: frozenset[tuple[int, int]]

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def __len__(self) -> int:
        return len(self.edges)

    @classmethod
    def from_mate(cls, mate: list[int]) -> "Matching":
        return cls(frozenset((v, mate[v]) for v in range(len(mate)) if v < mate[v]))

    def is_valid_for(self, g: Graph) -> bool:
        seen: set[int] = set()
        for u, v in self.edges:
            if not g.has_edge(u, v) or u in seen or v in seen:
                return False
            seen.update((u, v))
        return True


def blossom_mate(g: Graph) -> list[int]:
    """Edmonds' algorithm; returns ``mate`` with -1 for exposed vertices.

    Blossoms are contracted implicitly through the ``base`` array; roots are
    scanned in index order so the result is deterministic.
    """
    n = g.n
    nbrs = [list(_bits(g.adj[v])) for v in range(n)]
    mate = [-1] * n
    for root in range(n):
        if mate[root] != -1:
            continue
        end, parent = _augmenting_path(nbrs, mate, root)
        v = end
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = nxt
    return mate


def _augmenting_path(nbrs, mate, root):
    n = len(nbrs)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v, b, child, in_blossom):
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in nbrs[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                in_blossom = [False] * n
                mark_path(v, cur, to, in_blossom)
                mark_path(to, cur, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent
                used[mate[to]] = True
                queue.append(mate[to])
    return -1, parent


def hopcroft_karp_mate(g: Graph) -> list[int]:
    """Layered augmenting paths from part U of ``g.bipartition``."""
    if g.bipartition is None:
        raise ValueError("hopcroft_karp_mate needs a bipartition")
    left = g.bipartition[0]
    nbrs = {u: list(_bits(g.adj[u])) for u in left}
    mate = [-1] * g.n
    INF = float("inf")

    while True:
        dist: dict[int, float] = {}
        queue = deque()
        for u in left:
            if mate[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = INF
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for w in nbrs[u]:
                m = mate[w]
                if m == -1:
                    found = min(found, dist[u] + 1)
                elif dist[m] == INF:
                    dist[m] = dist[u] + 1
                    queue.append(m)
        if found == INF:
            return mate

        def dfs(u):
            for w in nbrs[u]:
                m = mate[w]
                if (m == -1 and dist[u] + 1 == found) or (m != -1 and dist[m] == dist[u] + 1 and dfs(m)):
                    mate[u], mate[w] = w, u
                    return True
            dist[u] = INF
            return False

        for u in left:
            if mate[u] == -1:
                dfs(u)


def max_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching; Hopcroft-Karp when a bipartition is known, else blossom."""
    mate = hopcroft_karp_mate(g) if g.bipartition is not None else blossom_mate(g)
    return Matching.from_mate(mate)


def matching_number(g: Graph) -> int:
    return len(max_matching(g))


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    return 2 * matching_number(g) == g.n


def odd_components(g: Graph, s=()) -> int:
    """o(G - S): components of odd order after deleting ``s``."""
    keep = ((1 << g.n) - 1) & ~sum(1 << v for v in set(s))
    return odd_components_mask(g, keep)


def odd_components_mask(g: Graph, keep: int) -> int:
    return sum(1 for c in component_masks(g, keep) if c.bit_count() & 1)


# -- exhaustive oracles ------------------------------------------------------------


def brute_force_matching_number(g: Graph) -> int:
    """Maximum matching size by exhaustive backtracking over the lowest uncovered vertex.

    Independent of the augmenting-path code; used as the oracle in tests.
    """
    return _subset_matching_numbers(g)[(1 << g.n) - 1]


@lru_cache(maxsize=4096)
def _subset_matching_numbers(g: Graph) -> tuple[int, ...]:
    # nu[mask] = matching number of G[mask]; mask's lowest vertex is left bare or matched.
    nu = [0] * (1 << g.n)
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        best = nu[rest]
        for u in _bits(g.adj[v] & rest):
            cand = 1 + nu[rest & ~(1 << u)]
            if cand > best:
                best = cand
        nu[mask] = best
    return tuple(nu)


def subset_matching_numbers(g: Graph) -> tuple[int, ...]:
    """Matching number of every induced subgraph, indexed by vertex bitmask (n <= 16)."""
    if g.n > 16:
        raise UnsupportedSizeError("subset table limited to n <= 16")
    return _subset_matching_numbers(g)


def tutte_berge_deficiency(g: Graph) -> tuple[int, tuple[int, ...]]:
    """max over S of o(G-S) - |S|, with the first maximising S in (size, lexicographic) order."""
    best, arg = None, ()
    full = (1 << g.n) - 1
    for r in range(g.n + 1):
        for s in combinations(range(g.n), r):
            val = odd_components_mask(g, full & ~sum(1 << v for v in s)) - r
            if best is None or val > best:
                best, arg = val, s
    return best, arg


def tutte_berge_check(g: Graph, cap: int = 12) -> bool:
    if g.n > cap:
        raise UnsupportedSizeError(f"Tutte-Berge scan limited to n <= {cap}")
    deficiency, _ = tutte_berge_deficiency(g)
    return 2 * matching_number(g) == g.n - deficiency
