"""Canonical forms by colour refinement plus individualisation search.

The search keeps the lexicographically largest relabelled adjacency over all
leaves of the individualisation tree.  Automorphisms found at equal leaves prune
sibling branches (only those fixing the current individualised prefix are used),
and a cell structure whose blocks are all complete or all empty ends the search
early since every completion gives the same code.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph

DEFAULT_CAP = 12


class UnsupportedSizeError(ValueError):
    pass


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple([(row & m).bit_count() for m in masks])
                if sig in groups:
                    groups[sig].append(v)
                else:
                    groups[sig] = [v]
            if len(groups) == 1:
                out.append(cell)
            else:
                out.extend(groups[sig] for sig in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _homogeneous(adj: Sequence[int], cells: list[list[int]]) -> bool:
    masks = [sum(1 << v for v in cell) for cell in cells]
    for cell in cells:
        for m in masks:
            full = bool(adj[cell[0]] & m)
            for v in cell:
                got = adj[v] & m
                if got != (m & ~(1 << v) if full else 0):
                    return False
    return True


def _code(adj: Sequence[int], lab: Sequence[int]) -> tuple[int, ...]:
    n = len(lab)
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    out = []
    for v in lab:
        row, acc = adj[v], 0
        while row:
            low = row & -row
            acc |= 1 << pos[low.bit_length() - 1]
            row ^= low
        out.append(acc)
    return tuple(out)


def _graph6_of_rows(rows: Sequence[int]) -> str:
    n = len(rows)
    out = [chr(63 + n)]
    acc = nbits = 0
    for j in range(1, n):
        row = rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


class _Search:
    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.n = len(adj)
        self.best_code: tuple[int, ...] | None = None
        self.best_lab: list[int] | None = None
        self.first_code: tuple[int, ...] | None = None
        self.first_lab: list[int] | None = None
        self.autos: list[list[int]] = []

    def _leaf(self, lab: list[int]):
        code = _code(self.adj, lab)
        if self.first_code is None:
            self.first_code, self.first_lab = code, lab
        elif code == self.first_code:
            self._record(self.first_lab, lab)
        if self.best_code is None or code > self.best_code:
            self.best_code, self.best_lab = code, lab
        elif code == self.best_code:
            self._record(self.best_lab, lab)

    def _record(self, lab0, lab1):
        gamma = [0] * self.n
        for a, b in zip(lab0, lab1):
            gamma[a] = b
        if any(gamma[v] != v for v in range(self.n)):
            self.autos.append(gamma)

    def _orbit_rep(self, prefix: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.autos:
            if all(gamma[p] == p for p in prefix):
                for v in range(self.n):
                    a, b = find(v), find(gamma[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def run(self, cells: list[list[int]], prefix: list[int]):
        cells = _refine(self.adj, cells)
        if all(len(c) == 1 for c in cells):
            self._leaf([c[0] for c in cells])
            return
        if _homogeneous(self.adj, cells):
            self._leaf([v for c in cells for v in c])
            return
        t = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[t]
        done_roots: set[int] = set()
        for v in target:
            rep = self._orbit_rep(prefix)
            if any(rep[v] == rep[u] for u in done_roots):
                continue
            child = cells[:t] + [[v], [u for u in target if u != v]] + cells[t + 1:]
            self.run(child, prefix + [v])
            done_roots.add(v)


def _search(adj: Sequence[int], colors, cap) -> _Search:
    n = len(adj)
    if cap is not None and n > cap:
        raise UnsupportedSizeError(f"canonical form supports n <= {cap}, got n={n}")
    if colors is None:
        cells = [list(range(n))]
    else:
        by_colour: dict[int, list[int]] = {}
        for v in range(n):
            by_colour.setdefault(colors[v], []).append(v)
        cells = [by_colour[c] for c in sorted(by_colour)]
    search = _Search(adj)
    if n:
        search.run(cells, [])
    else:
        search.best_lab, search.best_code = [], ()
    return search


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None, cap: int | None = DEFAULT_CAP) -> list[int]:
    """Vertex order (position -> vertex) of the canonical relabelling."""
    return _search(g.adj, colors, cap).best_lab


def canonical_graph(g: Graph, colors: Sequence[int] | None = None, cap: int | None = DEFAULT_CAP) -> Graph:
    lab = canonical_labeling(g, colors, cap)
    perm = [0] * g.n
    for i, v in enumerate(lab):
        perm[v] = i
    return g.relabel(perm)


def canonical_form(g: Graph, colors: Sequence[int] | None = None, cap: int | None = DEFAULT_CAP) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (colour-preserving if colours given).

    The string is the graph6 encoding of the canonical relabelling, followed by the
    colour sequence when colours are given.
    """
    return canonical_form_adj(g.adj, colors, cap)


def canonical_form_adj(adj: Sequence[int], colors: Sequence[int] | None = None, cap: int | None = DEFAULT_CAP) -> bytes:
    """:func:`canonical_form` on a raw bitmask adjacency list."""
    search = _search(adj, colors, cap)
    key = _graph6_of_rows(search.best_code)
    if colors is not None:
        key += "|" + ",".join(str(colors[v]) for v in search.best_lab)
    return key.encode("ascii")


def are_isomorphic(g: Graph, h: Graph, cap: int | None = DEFAULT_CAP) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(map(int.bit_count, g.adj)) != sorted(map(int.bit_count, h.adj)):
        return False
    return canonical_form(g, cap=cap) == canonical_form(h, cap=cap)
