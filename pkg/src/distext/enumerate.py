"""Isomorph-free enumeration of small graphs and balanced bipartite graphs.

Graphs of order m are grown from order m-1 by adding one vertex with every
possible neighbourhood and keeping one representative per canonical form.
Balanced bipartite graphs are grown row by row on a fixed column side with a
colour-preserving canonical form, then deduplicated under part swap.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator

from .graph import Graph, is_connected, parse_graph6, read_graph6_lines
from .iso import UnsupportedSizeError, canonical_form, canonical_form_adj

log = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 8
LARGE_MAX_ORDER = 10
BIPARTITE_MAX_ORDER = 12

# Connected graphs by order (OEIS A001349), used as a self-check.
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080, 10: 11716571}


def _sort_key(item):
    key, g = item
    return (g.num_edges, key)


@lru_cache(maxsize=None)
def all_graphs(order: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class of graphs of this order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order == 0:
        return (Graph(0, ()),)
    parents = all_graphs(order - 1)
    seen: dict[bytes, Graph] = {}
    m = order - 1
    for idx, p in enumerate(parents):
        for nbhd in range(1 << m):
            adj = [row | ((nbhd >> v & 1) << m) for v, row in enumerate(p.adj)]
            adj.append(nbhd)
            key = canonical_form_adj(adj, cap=None)
            if key not in seen:
                seen[key] = parse_graph6(key.decode())
        if order >= 8 and idx % 200 == 0:
            log.info("order %d: %d/%d parents, %d classes", order, idx, len(parents), len(seen))
    return tuple(g for _, g in sorted(seen.items(), key=_sort_key))


def enumerate_connected(order: int, allow_large: bool = False) -> Iterator[Graph]:
    """Connected graphs of the given order, one per isomorphism class.

    Orders above 8 need ``allow_large`` (order 10 takes hours); beyond 10 use a graph6 file.
    """
    cap = LARGE_MAX_ORDER if allow_large else DEFAULT_MAX_ORDER
    if order > cap:
        raise UnsupportedSizeError(
            f"built-in enumeration supports order <= {cap}"
            + ("" if allow_large else " (pass allow_large for up to 10)")
            + "; supply a graph6 file instead"
        )
    if order < 1:
        raise ValueError("order must be >= 1")
    return (g for g in all_graphs(order) if is_connected(g))


@lru_cache(maxsize=None)
def _bipartite_rows(rows: int, cols: int) -> tuple[Graph, ...]:
    """Bipartite graphs with ``cols`` column vertices (0..cols-1) then ``rows`` row vertices, up to
    row and column permutations."""
    if rows == 0:
        return (Graph(cols, (0,) * cols),)
    seen: dict[bytes, Graph] = {}
    new = cols + rows - 1
    colours = [1] * cols + [0] * rows
    for p in _bipartite_rows(rows - 1, cols):
        for nbhd in range(1 << cols):
            adj = [row | ((nbhd >> v & 1) << new) if v < cols else row for v, row in enumerate(p.adj)]
            adj.append(nbhd)
            key = canonical_form_adj(adj, colours, cap=None)
            if key not in seen:
                seen[key] = Graph(new + 1, tuple(adj))
    return tuple(g for _, g in sorted(seen.items(), key=_sort_key))


@lru_cache(maxsize=None)
def _balanced_bipartite(order: int) -> tuple[Graph, ...]:
    m = order // 2
    seen: dict[bytes, Graph] = {}
    # relabel so the row side U comes first: rows -> 0..m-1, columns -> m..2m-1
    perm = [m + v for v in range(m)] + list(range(m))
    for g in _bipartite_rows(m, m):
        if not is_connected(g):
            continue
        key = canonical_form(g, cap=None)
        if key not in seen:
            h = g.relabel(perm)
            seen[key] = h.with_bipartition(range(m), range(m, 2 * m))
    return tuple(g for _, g in sorted(seen.items(), key=_sort_key))


def enumerate_connected_balanced_bipartite(order: int) -> Iterator[Graph]:
    """Connected balanced bipartite graphs of the given (even) order, each with bipartition ``(0..m-1, m..2m-1)``."""
    if order % 2:
        raise ValueError("balanced bipartite graphs have even order")
    if order < 2:
        raise ValueError("order must be >= 2")
    if order > BIPARTITE_MAX_ORDER:
        raise UnsupportedSizeError(f"built-in bipartite enumeration supports order <= {BIPARTITE_MAX_ORDER}")
    return iter(_balanced_bipartite(order))


def read_graph6_file(path, dedup: bool = False) -> Iterator[Graph]:
    """Graphs from a graph6 file (one per line); optionally drop isomorphic repeats."""
    with open(Path(path)) as fh:
        graphs: Iterable[Graph] = list(read_graph6_lines(fh))
    if not dedup:
        return iter(graphs)
    seen: set[bytes] = set()
    out = []
    for g in graphs:
        key = canonical_form(g, cap=None)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return iter(out)
