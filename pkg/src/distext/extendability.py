"""Deciders for k-extendability and k-factor-criticality, with re-checkable witnesses.

Every decider returns an :class:`ExtendabilityVerdict`.  Graphs that contain no
k-matching at all are reported as ``holds=False`` with witness kind
``"no-k-matching"`` so callers can tally them separately.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import Graph, _bits, _mask, component_masks
from .iso import UnsupportedSizeError
from .matching import has_perfect_matching, matching_number, odd_components_mask, subset_matching_numbers

SUBSET_SCAN_CAP = 12

NO_K_MATCHING = "no-k-matching"


@dataclass(frozen=True)
class Witness:
    kind: str  # tutte-set | hall-set | bad-matching | bad-set | parity | no-k-matching
    vertices: tuple[int, ...] = ()
    edges: tuple[tuple[int, int], ...] = ()

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.edges:
            out["edges"] = [list(e) for e in self.edges]
        else:
            out["vertices"] = list(self.vertices)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class ExtendabilityVerdict:
    k: int
    holds: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.holds

    @property
    def no_k_matching(self) -> bool:
        return self.witness is not None and self.witness.kind == NO_K_MATCHING


def _parity(k):
    return ExtendabilityVerdict(k, False, Witness("parity"))


def _no_matching(k):
    return ExtendabilityVerdict(k, False, Witness(NO_K_MATCHING))


def k_matchings(g: Graph, k: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All k-matchings as tuples of edges, edges taken in increasing (larger endpoint, smaller endpoint) order."""
    edges = sorted(g.edges(), key=lambda e: (e[1], e[0]))

    def rec(start, used, chosen):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for i in range(start, len(edges) - (k - len(chosen)) + 1):
            u, v = edges[i]
            if used >> u & 1 or used >> v & 1:
                continue
            chosen.append((u, v))
            yield from rec(i + 1, used | (1 << u) | (1 << v), chosen)
            chosen.pop()

    yield from rec(0, 0, [])


def is_k_extendable_direct(g: Graph, k: int) -> ExtendabilityVerdict:
    """Every k-matching extends to a perfect matching (checked one k-matching at a time)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if g.n % 2:
        return _parity(k)
    if k == 0:
        if has_perfect_matching(g):
            return ExtendabilityVerdict(0, True)
        return ExtendabilityVerdict(0, False, Witness("bad-matching"))
    if matching_number(g) < k:
        return _no_matching(k)
    full = (1 << g.n) - 1
    cache: dict[int, bool] = {}
    for mk in k_matchings(g, k):
        rest = full & ~_mask(v for e in mk for v in e)
        ok = cache.get(rest)
        if ok is None:
            ok = cache[rest] = has_perfect_matching(g.induced(_bits(rest)))
        if not ok:
            return ExtendabilityVerdict(k, False, Witness("bad-matching", edges=mk))
    return ExtendabilityVerdict(k, True)


def _subsets_by_size(n: int, lo: int = 0, hi: int | None = None):
    hi = n if hi is None else hi
    for r in range(lo, hi + 1):
        yield from combinations(range(n), r)


def is_k_extendable_tutte(g: Graph, k: int) -> ExtendabilityVerdict:
    """o(G - S) <= |S| - 2k for every S whose induced subgraph has a k-matching."""
    if g.n > SUBSET_SCAN_CAP:
        raise UnsupportedSizeError(f"Tutte-type scan limited to n <= {SUBSET_SCAN_CAP}")
    if g.n % 2:
        return _parity(k)
    nu = subset_matching_numbers(g)
    full = (1 << g.n) - 1
    if nu[full] < k:
        return _no_matching(k)
    for s in _subsets_by_size(g.n, 2 * k):
        mask = _mask(s)
        if nu[mask] < k:
            continue
        if odd_components_mask(g, full & ~mask) > len(s) - 2 * k:
            return ExtendabilityVerdict(k, False, Witness("tutte-set", vertices=s))
    return ExtendabilityVerdict(k, True)


def _require_bipartition(g: Graph):
    if g.bipartition is None:
        raise ValueError("graph has no bipartition")
    return g.bipartition


def is_k_extendable_hall(g: Graph, k: int) -> ExtendabilityVerdict:
    """|U| = |W| and |N(X)| >= |X| + k for every nonempty X ⊆ U with |X| <= |U| - k."""
    left, right = _require_bipartition(g)
    if len(left) != len(right):
        return _parity(k)
    if k >= 1 and matching_number(g) < k:
        return _no_matching(k)
    for r in range(1, len(left) - k + 1):
        for xs in combinations(left, r):
            nbhd = 0
            for v in xs:
                nbhd |= g.adj[v]
            if nbhd.bit_count() < r + k:
                return ExtendabilityVerdict(k, False, Witness("hall-set", vertices=xs))
    return ExtendabilityVerdict(k, True)


def is_k_extendable_deletion(g: Graph, k: int) -> ExtendabilityVerdict:
    """G minus any k vertices of U and any k of W has a perfect matching."""
    left, right = _require_bipartition(g)
    if len(left) != len(right):
        return _parity(k)
    if k >= 1 and matching_number(g) < k:
        return _no_matching(k)
    for us in combinations(left, k):
        for ws in combinations(right, k):
            if not has_perfect_matching(g.remove(us + ws)):
                return ExtendabilityVerdict(k, False, Witness("bad-set", vertices=tuple(sorted(us + ws))))
    return ExtendabilityVerdict(k, True)


def is_k_factor_critical(g: Graph, k: int) -> ExtendabilityVerdict:
    """G - S has a perfect matching for every k-subset S."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if (g.n - k) % 2 or k > g.n:
        return _parity(k)
    for s in combinations(range(g.n), k):
        if not has_perfect_matching(g.remove(s)):
            return ExtendabilityVerdict(k, False, Witness("bad-set", vertices=s))
    return ExtendabilityVerdict(k, True)


def is_k_factor_critical_tutte(g: Graph, k: int) -> ExtendabilityVerdict:
    """n ≡ k (mod 2) and o(G - S) <= |S| - k for all |S| >= k."""
    if g.n > SUBSET_SCAN_CAP:
        raise UnsupportedSizeError(f"Tutte-type scan limited to n <= {SUBSET_SCAN_CAP}")
    if (g.n - k) % 2 or k > g.n:
        return _parity(k)
    full = (1 << g.n) - 1
    for s in _subsets_by_size(g.n, k):
        if odd_components_mask(g, full & ~_mask(s)) > len(s) - k:
            return ExtendabilityVerdict(k, False, Witness("tutte-set", vertices=s))
    return ExtendabilityVerdict(k, True)


def recheck_witness(g: Graph, verdict: ExtendabilityVerdict, mode: str = "extendable") -> bool:
    """Recompute the violated condition from the witness alone; True iff the violation reproduces.

    ``mode`` is ``"extendable"`` or ``"factor-critical"`` and selects the inequality a
    ``tutte-set`` witness is checked against.
    """
    if verdict.holds or verdict.witness is None:
        return False
    w, k = verdict.witness, verdict.k
    full = (1 << g.n) - 1
    if w.kind == "parity":
        if g.bipartition is not None and mode == "extendable" and g.n % 2 == 0:
            return len(g.bipartition[0]) != len(g.bipartition[1])
        if mode == "factor-critical":
            return k > g.n or (g.n - k) % 2 == 1
        return g.n % 2 == 1
    if w.kind == NO_K_MATCHING:
        return matching_number(g) < k
    if w.kind == "tutte-set":
        s = w.vertices
        odd = odd_components_mask(g, full & ~_mask(s))
        if mode == "factor-critical":
            return len(s) >= k and odd > len(s) - k
        has_k = matching_number(g.induced(s)) >= k
        return has_k and odd > len(s) - 2 * k
    if w.kind == "hall-set":
        left = set(g.bipartition[0])
        xs = w.vertices
        nbhd = 0
        for v in xs:
            nbhd |= g.adj[v]
        return set(xs) <= left and 1 <= len(xs) <= len(left) - k and nbhd.bit_count() < len(xs) + k
    if w.kind == "bad-matching":
        if not w.edges:
            return not has_perfect_matching(g)
        covered = [v for e in w.edges for v in e]
        valid = len(set(covered)) == 2 * len(w.edges) == 2 * k and all(g.has_edge(u, v) for u, v in w.edges)
        return valid and not has_perfect_matching(g.remove(covered))
    if w.kind == "bad-set":
        return not has_perfect_matching(g.remove(w.vertices))
    return False


def odd_component_sizes(g: Graph, s) -> list[int]:
    keep = ((1 << g.n) - 1) & ~_mask(s)
    return sorted(c.bit_count() for c in component_masks(g, keep) if c.bit_count() & 1)
