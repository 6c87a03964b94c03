"""Exhaustive and family-based verification of the extremal results, with JSON reports.

Each ``verify_*`` function returns a :class:`VerificationReport`.  Equality
cases are always decided by canonical form; radii only decide strict order, and
radii within :data:`COMPARISON_MARGIN` of each other are recomputed at a
tighter tolerance before being called ties.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Callable, Iterable, Sequence

import numpy as np

from .enumerate import enumerate_connected, enumerate_connected_balanced_bipartite
from .extendability import is_k_extendable_direct, is_k_factor_critical
from .graph import (
    Graph,
    bipartite_family,
    configuration,
    extremal_bipartite,
    extremal_factor_critical,
    extremal_general,
    general_family,
    is_connected,
    two_coloring,
    write_graph6,
)
from .iso import canonical_form
from .spectrum import (
    COMPARISON_MARGIN,
    REFINED_TOL,
    block_parts,
    distance_matrix,
    graph_radius,
    charpoly_matches_closed_form,
    closed_form_polynomial,
    perron_part_values,
    poly_eval,
    poly_mul,
    poly_sub,
    spectral_radius,
)

log = logging.getLogger(__name__)

LEMMA_PF_MIN_DROP = 1e-8
PERRON_CONSTANCY_TOL = 1e-8


@dataclass
class VerificationReport:
    suite: str
    parameters: dict
    graphs_scanned: int = 0
    failures: list[dict] = field(default_factory=list)
    minimizer: dict | None = None
    notes: dict = field(default_factory=dict)
    rows: list[tuple[str, float, bool]] = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, graph: Graph | str | None, reason: str, margin: float | None = None):
        g6 = write_graph6(graph) if isinstance(graph, Graph) else graph
        self.failures.append({"graph6": g6, "reason": reason, "margin": margin})

    def to_dict(self) -> dict:
        out = {
            "suite": self.suite,
            "parameters": self.parameters,
            "graphs_scanned": self.graphs_scanned,
            "failures": self.failures,
            "minimizer": self.minimizer,
            "passed": self.passed,
        }
        if self.notes:
            out["notes"] = self.notes
        return out

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def rows_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph6", "radius", "property_holds"])
        for g6, r, holds in self.rows:
            w.writerow([g6, repr(r), int(holds)])
        return buf.getvalue()


# -- per-graph evaluation (picklable for worker pools) ---------------------------------

_DECIDERS: dict[str, Callable[[Graph, int], object]] = {
    "extendable": is_k_extendable_direct,
    "factor-critical": is_k_factor_critical,
}


def _evaluate(args) -> tuple[float, bool, bool]:
    g, prop, k = args
    verdict = _DECIDERS[prop](g, k)
    return graph_radius(g), verdict.holds, verdict.no_k_matching


def _evaluate_all(graphs: Sequence[Graph], prop: str, k: int, jobs: int) -> list[tuple[float, bool, bool]]:
    tasks = [(g, prop, k) for g in graphs]
    if jobs <= 1:
        out = []
        for i, t in enumerate(tasks):
            out.append(_evaluate(t))
            if i and i % 2000 == 0:
                log.info("evaluated %d/%d graphs", i, len(tasks))
        return out
    with get_context("fork").Pool(jobs) as pool:
        return pool.map(_evaluate, tasks, chunksize=max(1, len(tasks) // (8 * jobs)))


def _minimizer_scan(report: VerificationReport, graphs: Iterable[Graph], prop: str, k: int, extremal: Graph, jobs: int):
    graphs = list(graphs)
    results = _evaluate_all(graphs, prop, k, jobs)
    report.graphs_scanned = len(graphs)
    report.rows = [(write_graph6(g), r, holds) for g, (r, holds, _) in zip(graphs, results)]

    excluded = sum(1 for _, _, nokm in results if nokm)
    pool = [(r, g) for g, (r, holds, nokm) in zip(graphs, results) if not holds and not nokm]
    report.notes["pool_size"] = len(pool)
    if prop == "extendable":
        report.notes["excluded_no_k_matching"] = excluded

    ext_key = canonical_form(extremal, cap=None)
    ext_verdict = _DECIDERS[prop](extremal, k)
    if ext_verdict.holds:
        report.fail(extremal, f"extremal graph satisfies the property (k={k})")
    ext_radius = graph_radius(extremal, REFINED_TOL)
    if not pool:
        report.fail(None, "no graph in the scan violates the property")
        return

    pool.sort(key=lambda t: t[0])
    near = [(r, g) for r, g in pool if r <= pool[0][0] + COMPARISON_MARGIN or r <= ext_radius + COMPARISON_MARGIN]
    keyed = []
    for r, g in near:
        keyed.append((graph_radius(g, REFINED_TOL), canonical_form(g, cap=None), g))
    keyed.sort(key=lambda t: (t[0], t[1]))
    found = [t for t in keyed if t[1] == ext_key]
    if not found:
        report.fail(extremal, "extremal graph not found among the violating graphs")
    for r, key, g in keyed:
        if key == ext_key:
            continue
        delta = r - ext_radius
        if delta < -COMPARISON_MARGIN:
            report.fail(g, "violating graph with smaller radius than the extremal graph", delta)
        elif delta <= COMPARISON_MARGIN:
            report.fail(g, "violating graph ties the extremal radius", delta)

    best_r, best_key, best_g = keyed[0]
    runner = None
    for r, g in pool:
        if canonical_form(g, cap=None) != best_key:
            runner = r if r > best_r + COMPARISON_MARGIN else graph_radius(g, REFINED_TOL)
            break
    gap = None if runner is None else runner - best_r
    report.minimizer = {
        "graph6": write_graph6(best_g),
        "radius": best_r,
        "runner_up": runner,
        "gap": gap,
        "is_extremal": best_key == ext_key,
    }
    if best_key != ext_key:
        report.fail(best_g, "minimiser is not isomorphic to the extremal graph", best_r - ext_radius)
    if gap is not None and gap <= COMPARISON_MARGIN:
        report.fail(best_g, "minimiser gap does not exceed the comparison margin", gap)


def verify_theorem1(n: int, k: int, graphs: Iterable[Graph] | None = None, jobs: int = 1) -> VerificationReport:
    """Among connected non-k-extendable graphs of order 2n, K_2k ∨ (K_{2n-2k-1} ∪ K_1) uniquely minimises ∂."""
    if k < 1 or n < k + 1:
        raise ValueError("need k >= 1 and n >= k + 1")
    report = VerificationReport("theorem1", {"n": n, "k": k, "order": 2 * n, "margin": COMPARISON_MARGIN})
    if graphs is None:
        graphs = enumerate_connected(2 * n)
    else:
        graphs = [g for g in graphs if g.n == 2 * n and is_connected(g)]
    _minimizer_scan(report, graphs, "extendable", k, extremal_general(n, k), jobs)
    return report


def _with_balanced_bipartition(g: Graph) -> Graph | None:
    if g.bipartition is not None:
        left, right = g.bipartition
    else:
        sides = two_coloring(g)
        if sides is None:
            return None
        left, right = sides
    if len(left) != len(right):
        return None
    return g.with_bipartition(left, right)


def verify_theorem2(n: int, k: int, graphs: Iterable[Graph] | None = None, jobs: int = 1) -> VerificationReport:
    """Among connected balanced bipartite non-k-extendable graphs of order 2n, K_{n-k,n-1} ⋄ K_{k,1} uniquely minimises ∂."""
    if k < 1 or n < k + 1:
        raise ValueError("need k >= 1 and n >= k + 1")
    report = VerificationReport("theorem2", {"n": n, "k": k, "order": 2 * n, "margin": COMPARISON_MARGIN})
    if graphs is None:
        graphs = enumerate_connected_balanced_bipartite(2 * n)
    else:
        graphs = [_with_balanced_bipartition(g) for g in graphs if g.n == 2 * n and is_connected(g)]
        graphs = [g for g in graphs if g is not None]
    _minimizer_scan(report, graphs, "extendable", k, extremal_bipartite(n, k), jobs)
    return report


def verify_theorem3(n: int, k: int, graphs: Iterable[Graph] | None = None, jobs: int = 1) -> VerificationReport:
    """Among connected non-k-factor-critical graphs of order n, K_k ∨ (K_{n-k-1} ∪ K_1) uniquely minimises ∂."""
    if (n - k) % 2:
        raise ValueError("need n ≡ k (mod 2)")
    if k < 1 or n < k + 2:
        raise ValueError("need k >= 1 and n >= k + 2")
    report = VerificationReport("theorem3", {"n": n, "k": k, "order": n, "margin": COMPARISON_MARGIN})
    if graphs is None:
        graphs = enumerate_connected(n)
    else:
        graphs = [g for g in graphs if g.n == n and is_connected(g)]
    _minimizer_scan(report, graphs, "factor-critical", k, extremal_factor_critical(n, k), jobs)
    return report


# -- lemmas ----------------------------------------------------------------------------


def _random_connected_noncomplete(rng: np.random.Generator, max_order: int) -> Graph:
    while True:
        n = int(rng.integers(3, max_order + 1))
        p = float(rng.uniform(0.15, 0.95))
        upper = rng.random((n, n)) < p
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if upper[u, v]]
        g = Graph.from_edges(n, edges)
        if is_connected(g) and g.num_edges < n * (n - 1) // 2:
            return g


def verify_lemma_pf(trials: int = 500, max_order: int = 10, seed: int = 0) -> VerificationReport:
    """Adding an edge to a connected graph strictly lowers ∂ (by more than 1e-8 here)."""
    if trials < 1 or max_order < 3:
        raise ValueError("need trials >= 1 and max_order >= 3")
    report = VerificationReport("lemma-pf", {"trials": trials, "max_order": max_order, "seed": seed, "min_drop": LEMMA_PF_MIN_DROP})
    rng = np.random.default_rng(seed)
    smallest = math.inf
    for _ in range(trials):
        g = _random_connected_noncomplete(rng, max_order)
        non_edges = g.non_edges()
        u, v = non_edges[int(rng.integers(len(non_edges)))]
        drop = graph_radius(g) - graph_radius(g.add_edge(u, v))
        smallest = min(smallest, drop)
        if not drop > LEMMA_PF_MIN_DROP:
            report.fail(g, f"adding edge {u}-{v} did not lower the radius", drop)
    report.graphs_scanned = trials
    report.notes["smallest_drop"] = smallest
    return report


def _canonical_parts(s: int, parts: Sequence[int]) -> list[int]:
    p = len(parts)
    return [sum(parts) - p + 1] + [1] * (p - 1)


def verify_lemma_bh(s: int, parts: Sequence[int], report: VerificationReport | None = None) -> VerificationReport:
    """∂(K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_p})) >= ∂(K_s ∨ (K_{n-s-p+1} ∪ (p-1)K_1)), equality iff isomorphic."""
    parts = list(parts)
    if s < 1 or len(parts) < 2 or min(parts) < 1:
        raise ValueError("need s >= 1, p >= 2 and all parts >= 1")
    own = report is None
    if own:
        report = VerificationReport("lemma-bh", {"s": s, "parts": parts, "margin": COMPARISON_MARGIN})
    g = configuration(s, parts)
    ref = configuration(s, _canonical_parts(s, parts))
    same = canonical_form(g, cap=None) == canonical_form(ref, cap=None)
    diff = graph_radius(g) - graph_radius(ref)
    if abs(diff) <= COMPARISON_MARGIN:
        diff = graph_radius(g, REFINED_TOL) - graph_radius(ref, REFINED_TOL)
    if same and abs(diff) > COMPARISON_MARGIN:
        report.fail(g, "isomorphic configurations with different radii", diff)
    elif not same and diff <= COMPARISON_MARGIN:
        report.fail(g, f"parts {parts} do not exceed the canonical configuration", diff)
    report.graphs_scanned += 1
    return report


def partitions(total: int, parts: int, largest: int | None = None):
    """Nonincreasing tuples of ``parts`` positive integers summing to ``total``."""
    largest = total if largest is None else largest
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total - parts + 1, largest), 0, -1):
        for rest in partitions(total - first, parts - 1, first):
            yield (first,) + rest


def sweep_lemma_bh(max_order: int = 10) -> VerificationReport:
    """Every s >= 1 and multiset of p >= 2 part sizes with s + Σ n_i <= max_order."""
    report = VerificationReport("lemma-bh-sweep", {"max_order": max_order, "margin": COMPARISON_MARGIN})
    equalities = 0
    for order in range(3, max_order + 1):
        for s in range(1, order - 1):
            rest = order - s
            for p in range(2, rest + 1):
                for parts in partitions(rest, p):
                    verify_lemma_bh(s, parts, report)
                    if list(parts) == _canonical_parts(s, parts):
                        equalities += 1
    report.notes["equality_cases"] = equalities
    return report


# -- proof internals ------------------------------------------------------------------


def scan_s_range_general(n: int, k: int) -> VerificationReport:
    """Check ∂(G^(s)) > ∂* for 2k+1 <= s <= n+k-1 and the intermediate quantities used on the way."""
    if k < 1 or n < k + 1:
        raise ValueError("need k >= 1 and n >= k + 1")
    report = VerificationReport("scan-s-general", {"n": n, "k": k})
    ext = extremal_general(n, k)
    parts = block_parts([2 * k, 2 * n - 2 * k - 1, 1])
    (a, b, c), _ = perron_part_values(ext, parts, tol=PERRON_CONSTANCY_TOL / 10)
    full = spectral_radius(distance_matrix(ext), REFINED_TOL)
    star, x = full.radius, full.perron
    d_ext = distance_matrix(ext)
    c_formula = (1 + (2 * n - 2 * k - 2) / (star + 2)) * b
    rel = abs(c - c_formula) / c
    report.notes.update({"radius": star, "a": a, "b": b, "c": c, "c_formula_rel_error": rel, "min_row_sum": int(d_ext.sum(axis=1).min())})
    if rel > 1e-8:
        report.fail(ext, "c-formula mismatch", rel)
    eig3 = star * c - (2 * k * a + 2 * (2 * n - 2 * k - 1) * b)
    if abs(eig3) > 1e-8 * star:
        report.fail(ext, "third eigen-equation mismatch", eig3)
    if not star > 2 * n - 1:
        report.fail(ext, "radius does not exceed 2n-1", star - (2 * n - 1))

    rows = []
    for s in range(2 * k + 1, n + k):
        gs = general_family(n, k, s)
        rs = graph_radius(gs, REFINED_TOL)
        quad = float(x @ (distance_matrix(gs) - d_ext) @ x)
        closed = (s - 2 * k) * b * ((4 * n - 3 * s + 2 * k - 3) * b - 2 * c)
        ineq1 = (4 * n - 3 * s + 2 * k - 3) * b - 2 * c
        rows.append({"s": s, "radius": rs, "gap": rs - star, "quadratic_form": quad, "bound": closed, "inequality1": ineq1})
        if not rs - star > COMPARISON_MARGIN:
            report.fail(gs, f"radius of G^({s}) does not exceed the extremal radius", rs - star)
        if abs(quad - closed) > 1e-9 * max(1.0, abs(closed)):
            report.fail(gs, f"quadratic form differs from the closed-form bound at s={s}", quad - closed)
        if rs - star < quad - 1e-9:
            report.fail(gs, f"radius gap below the Rayleigh lower bound at s={s}", rs - star - quad)
        if n >= k + 3 and not ineq1 > 0:
            report.fail(gs, f"(4n-3s+2k-3)b - 2c <= 0 at s={s}", ineq1)
        report.graphs_scanned += 1
    report.notes["s_rows"] = rows
    if n == k + 2:
        # special case s = 2k+1: G^(s) = K_{2k+1} ∨ 3K_1, compared through the quotient polynomials
        val = poly_eval(closed_form_polynomial("phi_s", k), star)
        report.notes["phi_s_at_radius"] = val
        if not val < 0:
            report.fail(general_family(n, k, 2 * k + 1), "phi_s(radius) is not negative", val)
    return report


def _bipartite_embedding(n: int, k: int, s: int) -> list[int]:
    """Index map from B^(s) (layout s | s+k-1 | n-s | n-s-k+1) onto the extremal layout
    (n-k | n-1 | k | 1) that matches the refined Perron vector blocks."""
    a1, b1, a2 = 0, n - k, 2 * n - k - 1
    b2 = 2 * n - 1
    perm = []
    perm += [a1 + i for i in range(s)]
    perm += [b1 + i for i in range(s + k - 1)]
    perm += [a1 + s + i for i in range(n - k - s)] + [a2 + i for i in range(k)]
    perm += [b1 + s + k - 1 + i for i in range(n - s - k)] + [b2]
    return perm


def scan_s_range_bipartite(n: int, k: int) -> VerificationReport:
    """B^(s) ≅ B^(n-k+1-s), ∂(B^(s)) > ∂* on the interior, and the lower bound 4(n-s-k)a1(s b1 - b2)."""
    if k < 1 or n < k + 1:
        raise ValueError("need k >= 1 and n >= k + 1")
    report = VerificationReport("scan-s-bipartite", {"n": n, "k": k})
    ext = extremal_bipartite(n, k)
    ext_key = canonical_form(ext, cap=None)
    if canonical_form(bipartite_family(n, k, 1), cap=None) != ext_key:
        report.fail(bipartite_family(n, k, 1), "B^(1) is not isomorphic to the extremal graph")
    parts = block_parts([n - k, n - 1, k, 1])
    (a1, b1, a2, b2), _ = perron_part_values(ext, parts, tol=PERRON_CONSTANCY_TOL / 10)
    full = spectral_radius(distance_matrix(ext), REFINED_TOL)
    star, z = full.radius, full.perron
    d_ext = distance_matrix(ext)
    min_row = int(d_ext.sum(axis=1).min())
    report.notes.update({"radius": star, "a1": a1, "a2": a2, "b1": b1, "b2": b2, "min_row_sum": min_row})
    if not star > min_row:
        report.fail(ext, "radius does not exceed the minimum row sum", star - min_row)
    if n == k + 3 and min_row != 3 * k + 7:
        report.fail(ext, "minimum row sum differs from 3k+7", min_row - (3 * k + 7))

    rows = []
    for s in range(1, n - k + 1):
        bs = bipartite_family(n, k, s)
        mirror = bipartite_family(n, k, n - k + 1 - s)
        iso = canonical_form(bs, cap=None) == canonical_form(mirror, cap=None)
        if not iso:
            report.fail(bs, f"B^({s}) not isomorphic to B^({n - k + 1 - s})")
        row = {"s": s, "mirror_isomorphic": iso}
        if 2 <= s <= n - k - 1:
            rs = graph_radius(bs, REFINED_TOL)
            perm = _bipartite_embedding(n, k, s)
            d_s = distance_matrix(bs.relabel(perm))
            quad = float(z @ (d_s - d_ext) @ z)
            bound = 4 * (n - s - k) * a1 * (s * b1 - b2)
            row.update({"radius": rs, "gap": rs - star, "quadratic_form": quad, "bound": bound})
            if not rs - star > COMPARISON_MARGIN:
                report.fail(bs, f"radius of B^({s}) does not exceed the extremal radius", rs - star)
            if abs(quad - bound) > 1e-9 * max(1.0, abs(bound)):
                report.fail(bs, f"quadratic form differs from 4(n-s-k)a1(s b1 - b2) at s={s}", quad - bound)
            if rs - star < quad - 1e-9:
                report.fail(bs, f"radius gap below the Rayleigh lower bound at s={s}", rs - star - quad)
            if s >= 3 and not bound > 0:
                report.fail(bs, f"lower bound not positive at s={s}", bound)
            report.graphs_scanned += 1
        rows.append(row)
    report.notes["s_rows"] = rows
    if n == k + 3:
        val = poly_eval(closed_form_polynomial("phi2", k), star)
        report.notes["phi2_at_radius"] = val
        if not star > 3 * k + 7:
            report.fail(ext, "radius does not exceed 3k+7", star - (3 * k + 7))
        if not val < 0:
            report.fail(bipartite_family(n, k, 2), "phi2(radius) is not negative", val)
    return report


def polynomial_report(k_max: int = 10) -> VerificationReport:
    """Exact quotient characteristic polynomials against the closed forms, plus the two difference identities."""
    report = VerificationReport("polynomials", {"k_max": k_max})
    for k in range(1, k_max + 1):
        computed = {}
        for kind in ("phi", "phi_s", "phi1", "phi2"):
            check = charpoly_matches_closed_form(kind, k)
            computed[kind] = check.computed
            report.graphs_scanned += 1
            if not check:
                report.fail(None, f"{kind} at k={k}: coefficient diff {check.diff}")
        diff_s = poly_sub(poly_mul([1, 3], computed["phi_s"]), computed["phi"])
        if diff_s != [-1, 2 * k + 3]:
            report.fail(None, f"(x+3)phi_s - phi at k={k} is {diff_s}")
        diff_b = poly_sub(computed["phi2"], computed["phi1"])
        if diff_b != [-8, 16 * k - 16, -12 * k * k + 8 * k - 48]:
            report.fail(None, f"phi2 - phi1 at k={k} is {diff_b}")
    return report
