"""Distance matrices, the distance spectral radius, equitable partitions and quotient polynomials."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import Graph, _bits, configuration, diamond, general_family

DEFAULT_TOL = 1e-10
REFINED_TOL = 1e-13
COMPARISON_MARGIN = 1e-7


class DisconnectedGraphError(ValueError):
    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: no path between vertices {u} and {v}")
        self.pair = (u, v)


class ConvergenceError(RuntimeError):
    def __init__(self, estimate: float, residual: float, iterations: int):
        super().__init__(
            f"power iteration did not converge in {iterations} steps "
            f"(last estimate {estimate!r}, residual {residual:.3e})"
        )
        self.estimate = estimate
        self.residual = residual
        self.iterations = iterations


class NonEquitableError(ValueError):
    def __init__(self, part: int, vertex: int, message: str):
        super().__init__(message)
        self.part = part
        self.vertex = vertex


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs shortest-path lengths by one bitmask BFS per source."""
    n = g.n
    if n == 0:
        raise ValueError("distance matrix of the empty graph is undefined")
    d = np.zeros((n, n), dtype=np.int64)
    full = (1 << n) - 1
    for src in range(n):
        seen = frontier = 1 << src
        depth = 0
        while frontier:
            depth += 1
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            for v in _bits(frontier):
                d[src, v] = depth
        if seen != full:
            missing = (full & ~seen).bit_length() - 1
            raise DisconnectedGraphError(src, missing)
    return d


def write_distance_csv(d: np.ndarray, path) -> None:
    np.savetxt(path, d, fmt="%d", delimiter=",")


@dataclass
class SpectralResult:
    radius: float
    perron: np.ndarray
    residual: float
    iterations: int

    def to_dict(self) -> dict:
        return {
            "radius": self.radius,
            "perron": [float(x) for x in self.perron],
            "residual": self.residual,
            "iterations": self.iterations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def iteration_cap(n: int) -> int:
    return int(100 * n * (math.log(max(n, 1)) + 20))


def spectral_radius(d: np.ndarray, tol: float = DEFAULT_TOL, max_iter: int | None = None) -> SpectralResult:
    """Dominant eigenpair of a nonnegative irreducible symmetric matrix by power iteration.

    Starts from the normalised all-ones vector and stops once
    ``||D x - rho x||_inf <= tol`` with ``rho`` the Rayleigh quotient.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = np.asarray(d, dtype=float)
    n = a.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    cap = iteration_cap(n) if max_iter is None else max_iter
    x = np.full(n, 1.0 / math.sqrt(n))
    rho, res = 0.0, math.inf
    for it in range(1, cap + 1):
        y = a @ x
        rho = float(x @ y)
        res = float(np.max(np.abs(y - rho * x)))
        if res <= tol:
            return SpectralResult(rho, x, res, it)
        norm = float(np.linalg.norm(y))
        if norm == 0.0:
            # zero matrix (n = 1): every vector is an eigenvector
            return SpectralResult(0.0, x, 0.0, it)
        x = y / norm
    raise ConvergenceError(rho, res, cap)


def graph_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return spectral_radius(distance_matrix(g), tol).radius


def compare_radii(g: Graph, h: Graph, margin: float = COMPARISON_MARGIN) -> tuple[int, float]:
    """Sign of ∂(g) - ∂(h) and the difference; 0 when within ``margin`` even after a refined rerun."""
    diff = graph_radius(g) - graph_radius(h)
    if abs(diff) <= margin:
        diff = graph_radius(g, REFINED_TOL) - graph_radius(h, REFINED_TOL)
        if abs(diff) <= margin:
            return 0, diff
    return (1 if diff > 0 else -1), diff


# -- equitable partitions -----------------------------------------------------------


@dataclass
class QuotientSystem:
    parts: list[list[int]]
    quotient: np.ndarray
    charpoly: list[int] | None = field(default=None)

    def largest_eigenvalue(self) -> float:
        return float(max(np.linalg.eigvals(self.quotient).real))


def verify_equitable(d: np.ndarray, parts: Sequence[Sequence[int]]) -> QuotientSystem:
    d = np.asarray(d)
    n = d.shape[0]
    parts = [list(p) for p in parts]
    flat = sorted(v for p in parts for v in p)
    if flat != list(range(n)) or any(not p for p in parts):
        raise ValueError("parts must be nonempty and partition the vertex set")
    m = len(parts)
    q = np.zeros((m, m), dtype=d.dtype)
    for i, pi in enumerate(parts):
        for j, pj in enumerate(parts):
            sums = d[np.ix_(pi, pj)].sum(axis=1)
            bad = np.nonzero(sums != sums[0])[0]
            if bad.size:
                v = pi[int(bad[0])]
                raise NonEquitableError(
                    i, v, f"partition not equitable: vertex {v} of part {i} has block sum {sums[bad[0]]} into part {j}, expected {sums[0]}"
                )
            q[i, j] = sums[0]
    poly = None
    if np.issubdtype(q.dtype, np.integer):
        poly = charpoly([[int(x) for x in row] for row in q])
    return QuotientSystem(parts, q, poly)


def block_parts(sizes: Sequence[int]) -> list[list[int]]:
    """Contiguous index ranges of the given sizes."""
    out, start = [], 0
    for s in sizes:
        out.append(list(range(start, start + s)))
        start += s
    return out


def perron_part_values(g: Graph, parts: Sequence[Sequence[int]], tol: float = DEFAULT_TOL) -> tuple[list[float], SpectralResult]:
    """Common Perron-vector entry on each part, checked constant to ``10 * tol``."""
    result = spectral_radius(distance_matrix(g), tol)
    x = result.perron
    values = []
    for i, p in enumerate(parts):
        vals = x[list(p)]
        spread = float(vals.max() - vals.min())
        if spread > 10 * tol:
            raise NonEquitableError(i, int(p[int(np.argmax(np.abs(vals - vals[0])))]), f"Perron vector varies by {spread:.3e} on part {i}")
        values.append(float(vals.mean()))
    return values, result


# -- exact characteristic polynomials --------------------------------------------------


def charpoly(matrix: Sequence[Sequence[int]]) -> list[int]:
    """det(xI - A) by Faddeev-LeVerrier in exact arithmetic, highest degree first."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
        prev = coeffs[-1]
        m = [[sum(a[i][t] * m[t][j] for t in range(n)) + (prev if i == j else 0) for j in range(n)] for i in range(n)]
        am_trace = sum(sum(a[i][t] * m[t][i] for t in range(n)) for i in range(n))
        coeffs.append(-am_trace / k)
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("characteristic polynomial has non-integer coefficients")
    return [int(c) for c in coeffs]


def poly_eval(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_sub(p: Sequence[int], q: Sequence[int]) -> list[int]:
    size = max(len(p), len(q))
    p = [0] * (size - len(p)) + list(p)
    q = [0] * (size - len(q)) + list(q)
    out = [a - b for a, b in zip(p, q)]
    while len(out) > 1 and out[0] == 0:
        out.pop(0)
    return out


def closed_form_polynomial(kind: str, k: int) -> list[int]:
    """Closed-form quotient polynomials in k, highest degree first."""
    if kind == "phi":
        return [1, -(2 * k + 1), -(4 * k + 14), 4 * k - 12]
    if kind == "phi_s":
        return [1, -(2 * k + 4), 2 * k - 3]
    if kind == "phi1":
        return [1, -(4 * k + 4), 3 * k * k - 6 * k - 45, 12 * k * k + 72 * k - 52, -24 * k * k + 64 * k + 28]
    if kind == "phi2":
        return [1, -(4 * k + 4), 3 * k * k - 6 * k - 53, 12 * k * k + 88 * k - 68, -36 * k * k + 72 * k - 20]
    raise ValueError(f"unknown polynomial kind {kind!r}")


def quotient_instance(kind: str, k: int) -> tuple[Graph, list[list[int]]]:
    """The concrete graph and equitable partition whose quotient yields ``kind`` at this k."""
    if kind == "phi":
        return general_family(k + 2, k, 2 * k), block_parts([2 * k, 3, 1])
    if kind == "phi_s":
        return configuration(2 * k + 1, [1, 1, 1]), [list(range(2 * k + 1)), list(range(2 * k + 1, 2 * k + 4))]
    if kind == "phi1":
        # B^(1) at n = k+3: K_{3,k+2} ⋄ K_{k,1}
        return diamond(3, k + 2, k, 1), block_parts([3, k + 2, k, 1])
    if kind == "phi2":
        # B^(2) at n = k+3: K_{2,k+1} ⋄ K_{k+1,2}
        return diamond(2, k + 1, k + 1, 2), block_parts([2, k + 1, k + 1, 2])
    raise ValueError(f"unknown polynomial kind {kind!r}")


@dataclass
class PolynomialCheck:
    kind: str
    k: int
    computed: list[int]
    expected: list[int]

    @property
    def diff(self) -> list[int]:
        return poly_sub(self.computed, self.expected)

    @property
    def matches(self) -> bool:
        return self.computed == self.expected

    def __bool__(self) -> bool:
        return self.matches


def charpoly_matches_closed_form(kind: str, k: int) -> PolynomialCheck:
    if k < 1:
        raise ValueError("k must be >= 1")
    g, parts = quotient_instance(kind, k)
    system = verify_equitable(distance_matrix(g), parts)
    return PolynomialCheck(kind, k, system.charpoly, closed_form_polynomial(kind, k))
