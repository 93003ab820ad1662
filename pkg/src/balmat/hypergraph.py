"""d-partite hypergraphs, weight functions, balance certificates, nu and nu*.

Indices are 1-based throughout, matching the usual [a_t] convention; an edge
of a d-partite hypergraph is a d-tuple (j_1, ..., j_d) with j_t in [a_t].
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Tuple

from .rational import (EQ, GE, LE, MAX, FEASIBILITY, INFEASIBLE, LPProblem, Optimal,
                       ZERO, lp_solve)

Edge = Tuple[int, ...]
Vertex = Tuple[int, int]  # (side, index), both 1-based


@dataclass(frozen=True)
class PartiteHypergraph:
    side_sizes: Tuple[int, ...]
    edges: Tuple[Edge, ...]  # sorted, duplicate-free

    def __init__(self, side_sizes, edges):
        sizes = tuple(int(a) for a in side_sizes)
        if not sizes or any(a < 1 for a in sizes):
            raise ValueError("side sizes must be naturals >= 1")
        es = sorted({tuple(int(j) for j in e) for e in edges})
        for e in es:
            if len(e) != len(sizes):
                raise ValueError(f"edge {e} has wrong arity")
            if any(not 1 <= j <= a for j, a in zip(e, sizes)):
                raise ValueError(f"edge {e} out of range for sides {sizes}")
        object.__setattr__(self, "side_sizes", sizes)
        object.__setattr__(self, "edges", tuple(es))

    @property
    def d(self) -> int:
        return len(self.side_sizes)

    def vertices(self):
        for t, a in enumerate(self.side_sizes, start=1):
            for j in range(1, a + 1):
                yield (t, j)

    def edges_at(self, v: Vertex) -> List[Edge]:
        t, j = v
        return [e for e in self.edges if e[t - 1] == j]


@dataclass(frozen=True)
class WeightFunction:
    """Nonnegative rational weights on (a subset of) a hypergraph's edges."""

    weights: Tuple[Tuple[Edge, Fraction], ...]

    def __init__(self, weights):
        items = []
        for e, w in (weights.items() if isinstance(weights, dict) else weights):
            w = Fraction(w)
            if w < 0:
                raise ValueError(f"negative weight on {e}")
            items.append((tuple(e), w))
        object.__setattr__(self, "weights", tuple(sorted(items)))

    def as_dict(self) -> Dict[Edge, Fraction]:
        return dict(self.weights)

    def __getitem__(self, e) -> Fraction:
        return dict(self.weights).get(tuple(e), ZERO)

    def total(self) -> Fraction:
        return sum((w for _, w in self.weights), ZERO)

    def support(self) -> List[Edge]:
        return [e for e, w in self.weights if w > 0]


def check_hosted(h: PartiteHypergraph, f: WeightFunction):
    edge_set = set(h.edges)
    for e, _ in f.weights:
        if e not in edge_set:
            raise ValueError(f"weighted edge {e} not in hypergraph")


def degrees(h: PartiteHypergraph, f: WeightFunction) -> Dict[Vertex, Fraction]:
    deg = {v: ZERO for v in h.vertices()}
    for e, w in f.weights:
        for t, j in enumerate(e, start=1):
            deg[(t, j)] += w
    return deg


def is_balanced(h: PartiteHypergraph, f: WeightFunction) -> bool:
    """Exact per-side constant-degree check."""
    check_hosted(h, f)
    deg = degrees(h, f)
    for t, a in enumerate(h.side_sizes, start=1):
        side = [deg[(t, j)] for j in range(1, a + 1)]
        if any(x != side[0] for x in side):
            return False
    return True


def balanced_certificate(h: PartiteHypergraph) -> Optional[WeightFunction]:
    """A nonzero balanced weighting normalized to |f| = 1, or None.

    Degree on side t is pinned to 1/a_t; double counting forces exactly that
    value once |f| = 1, so feasibility of this system is equivalent to the
    existence of any nonzero balanced weighting.
    """
    edges = h.edges
    if not edges:
        return None
    deg = degrees(h, WeightFunction({e: 1 for e in edges}))
    if any(d == 0 for d in deg.values()):
        return None  # isolated vertex: its degree can never reach 1/a_t
    index = {e: i for i, e in enumerate(edges)}
    constraints = []
    for t, a in enumerate(h.side_sizes, start=1):
        for j in range(1, a + 1):
            coeffs = [ZERO] * len(edges)
            for e in edges:
                if e[t - 1] == j:
                    coeffs[index[e]] = Fraction(1)
            constraints.append((coeffs, EQ, Fraction(1, a)))
    res = lp_solve(LPProblem(len(edges), constraints, sense=FEASIBILITY))
    if res is INFEASIBLE:
        return None
    return WeightFunction({e: res.point[index[e]] for e in edges if res.point[index[e]] > 0})


def nu_star(h: PartiteHypergraph) -> Fraction:
    """Fractional matching number: max |f| s.t. deg_f <= 1, f >= 0."""
    edges = h.edges
    if not edges:
        return ZERO
    index = {e: i for i, e in enumerate(edges)}
    constraints = []
    for t, a in enumerate(h.side_sizes, start=1):
        for j in range(1, a + 1):
            coeffs = [ZERO] * len(edges)
            for e in edges:
                if e[t - 1] == j:
                    coeffs[index[e]] = Fraction(1)
            constraints.append((coeffs, LE, Fraction(1)))
    res = lp_solve(LPProblem(len(edges), constraints, [Fraction(1)] * len(edges), MAX))
    assert isinstance(res, Optimal)
    return res.value


def _disjoint(e: Edge, f: Edge) -> bool:
    return all(a != b for a, b in zip(e, f))


def _cheap_bound(edges) -> int:
    """Upper bound on the matching number of the remaining edge set."""
    if not edges:
        return 0
    d = len(edges[0])
    return min(len({e[t] for e in edges}) for t in range(d))


def nu(h: PartiteHypergraph) -> int:
    """Exact maximum matching size by branch and bound.

    Branches on a vertex of minimum positive degree (fail-first), ties broken
    by lowest (side, index); prunes with the per-side distinct-index bound.
    """
    return _nu_branch(list(h.edges), 0, 0)


def _nu_branch(edges: List[Edge], current: int, best: int) -> int:
    best = max(best, current)
    if not edges:
        return best
    if current + _cheap_bound(edges) <= best:
        return best
    # vertex of minimum positive degree, lowest (side, index) first
    counts: Dict[Vertex, int] = {}
    for e in edges:
        for t, j in enumerate(e, start=1):
            counts[(t, j)] = counts.get((t, j), 0) + 1
    v = min(counts, key=lambda u: (counts[u], u))
    t, j = v
    at_v = [e for e in edges if e[t - 1] == j]
    for e in at_v:
        rest = [f for f in edges if _disjoint(e, f)]
        best = _nu_branch(rest, current + 1, best)
    rest = [f for f in edges if f[t - 1] != j]
    best = _nu_branch(rest, current, best)
    return best


def nu_oracle(h: PartiteHypergraph) -> int:
    """Independent exhaustive oracle: plain take/skip recursion, no pruning."""

    def rec(edges):
        if not edges:
            return 0
        e, rest = edges[0], edges[1:]
        skip = rec(rest)
        take = 1 + rec([f for f in rest if _disjoint(e, f)])
        return max(skip, take)

    return rec(list(h.edges))


# --- Neighborhood multigraphs ----------------------------------------------


@dataclass(frozen=True)
class Multigraph:
    """Bipartite multigraph with sides B, C; parallel edges carry labels."""

    b_size: int
    c_size: int
    edges: Tuple[Tuple[int, int, object], ...]  # (b, c, label), labels distinct

    def __init__(self, b_size, c_size, edges):
        es = tuple(sorted((int(b), int(c), lab) for b, c, lab in edges))
        if len({e for e in es}) != len(es):
            raise ValueError("labeled edges must be distinct")
        for b, c, _ in es:
            if not (1 <= b <= b_size and 1 <= c <= c_size):
                raise ValueError(f"edge endpoint out of range: {(b, c)}")
        object.__setattr__(self, "b_size", int(b_size))
        object.__setattr__(self, "c_size", int(c_size))
        object.__setattr__(self, "edges", es)


def neighborhood(h: PartiteHypergraph, K) -> Multigraph:
    """N_H(K) for d = 3: one labeled (b, c) edge per edge (x, b, c), x in K.

    The label keeps the source vertex x, so identical neighborhoods of two
    elements of K stay distinct (multiset semantics).
    """
    if h.d != 3:
        raise ValueError("neighborhood extraction is implemented for d = 3 only")
    K = set(K)
    if any(not 1 <= x <= h.side_sizes[0] for x in K):
        raise ValueError("K must be a subset of side 1")
    edges = [(b, c, x) for (x, b, c) in h.edges if x in K]
    return Multigraph(h.side_sizes[1], h.side_sizes[2], edges)


# --- Random balanced instances ---------------------------------------------


def random_balanced(side_sizes, seed, layers: int):
    """Deterministic random balanced instance built from balanced templates.

    Supported size patterns: all sides equal (random permutation-matchings),
    (n, rn) with integer r (unions of n disjoint stars K_{1,r}), and
    (n, n, rn) (permutation on sides 1-2 crossed with a star-union on side 3).
    The returned weight function is the sum of the template indicators.
    """
    sizes = tuple(int(a) for a in side_sizes)
    if layers < 1:
        raise ValueError("layers must be >= 1")
    rng = random.Random(seed)
    weights: Dict[Edge, int] = {}

    def add(e):
        weights[e] = weights.get(e, 0) + 1

    n = sizes[0]
    if all(a == n for a in sizes):
        for _ in range(layers):
            perms = [list(range(1, n + 1))]
            for _ in range(len(sizes) - 1):
                p = list(range(1, n + 1))
                rng.shuffle(p)
                perms.append(p)
            for i in range(n):
                add(tuple(p[i] for p in perms))
    elif len(sizes) == 2 and sizes[1] % n == 0:
        r = sizes[1] // n
        for _ in range(layers):
            cols = list(range(1, sizes[1] + 1))
            rng.shuffle(cols)
            for i in range(n):
                for c in cols[i * r:(i + 1) * r]:
                    add((i + 1, c))
    elif len(sizes) == 3 and sizes[1] == n and sizes[2] % n == 0:
        r = sizes[2] // n
        for _ in range(layers):
            p = list(range(1, n + 1))
            rng.shuffle(p)
            cols = list(range(1, sizes[2] + 1))
            rng.shuffle(cols)
            for i in range(n):
                for c in cols[i * r:(i + 1) * r]:
                    add((i + 1, p[i], c))
    else:
        raise ValueError(f"unsupported size pattern {sizes}")

    h = PartiteHypergraph(sizes, list(weights))
    return h, WeightFunction({e: Fraction(w) for e, w in weights.items()})
