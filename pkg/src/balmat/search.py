"""Search harnesses: exhaustive/sampled minimum-nu search over fractionally
balanced hypergraphs, and seeded random instance generators used by the
verification suites.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .dinterval import DInterval, coverable
from .hypergraph import (Multigraph, PartiteHypergraph, WeightFunction,
                         balanced_certificate, nu)
from .topology import Graph

EXHAUSTIVE_UNIVERSE_CAP = 9  # potential-edge universes beyond this are refused


@dataclass(frozen=True)
class SearchReport:
    side_sizes: Tuple[int, ...]
    min_nu: Optional[int]
    witness: Optional[PartiteHypergraph]
    exhaustive: bool
    examined: int       # hypergraphs whose balance was tested
    balanced_count: int  # of those, how many were fractionally balanced


def _all_edges(side_sizes) -> List[Tuple[int, ...]]:
    return [tuple(e) for e in
            itertools.product(*(range(1, a + 1) for a in side_sizes))]


def canonical_form(side_sizes, edges):
    """Lexicographically minimal edge list over side-internal relabelings."""
    perms = [list(itertools.permutations(range(1, a + 1))) for a in side_sizes]
    best = None
    for combo in itertools.product(*perms):
        relab = tuple(sorted(tuple(combo[t][j - 1] for t, j in enumerate(e))
                             for e in edges))
        if best is None or relab < best:
            best = relab
    return best


def bm_search_exhaustive(side_sizes) -> SearchReport:
    """Exact minimum nu over all fractionally balanced hypergraphs on the
    given sides, up to side-internal relabeling."""
    sizes = tuple(int(a) for a in side_sizes)
    universe = _all_edges(sizes)
    if len(universe) > EXHAUSTIVE_UNIVERSE_CAP:
        raise ValueError(
            f"universe of {len(universe)} edges exceeds the exhaustive cap "
            f"{EXHAUSTIVE_UNIVERSE_CAP}; use sampled mode")
    seen = set()
    best_nu = None
    witness = None
    examined = balanced = 0
    for r in range(1, len(universe) + 1):
        for support in itertools.combinations(universe, r):
            key = canonical_form(sizes, support)
            if key in seen:
                continue
            seen.add(key)
            examined += 1
            h = PartiteHypergraph(sizes, support)
            if balanced_certificate(h) is None:
                continue
            balanced += 1
            val = nu(h)
            if best_nu is None or val < best_nu:
                best_nu, witness = val, h
    return SearchReport(sizes, best_nu, witness, True, examined, balanced)


def _sample_trial(side_sizes, seed, trial, edge_cap):
    """One sampled candidate: (nu, edges) when balanced, else None."""
    sizes = tuple(side_sizes)
    rng = random.Random(f"{seed}:{trial}")
    universe = _all_edges(sizes)
    lo = max(sizes)
    hi = min(len(universe), edge_cap)
    size = rng.randint(lo, hi)
    support = tuple(sorted(rng.sample(universe, size)))
    h = PartiteHypergraph(sizes, support)
    if balanced_certificate(h) is None:
        return None
    return (nu(h), support)


def bm_search_sampled(side_sizes, seed, trials: int, edge_cap: Optional[int] = None,
                      threads: int = 1) -> SearchReport:
    """Seeded random search; reports an upper bound on the true minimum.

    Each trial draws its randomness from a seed derived from (seed, trial),
    so the result does not depend on the thread count.
    """
    sizes = tuple(int(a) for a in side_sizes)
    if edge_cap is None:
        edge_cap = min(len(_all_edges(sizes)), 3 * max(sizes))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(
                lambda t: _sample_trial(sizes, seed, t, edge_cap), range(trials)))
    else:
        outcomes = [_sample_trial(sizes, seed, t, edge_cap) for t in range(trials)]
    hits = [o for o in outcomes if o is not None]
    if not hits:
        return SearchReport(sizes, None, None, False, trials, 0)
    val, support = min(hits)
    return SearchReport(sizes, val, PartiteHypergraph(sizes, support), False,
                        trials, len(hits))


def bm_search(side_sizes, mode: str = "exhaustive", seed=0, trials: int = 1000,
              edge_cap: Optional[int] = None, threads: int = 1) -> SearchReport:
    if mode == "exhaustive":
        return bm_search_exhaustive(side_sizes)
    if mode == "sampled":
        return bm_search_sampled(side_sizes, seed, trials, edge_cap, threads)
    raise ValueError(f"unknown mode {mode!r}")


# --- Seeded generators for the verification suites ---------------------------


def random_graph(seed, lo: int = 6, hi: int = 8) -> Graph:
    """Seeded Erdos-Renyi-style graph with a randomly drawn density."""
    rng = random.Random(f"graph:{seed}")
    n = rng.randint(lo, hi)
    p = rng.choice([Fraction(1, 5), Fraction(7, 20), Fraction(1, 2)])
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if Fraction(rng.randint(0, 19), 20) < p]
    return Graph(n, edges)


def random_knn_balanced(k: int, n: int, seed):
    """A balanced (k, n, n) instance: each side-1 vertex carries t random
    permutation rows of weight 1 (the same t for every row, so all three
    sides have constant degree)."""
    rng = random.Random(f"knn:{seed}")
    t = rng.choice([1, 1, 1, 2])
    weights: Dict[Tuple[int, int, int], Fraction] = {}
    for x in range(1, k + 1):
        for _ in range(t):
            perm = list(range(1, n + 1))
            rng.shuffle(perm)
            for j in range(1, n + 1):
                e = (x, j, perm[j - 1])
                weights[e] = weights.get(e, Fraction(0)) + 1
    h = PartiteHypergraph((k, n, n), list(weights))
    return h, WeightFunction(weights)


def random_weighted_multigraph(seed, max_rows: int = 3, max_cols: int = 4):
    """A bipartite (multi)graph with f-values in {1, 2}, column degrees <= 2,
    plus the smallest admissible s (row degrees <= 2s).  Returns (g, f, s)."""
    rng = random.Random(f"conf:{seed}")
    rows = rng.randint(2, max_rows)
    cols = rng.randint(2, max_cols)
    weights: Dict[Tuple[int, int, int], int] = {}
    for c in range(1, cols + 1):
        style = rng.choice(["one", "one", "two_cells", "double"])
        if style == "one":
            weights[(rng.randint(1, rows), c, 0)] = 1
        elif style == "double":
            weights[(rng.randint(1, rows), c, 0)] = 2
        else:
            r1, r2 = rng.sample(range(1, rows + 1), 2) if rows >= 2 else (1, 1)
            weights[(r1, c, 0)] = 1
            if r2 != r1:
                weights[(r2, c, 0)] = 1
    g = Multigraph(rows, cols, list(weights))
    f = WeightFunction({e: Fraction(w) for e, w in weights.items()})
    row_deg: Dict[int, int] = {}
    for (b, _, _), w in weights.items():
        row_deg[b] = row_deg.get(b, 0) + w
    s = max(1, -(-max(row_deg.values()) // 2))
    return g, f, s


def random_two_interval_family(seed, m: int, max_size: int = 8):
    """A family of <= max_size two-intervals not pierceable by m points per
    line (found by seeded rejection sampling; endpoints on a 1/12 grid)."""
    rng = random.Random(f"tardos:{m}:{seed}")
    q = 12
    while True:
        size = rng.randint(4 if m == 1 else 6, max_size)
        family = []
        for _ in range(size):
            parts = []
            for _t in range(2):
                lo = rng.randint(0, q - 2)
                hi = rng.randint(lo + 1, min(q, lo + 1 + rng.randint(1, 3)))
                parts.append((Fraction(lo, q), Fraction(hi, q)))
            family.append(DInterval(parts))
        if coverable(family, (m, m)) is None:
            return family
