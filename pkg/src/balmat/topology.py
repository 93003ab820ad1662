"""Simplicial complexes, rational homology, connectivity, the Meshulam game.

Connectivity eta follows the convention "largest homologically k-connected k,
plus 2": scanning j = -1, 0, 1, ... the first nonvanishing reduced Betti
number at j gives eta = j + 1.  The void complex (no faces at all) has eta 0,
and so does the complex whose only face is the empty set.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Tuple

from .hypergraph import Multigraph, PartiteHypergraph, WeightFunction, neighborhood, nu
from .rational import ZERO, ceil_frac, rank_of_rows

INFINITE = math.inf  # game value for "an isolated vertex appeared"


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: FrozenSet[FrozenSet[int]]  # vertices are 1..vertex_count

    def __init__(self, vertex_count, edges):
        es = set()
        for e in edges:
            u, v = sorted(e)
            if u == v:
                raise ValueError("loops are not allowed")
            if not (1 <= u and v <= vertex_count):
                raise ValueError(f"edge {(u, v)} out of range")
            es.add(frozenset((u, v)))
        object.__setattr__(self, "vertex_count", int(vertex_count))
        object.__setattr__(self, "edges", frozenset(es))


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet representation; downward closure is implicit.

    facets == () means the void complex (no faces); a single empty facet
    means the complex whose only face is the empty set.
    """

    vertex_count: int
    facets: Tuple[FrozenSet[int], ...]

    def __init__(self, vertex_count, facets):
        fs = {frozenset(f) for f in facets}
        # drop facets contained in others
        maximal = [f for f in fs if not any(f < g for g in fs)]
        for f in maximal:
            if any(not 1 <= v <= vertex_count for v in f):
                raise ValueError("facet vertex out of range")
        object.__setattr__(self, "vertex_count", int(vertex_count))
        object.__setattr__(self, "facets", tuple(sorted(maximal, key=sorted)))

    @property
    def is_void(self) -> bool:
        return not self.facets

    def faces(self, max_dim: Optional[int] = None) -> Dict[int, List[Tuple[int, ...]]]:
        """Faces by dimension (empty face has dimension -1), sorted."""
        if self.is_void:
            return {}
        top = max_dim if max_dim is not None else max(len(f) for f in self.facets) - 1
        by_dim: Dict[int, set] = {j: set() for j in range(-1, top + 1)}
        by_dim[-1].add(())
        for f in self.facets:
            fv = sorted(f)
            for j in range(0, min(len(fv), top + 1)):
                by_dim[j].update(itertools.combinations(fv, j + 1))
        return {j: sorted(s) for j, s in by_dim.items()}

    def euler_characteristic_reduced(self) -> int:
        faces = self.faces()
        return sum((-1) ** j * len(fs) for j, fs in faces.items())


def _boundary_rank(lower: List[Tuple[int, ...]], upper: List[Tuple[int, ...]]) -> int:
    """Rank of the boundary map from span(upper) to span(lower)."""
    if not upper or not lower:
        return 0
    idx = {f: i for i, f in enumerate(lower)}
    cols = []
    for face in upper:
        col = {}
        for i in range(len(face)):
            sub = face[:i] + face[i + 1:]
            col[idx[sub]] = Fraction((-1) ** i)
        cols.append(col)
    return rank_of_rows(cols)  # rank(transpose) = rank


def betti(c: SimplicialComplex, j: int) -> int:
    """dim of the j-th reduced rational homology group (j >= -1)."""
    if j < -1:
        raise ValueError("j must be >= -1")
    if c.is_void:
        return 0
    faces = c.faces(max_dim=j + 1)
    fj = faces.get(j, [])
    if not fj:
        return 0
    lower = faces.get(j - 1, [])
    upper = faces.get(j + 1, [])
    return len(fj) - _boundary_rank(lower, fj) - _boundary_rank(fj, upper)


@dataclass(frozen=True)
class Eta:
    """Connectivity answer: exact value, or a certified lower bound (the cap)."""

    value: int
    exact: bool

    def at_least(self, k: int) -> bool:
        return self.value >= k

    def __str__(self):
        return str(self.value) if self.exact else f">={self.value}"


def eta(c: SimplicialComplex, cap: int) -> Eta:
    """Homological connectivity, scanned up to the cap.

    Returns Eta(j + 1, exact=True) for the smallest j with nonvanishing
    reduced homology, or Eta(cap, exact=False) when everything up to
    dimension cap - 2 vanishes.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if c.is_void:
        return Eta(0, True)
    for j in range(-1, cap - 1):
        if betti(c, j) != 0:
            return Eta(j + 1, True)
    return Eta(cap, False)


# --- Independence / matching complexes --------------------------------------


def _maximal_independent_sets(g: Graph) -> List[FrozenSet[int]]:
    """Bron-Kerbosch on the complement graph (maximal cliques there)."""
    n = g.vertex_count
    non_adj = {v: set() for v in range(1, n + 1)}
    adj = {v: set() for v in range(1, n + 1)}
    for e in g.edges:
        u, v = sorted(e)
        adj[u].add(v)
        adj[v].add(u)
    for v in range(1, n + 1):
        non_adj[v] = set(range(1, n + 1)) - adj[v] - {v}

    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot_pool = p | x
        u = max(pivot_pool, key=lambda w: len(non_adj[w] & p))
        for v in sorted(p - non_adj[u]):
            bk(r | {v}, p & non_adj[v], x & non_adj[v])
            p = p - {v}
            x = x | {v}

    bk(set(), set(range(1, n + 1)), set())
    return out


def independence_complex(g: Graph) -> SimplicialComplex:
    """Facets are the maximal independent sets of g."""
    if g.vertex_count == 0:
        return SimplicialComplex(0, [frozenset()])
    return SimplicialComplex(g.vertex_count, _maximal_independent_sets(g))


def line_graph(mg: Multigraph) -> Graph:
    """One vertex per labeled edge; adjacency = sharing an endpoint.

    Parallel edges share both endpoints, hence are adjacent.
    """
    cells = list(mg.edges)
    n = len(cells)
    edges = []
    for i in range(n):
        for k in range(i + 1, n):
            if cells[i][0] == cells[k][0] or cells[i][1] == cells[k][1]:
                edges.append((i + 1, k + 1))
    return Graph(n, edges)


def matching_complex(mg: Multigraph) -> SimplicialComplex:
    """The matching complex M(G) = I(L(G)), vertices numbered like line_graph."""
    return independence_complex(line_graph(mg))


# --- Meshulam's game --------------------------------------------------------


def _canonical_edges(edges: FrozenSet[FrozenSet[int]]):
    """Isomorphism-invariant key for a graph with no isolated vertices.

    Degree-refined partition, then exhaustive relabeling within the
    refinement cells (skipped beyond 12 vertices or too many relabelings,
    where we fall back to the labeled edge set).
    """
    verts = sorted({v for e in edges for v in e})
    n = len(verts)
    adj = {v: set() for v in verts}
    for e in edges:
        u, v = sorted(e)
        adj[u].add(v)
        adj[v].add(u)
    color = {v: len(adj[v]) for v in verts}
    while True:
        sig = {v: (color[v], tuple(sorted(color[u] for u in adj[v]))) for v in verts}
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: palette[sig[v]] for v in verts}
        if new == color:
            break
        color = new
    cells: Dict[int, List[int]] = {}
    for v in verts:
        cells.setdefault(color[v], []).append(v)
    n_perms = 1
    for cell in cells.values():
        n_perms *= math.factorial(len(cell))
    if n > 12 or n_perms > 40320:
        return ("labeled", tuple(sorted(tuple(sorted(e)) for e in edges)))

    slots: Dict[int, List[int]] = {}
    offset = 0
    for col in sorted(cells):
        cells[col].sort()
        slots[col] = list(range(offset, offset + len(cells[col])))
        offset += len(cells[col])
    best = None
    for assignment in _cell_permutations(cells, slots):
        relabeled = tuple(sorted(tuple(sorted((assignment[u], assignment[v]))) for u, v in
                                 (tuple(e) for e in edges)))
        if best is None or relabeled < best:
            best = relabeled
    return ("canon", best)


def _cell_permutations(cells, slots):
    cols = sorted(cells)
    pools = [list(itertools.permutations(slots[c])) for c in cols]
    for combo in itertools.product(*pools):
        assignment = {}
        for col, perm in zip(cols, combo):
            for v, s in zip(cells[col], perm):
                assignment[v] = s
        yield assignment


class MeshulamGame:
    """Exact value of the CON/NON deletion-explosion game."""

    def __init__(self):
        self.memo: Dict[object, object] = {}

    def psi(self, g: Graph):
        verts = frozenset(range(1, g.vertex_count + 1))
        return self._value(verts, g.edges)

    def _value(self, verts: FrozenSet[int], edges: FrozenSet[FrozenSet[int]]):
        if not verts:
            return 0
        covered = {v for e in edges for v in e}
        if covered != verts:
            return INFINITE  # an isolated vertex: contractible, infinitely connected
        key = _canonical_edges(edges)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        best = 0
        for e in sorted(tuple(sorted(e)) for e in edges):
            u, v = e
            deleted = self._value(verts, edges - {frozenset(e)})
            boom_verts, boom_edges = _explode(verts, edges, u, v)
            val = min(deleted, self._value(boom_verts, boom_edges) + 1)
            if val > best:
                best = val
            if best == INFINITE:
                break
        self.memo[key] = best
        return best


def _explode(verts, edges, u, v):
    adj = {u, v}
    for e in edges:
        if u in e or v in e:
            adj |= e
    new_verts = verts - adj
    new_edges = frozenset(e for e in edges if not (e & adj))
    return new_verts, new_edges


_GAME = MeshulamGame()


def psi(g: Graph):
    """Game value Psi(G): an int, or INFINITE when CON can force an isolated
    vertex (equivalently, one exists already)."""
    return _GAME.psi(g)


# --- Topological Hall checker ----------------------------------------------


@dataclass
class HallReport:
    all_K_pass: bool
    failing_K: Optional[Tuple[int, ...]]
    matching: Optional[Tuple[Tuple[int, ...], ...]]


def hall_check(h: PartiteHypergraph, deficiency: int) -> HallReport:
    """Check eta(M(N_H(K))) >= |K| - deficiency for every K inside side 1.

    On success also exhibits a matching of size a_1 - deficiency, as promised
    by the deficiency form of the topological Hall theorem.
    """
    if h.d != 3:
        raise ValueError("hall_check supports d = 3 only")
    a1 = h.side_sizes[0]
    if a1 > 12:
        raise ValueError("side 1 too large for subset enumeration")
    for size in range(1, a1 + 1):
        for K in itertools.combinations(range(1, a1 + 1), size):
            need = len(K) - deficiency
            if need < 1:
                continue
            complex_ = matching_complex(neighborhood(h, K))
            if not eta(complex_, cap=need).at_least(need):
                return HallReport(False, K, None)
    matching = _max_matching_edges(h)
    assert len(matching) >= a1 - deficiency
    return HallReport(True, None, tuple(matching[:max(a1 - deficiency, 0)]))


def _max_matching_edges(h: PartiteHypergraph) -> List[Tuple[int, ...]]:
    """A maximum matching witness (recomputing nu's branch and bound)."""
    best: List[Tuple[int, ...]] = []

    def rec(edges, chosen):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if not edges:
            return
        sizes = min(len({e[t] for e in edges}) for t in range(len(edges[0])))
        if len(chosen) + sizes <= len(best):
            return
        e, rest = edges[0], edges[1:]
        rec([f for f in rest if all(a != b for a, b in zip(e, f))], chosen + [e])
        rec(rest, chosen)

    rec(list(h.edges), [])
    return best


# --- CON's four-phase certificate strategy ----------------------------------


def con_certificate(g: Multigraph, f: WeightFunction, s) -> int:
    """Explosion count when CON plays the four-phase row/column order and NON
    replies exactly optimally.

    Requires f integral with values in {0, 1, 2}, row degrees <= 2s and
    column degrees <= 2.  Leftover mutually-disconnected cells cost one
    explosion each (the real game value there is infinite, so this only
    lowers the count).  The result is >= ceil(|f| / (2s + 2)).
    """
    s = Fraction(s)
    if s < 1:
        raise ValueError("s must be >= 1")
    cells = list(g.edges)
    w = {}
    total = ZERO
    for cell in cells:
        x = f[cell]
        if x not in (0, 1, 2):
            raise ValueError("weights must be in {0, 1, 2}")
        w[cell] = int(x)
        total += x
    row_deg: Dict[int, Fraction] = {}
    col_deg: Dict[int, Fraction] = {}
    for (b, c, _), x in w.items():
        row_deg[b] = row_deg.get(b, ZERO) + x
        col_deg[c] = col_deg.get(c, ZERO) + x
    if any(d > 2 * s for d in row_deg.values()):
        raise ValueError("row degree exceeds 2s")
    if any(d > 2 for d in col_deg.values()):
        raise ValueError("column degree exceeds 2")

    same_row = lambda p, q: p[0] == q[0]
    same_col = lambda p, q: p[1] == q[1]
    pairs = [(p, q) for i, p in enumerate(cells) for q in cells[i + 1:]
             if same_row(p, q) or same_col(p, q)]
    phase1 = [pq for pq in pairs if same_row(*pq) and w[pq[0]] + w[pq[1]] >= 2]
    phase2 = [pq for pq in pairs if same_col(*pq) and w[pq[0]] == w[pq[1]] == 1
              and pq not in phase1]
    phase3 = [pq for pq in pairs if same_row(*pq) and sorted((w[pq[0]], w[pq[1]])) == [0, 1]]
    used = set(phase1) | set(phase2) | set(phase3)
    phase4 = [pq for pq in pairs if pq not in used]
    order = phase1 + phase2 + phase3 + phase4

    adjacency = {cell: set() for cell in cells}
    for p, q in pairs:
        adjacency[p].add(q)
        adjacency[q].add(p)

    memo: Dict[object, int] = {}

    def value(alive: FrozenSet, deleted: FrozenSet) -> int:
        offer = next((pq for pq in order
                      if pq[0] in alive and pq[1] in alive and pq not in deleted), None)
        if offer is None:
            return len(alive)  # isolated leftovers: one explosion each
        key = (alive, deleted)
        hit = memo.get(key)
        if hit is not None:
            return hit
        del_val = value(alive, deleted | {offer})
        p, q = offer
        blast = {p, q}
        for cell in (p, q):
            for nb in adjacency[cell]:
                if nb in alive and _pair(cell, nb) not in deleted:
                    blast.add(nb)
        new_alive = alive - blast
        new_deleted = frozenset(pq for pq in deleted
                                if pq[0] in new_alive and pq[1] in new_alive)
        boom_val = value(new_alive, new_deleted) + 1
        res = min(del_val, boom_val)
        memo[key] = res
        return res

    result = value(frozenset(cells), frozenset())
    bound = ceil_frac(total / (2 * s + 2))
    assert result >= bound
    return result


def _pair(p, q):
    return (p, q) if p <= q else (q, p)


def con_lower_bound(f_total, s) -> int:
    """ceil(|f| / (2s + 2)), the certified connectivity bound."""
    return ceil_frac(Fraction(f_total) / (2 * Fraction(s) + 2))
