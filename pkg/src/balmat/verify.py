"""The batch verification suite: each check re-derives one of the headline
claims at desk scale and reports pass/fail with the values it saw.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import constructions as cons
from .cakecheck import grid_max, instance_2n2_nn, instance_nn_2n2
from .dinterval import DIntervalFamilies, rainbow_matching
from .hilbert import IntegralBalanced, decompose, hilbert_basis
from .hypergraph import (PartiteHypergraph, balanced_certificate, is_balanced,
                         nu, nu_oracle, nu_star, random_balanced)
from .rational import ceil_frac
from .search import (bm_search_exhaustive, random_graph, random_knn_balanced,
                     random_two_interval_family, random_weighted_multigraph)
from .topology import (INFINITE, Graph, betti, con_certificate, eta, hall_check,
                       independence_complex, line_graph, matching_complex, psi)


@dataclass
class CheckResult:
    name: str
    claim: str
    parameters: dict
    expected: object
    got: object
    passed: bool

    def to_json(self) -> dict:
        return {"name": self.name, "claim": self.claim,
                "parameters": self.parameters, "expected": str(self.expected),
                "got": str(self.got), "pass": self.passed}


CHECKS: Dict[str, Callable[..., CheckResult]] = {}


def _check(name):
    def deco(fn):
        CHECKS[name] = fn
        return fn
    return deco


@_check("pasch")
def check_pasch(h: Optional[PartiteHypergraph] = None) -> CheckResult:
    """The intersecting (2,2,2) quadruple: balanced, nu = 1, nu* = 2."""
    if h is None:
        h, _ = cons.pasch()
    got = (balanced_certificate(h) is not None, nu(h), nu_star(h))
    expected = (True, 1, Fraction(2))
    return CheckResult("pasch", "balanced, nu=1, nu*=2", {}, expected, got,
                       got == expected)


@_check("nnn")
def check_nnn() -> CheckResult:
    """Tight (n,n,n) family has nu = ceil(n/2); exhaustive (2,2,2) minimum is 1."""
    got = {}
    expected = {}
    for n in range(2, 7):
        h, f = cons.nnn_tight(n)
        expected[n] = (True, -(-n // 2))
        got[n] = (is_balanced(h, f), nu(h))
    report = bm_search_exhaustive((2, 2, 2))
    expected["search222"] = 1
    got["search222"] = report.min_nu
    return CheckResult("nnn", "nnn_tight nu = ceil(n/2); min over (2,2,2) is 1",
                       {"n": "2..6"}, expected, got, got == expected)


@_check("furedi")
def check_furedi(instances: int = 500) -> CheckResult:
    """nu >= ceil(nu*/(d-1)) on seeded random balanced instances."""
    shapes = [(2, 2), (3, 3), (2, 4), (4, 4), (5, 5), (2, 2, 2), (3, 3, 3),
              (4, 4, 4), (5, 5, 5), (2, 2, 4), (3, 3, 3), (2, 2, 2)]
    failures = []
    for i in range(instances):
        sizes = shapes[i % len(shapes)]
        h, _ = random_balanced(sizes, seed=i, layers=1 + i % 3)
        bound = ceil_frac(nu_star(h) / (h.d - 1))
        if nu(h) < bound:
            failures.append((sizes, i))
    return CheckResult("furedi", "nu >= ceil(nu*/(d-1))",
                       {"instances": instances}, [], failures, not failures)


@_check("ind-psi")
def check_ind_psi(sampled: int = 200, cap: int = 6) -> CheckResult:
    """eta(I(G)) >= Psi(G): exhaustive <= 5 vertices, then seeded 6-8 vertex
    graphs, with eta truncated at the cap."""
    import itertools
    failures = []

    def verdict(g: Graph):
        val = psi(g)
        need = cap if val is INFINITE else min(int(val), cap)
        if need > 0 and not eta(independence_complex(g), cap=cap).at_least(need):
            failures.append(g)

    for n in range(1, 6):
        pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
        for mask in range(2 ** len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            verdict(Graph(n, edges))
    for i in range(sampled):
        verdict(random_graph(seed=i))
    return CheckResult("ind-psi", "eta(I(G)) >= Psi(G) (capped)",
                       {"cap": cap, "sampled": sampled}, [], failures,
                       not failures)


@_check("matching-bound")
def check_matching_bound(instances: int = 100) -> CheckResult:
    """Psi(L(G)) and the explicit strategy both reach ceil(|f|/(2s+2))."""
    failures = []
    for i in range(instances):
        g, f, s = random_weighted_multigraph(seed=i)
        if len(g.edges) > 10:
            continue
        bound = ceil_frac(f.total() / (2 * s + 2))
        game = psi(line_graph(g))
        cert = con_certificate(g, f, s)
        if (game is not INFINITE and game < bound) or cert < bound:
            failures.append((i, game, cert, bound))
    return CheckResult("matching-bound",
                       "Psi(L(G)) and con_certificate >= ceil(|f|/(2s+2))",
                       {"instances": instances}, [], failures, not failures)


@_check("hall")
def check_hall(per_shape: int = 50) -> CheckResult:
    """Topological Hall deficiency check on balanced (k,n,n) instances."""
    failures = []
    for k, n in [(2, 3), (3, 4), (3, 5), (4, 5)]:
        deficiency = k - min(k, -(-n // 2))
        for i in range(per_shape):
            h, _ = random_knn_balanced(k, n, seed=i)
            report = hall_check(h, deficiency)
            if not report.all_K_pass or len(report.matching) < k - deficiency:
                failures.append((k, n, i, report.failing_K))
    return CheckResult("hall", "eta(M(N(K))) >= |K| - deficiency, all K",
                       {"per_shape": per_shape}, [], failures, not failures)


@_check("upper-bounds")
def check_upper_bounds(edge_cap: int = 40) -> CheckResult:
    """The explicit upper-bound families have exactly their claimed nu."""
    cases = []
    for n in range(2, 9):
        for k in range(3 * n // 4 + 1, n):
            try:
                cases.append((f"mlessn({k},{n})", cons.mlessn(k, n),
                              cons.mlessn_bound(k, n)))
            except ValueError:
                pass
    for n in range(2, 11):
        m = n // 2
        for k in range(m + 1, n + 1):
            try:
                cases.append((f"mlessn2({k},{n})", cons.mlessn2(k, n),
                              cons.mlessn2_bound(k, n)))
            except ValueError:
                pass
    for n in range(2, 8):
        for r2 in range(2, 7):
            r = Fraction(r2, 2)
            try:
                big = cons.main_negative_bound(n, r)
                for k in range(big, int(r * n) + 1):
                    cases.append((f"main_negative({n},{r},{k})",
                                  cons.main_negative(n, r, k), big))
            except ValueError:
                pass
    for n in range(2, 6):
        cases.append((f"drisko({n})", cons.drisko(n), n - 1))
    failures = []
    checked = 0
    for label, (h, f), claimed in cases:
        if len(h.edges) > edge_cap:
            continue
        checked += 1
        actual = nu(h)
        ok = (is_balanced(h, f) and actual == claimed
              and actual == nu_oracle(h))
        if not ok:
            failures.append((label, actual, claimed))
    return CheckResult("upper-bounds",
                       "generators balanced with exactly the claimed nu",
                       {"edge_cap": edge_cap, "checked": checked}, [],
                       failures, not failures)


@_check("zeta")
def check_zeta(n: int = 3) -> CheckResult:
    """The bipartite zeta witness: stated degrees and H_1(M(G)) nonzero."""
    g, f = cons.zeta_counterexample(n)
    wdict = f.as_dict()
    deg_a: Dict[int, Fraction] = {}
    deg_b: Dict[int, Fraction] = {}
    for (b, c, lab), w in wdict.items():
        deg_a[b] = deg_a.get(b, Fraction(0)) + w
        deg_b[c] = deg_b.get(c, Fraction(0)) + w
    got = (sorted(set(deg_a.values())), sorted(set(deg_b.values())),
           betti(matching_complex(g), n - 2) != 0)
    expected = ([Fraction(n - 1)], [Fraction(n, n - 1)], True)
    return CheckResult("zeta", "degrees (n-1, n/(n-1)); betti(M(G), n-2) != 0",
                       {"n": n}, expected, got, got == expected)


def _permutation_generators(n: int):
    import itertools
    out = set()
    for perm in itertools.permutations(range(1, n + 1)):
        out.add(tuple(sorted(((i + 1, perm[i]), 1) for i in range(n))))
    return out


def _star_generators(n: int, s: int):
    """Unions of n disjoint stars K_{1,s} on sides (n, s*n)."""
    import itertools
    out = set()
    cols = range(1, s * n + 1)
    for split in _set_partitions_equal(list(cols), n, s):
        out.add(tuple(sorted(((i + 1, c), 1)
                             for i, block in enumerate(split) for c in block)))
    return out


def _set_partitions_equal(items, blocks, size):
    """Ordered splits into `blocks` blocks of `size` (block i goes to row i)."""
    if not items:
        yield []
        return
    import itertools
    for block in itertools.combinations(items, size):
        remaining = [x for x in items if x not in block]
        for tail in _set_partitions_equal(remaining, blocks - 1, size):
            yield [block] + tail


@_check("gordan")
def check_gordan() -> CheckResult:
    """Generating sets at (2,2), (3,3), (2,4): permutations resp. star
    unions, and every balanced vector up to the cap decomposes over them."""
    from .hilbert import _integral_balanced_with_degrees
    from math import lcm
    plans = [((2, 2), 4, _permutation_generators(2)),
             ((3, 3), 6, _permutation_generators(3)),
             ((2, 4), 8, _star_generators(2, 2))]
    got = {}
    expected = {}
    ok = True
    for sizes, cap, want in plans:
        basis = hilbert_basis(sizes, cap)
        found = {g.weights for g in basis}
        expected[sizes] = sorted(want)
        got[sizes] = sorted(found)
        if found != want:
            ok = False
            continue
        step = lcm(*sizes)
        for norm in range(step, cap + 1, step):
            per_side = [norm // a for a in sizes]
            for w in _integral_balanced_with_degrees(sizes, per_side):
                if decompose(IntegralBalanced(sizes, w), basis) is None:
                    ok = False
    return CheckResult("gordan", "permutation/star generators, complete",
                       {}, "exact basis + completeness",
                       "ok" if ok else (expected, got), ok)


@_check("cake")
def check_cake(q: int = 6) -> CheckResult:
    """Neither counterexample instance placates all agents on the 1/q grid."""
    got = {}
    expected = {}
    for n in (2, 3):
        for label, inst in (("2n2_nn", instance_2n2_nn(n)),
                            ("nn_2n2", instance_nn_2n2(n))):
            best, _ = grid_max(inst, q)
            got[(label, n)] = best
            expected[(label, n)] = f"<= {n - 1}"
    ok = all(got[(label, n)] <= n - 1 for label, n in got)
    return CheckResult("cake", "grid max nu^D <= n-1 at resolution q",
                       {"q": q}, expected, got, ok)


@_check("tardos")
def check_tardos(per_m: int = 50) -> CheckResult:
    """Families of two-intervals with no m-per-line cover contain m+1
    pairwise disjoint members (via a rainbow matching on identical copies)."""
    failures = []
    for m in (1, 2):
        for i in range(per_m):
            family = random_two_interval_family(seed=i, m=m)
            fams = DIntervalFamilies(2, [family] * (m + 1))
            if rainbow_matching(fams, m + 1) is None:
                failures.append((m, i))
    return CheckResult("tardos", "no (m,m)-cover implies m+1 disjoint members",
                       {"per_m": per_m, "m": [1, 2]}, [], failures,
                       not failures)


def run_all(only: Optional[List[str]] = None) -> List[CheckResult]:
    names = only if only else list(CHECKS)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {unknown}")
    return [CHECKS[n]() for n in names]
