"""Cake-division instances with list acceptability oracles, exact nu^D
evaluation at a partition, and exhaustive grid search over rational
partitions at a fixed resolution.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Sequence, Set, Tuple

ONE = Fraction(1)

IndexVector = Tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    """One vector of nonnegative slice lengths per cake; each sums to 1."""

    cakes: Tuple[Tuple[Fraction, ...], ...]

    def __init__(self, cakes):
        cs = tuple(tuple(Fraction(x) for x in cake) for cake in cakes)
        for cake in cs:
            if any(x < 0 for x in cake):
                raise ValueError("slice lengths must be nonnegative")
            if sum(cake) != ONE:
                raise ValueError("each cake's slice lengths must sum to 1")
        object.__setattr__(self, "cakes", cs)


@dataclass(frozen=True)
class DivisionInstance:
    agent_count: int
    slice_counts: Tuple[int, ...]
    # (agent 1-based, Partition) -> set of acceptable index vectors
    oracle: Callable[[int, Partition], Set[IndexVector]]

    def accepted(self, i: int, p: Partition) -> Set[IndexVector]:
        out = self.oracle(i, p)
        for vec in out:
            if len(vec) != len(self.slice_counts):
                raise ValueError("oracle returned wrong arity")
            if any(not 1 <= j <= a for j, a in zip(vec, self.slice_counts)):
                raise ValueError(f"oracle returned out-of-range vector {vec}")
        return out


def _max_sum_pairs(pairs, v, w):
    best = max(v[j - 1] + w[k - 1] for j, k in pairs)
    return {(j, k) for j, k in pairs if v[j - 1] + w[k - 1] == best}


def instance_2n2_nn(n: int) -> DivisionInstance:
    """2n-2 agents, two cakes of n slices each; no partition placates all.

    Agents 1..n-1 hold the diagonal pair system, agents n..2n-2 the shifted
    diagonal (cyclically); a pair is acceptable when both slices are long
    (>= 1/(n-1)) or when it maximizes the length-sum within the agent's
    system (ties inclusive).
    """
    if n < 2:
        raise ValueError("n >= 2 required")
    a1 = {(j, j) for j in range(1, n + 1)}
    a2 = {(j, j % n + 1) for j in range(1, n + 1)}
    thr = Fraction(1, n - 1)

    def oracle(i: int, p: Partition) -> Set[IndexVector]:
        v, w = p.cakes
        ai = a1 if i <= n - 1 else a2
        b = {(j, k) for j in range(1, n + 1) for k in range(1, n + 1)
             if v[j - 1] >= thr and w[k - 1] >= thr}
        return b | _max_sum_pairs(ai, v, w)

    return DivisionInstance(2 * n - 2, (n, n), oracle)


def instance_nn_2n2(n: int) -> DivisionInstance:
    """n agents, cakes of n and 2n-2 slices; no partition placates all.

    Agent i's system pairs slice i of cake 1 with the first n-1 slices of
    cake 2 and slice i+1 (cyclically) with the last n-1 slices; acceptable
    pairs are the system's max-sum pairs, plus pairs with a long cake-1
    slice that simultaneously maximize both coordinates over all such pairs.
    """
    if n < 2:
        raise ValueError("n >= 2 required")
    thr = Fraction(1, n - 1)
    systems = {}
    for i in range(1, n + 1):
        systems[i] = ({(i, k) for k in range(1, n)} |
                      {(i % n + 1, k) for k in range(n, 2 * n - 1)})

    def oracle(i: int, p: Partition) -> Set[IndexVector]:
        v, w = p.cakes
        out = _max_sum_pairs(systems[i], v, w)
        b = {(j, k) for j in range(1, n + 1) for k in range(1, 2 * n - 1)
             if v[j - 1] >= thr}
        if b:
            vmax = max(v[j - 1] for j, _ in b)
            wmax = max(w[k - 1] for _, k in b)
            out = out | {(j, k) for j, k in b
                         if v[j - 1] == vmax and w[k - 1] == wmax}
        return out

    return DivisionInstance(n, (n, 2 * n - 2), oracle)


def nu_D(inst: DivisionInstance, p: Partition) -> int:
    """Largest number of agents assignable acceptable vectors that are
    pairwise distinct in every coordinate."""
    accepted = [sorted(inst.accepted(i, p)) for i in range(1, inst.agent_count + 1)]
    order = sorted(range(inst.agent_count), key=lambda i: len(accepted[i]))
    best = 0

    def rec(pos, chosen: List[IndexVector]):
        nonlocal best
        best = max(best, len(chosen))
        if pos == len(order) or len(chosen) + (len(order) - pos) <= best:
            return
        for vec in accepted[order[pos]]:
            if all(all(a != b for a, b in zip(vec, c)) for c in chosen):
                chosen.append(vec)
                rec(pos + 1, chosen)
                chosen.pop()
        rec(pos + 1, chosen)

    rec(0, [])
    return best


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def grid_partitions(slice_counts, q: int):
    """All partitions whose slice lengths are multiples of 1/q."""
    per_cake = [
        [tuple(Fraction(x, q) for x in comp) for comp in _compositions(q, a)]
        for a in slice_counts]
    for combo in itertools.product(*per_cake):
        yield Partition(combo)


def grid_max(inst: DivisionInstance, q: int):
    """Exhaustive (max nu^D, argmax partition) over the 1/q grid."""
    if q < 1:
        raise ValueError("resolution must be >= 1")
    best = -1
    arg = None
    for p in grid_partitions(inst.slice_counts, q):
        val = nu_D(inst, p)
        if val > best:
            best, arg = val, p
    return best, arg
