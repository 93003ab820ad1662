"""Families of d-intervals: point covers with per-component budgets and
rainbow matchings, decided exactly on rational endpoints.

A d-interval is a union of d open intervals, one on each of d parallel
copies of [0, 1].  Covers are decided exhaustively over one candidate point
per atomic segment of the endpoint arrangement; because the intervals are
open this candidate set is complete.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Interval = Tuple[Fraction, Fraction]  # open (lo, hi)


@dataclass(frozen=True)
class DInterval:
    parts: Tuple[Interval, ...]

    def __init__(self, parts):
        ps = []
        for lo, hi in parts:
            lo, hi = Fraction(lo), Fraction(hi)
            if not (0 <= lo < hi <= 1):
                raise ValueError(f"bad open interval ({lo}, {hi})")
            ps.append((lo, hi))
        object.__setattr__(self, "parts", tuple(ps))

    @property
    def d(self) -> int:
        return len(self.parts)

    def contains(self, t: int, x: Fraction) -> bool:
        lo, hi = self.parts[t]
        return lo < x < hi


def intersects(a: DInterval, b: DInterval) -> bool:
    """Do two d-intervals meet on some component?  (Open-interval overlap.)"""
    return any(lo1 < hi2 and lo2 < hi1
               for (lo1, hi1), (lo2, hi2) in zip(a.parts, b.parts))


@dataclass(frozen=True)
class DIntervalFamilies:
    d: int
    families: Tuple[Tuple[DInterval, ...], ...]

    def __init__(self, d, families):
        fams = tuple(tuple(f) for f in families)
        for fam in fams:
            for iv in fam:
                if iv.d != d:
                    raise ValueError("all members must have the same d")
        object.__setattr__(self, "d", int(d))
        object.__setattr__(self, "families", fams)


def _candidate_points(family: Sequence[DInterval], t: int) -> List[Fraction]:
    """One midpoint per atomic segment of component t's endpoint arrangement."""
    cuts = sorted({x for iv in family for x in iv.parts[t]} | {Fraction(0), Fraction(1)})
    return [(a + b) / 2 for a, b in zip(cuts, cuts[1:])]


def coverable(family: Sequence[DInterval], budgets) -> Optional[List[List[Fraction]]]:
    """Pierce every d-interval with at most budgets[t] points on component t.

    Returns the per-component cover point lists, or None when no cover within
    budget exists.
    """
    family = list(family)
    if not family:
        return [[] for _ in budgets]
    d = family[0].d
    if len(budgets) != d:
        raise ValueError("one budget per component required")
    candidates = [_candidate_points(family, t) for t in range(d)]
    choices_per_side = [
        list(itertools.combinations(candidates[t], budgets[t])) for t in range(d)]
    for pick in itertools.product(*choices_per_side):
        if all(any(iv.contains(t, x) for t in range(d) for x in pick[t])
               for iv in family):
            return [list(p) for p in pick]
    return None


def rainbow_matching(fams: DIntervalFamilies, target: int):
    """A pairwise-disjoint selection of one d-interval from each of >= target
    distinct families, or None if no such selection exists.

    Returns a list of (family_index, DInterval) pairs.
    """
    n = len(fams.families)
    if target > n:
        return None
    best: List[Tuple[int, DInterval]] = []

    def rec(i, chosen):
        nonlocal best
        if len(chosen) >= target:
            best = list(chosen)
            return True
        if len(chosen) + (n - i) < target:
            return False
        for iv in fams.families[i]:
            if all(not intersects(iv, prev) for _, prev in chosen):
                chosen.append((i, iv))
                if rec(i + 1, chosen):
                    return True
                chosen.pop()
        return rec(i + 1, chosen)

    return best if target == 0 or rec(0, []) else None


def im_premise_check(fams: DIntervalFamilies, a) -> bool:
    """True iff no family is coverable with a_t - 1 points per component."""
    budgets = [x - 1 for x in a]
    return all(coverable(fam, budgets) is None for fam in fams.families)
