# Butterfly/theory/conditions.py

"""Checkers for the butterfly condition, fork-freeness and antichains.

The butterfly condition (``star``): no four distinct members A, B, C, D with
A ∪ B ⊆ C ∩ D. A family violates it iff some pair of distinct members C, D has
two further members inside C ∩ D, so the scan is over pairs, not quadruples.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Literal, Optional, Tuple

from Butterfly.core.subsets import Family, Subset, has_tables, lattice_tables
from Butterfly.exceptions import MultipleSupersets, NoSuperset, PreconditionFailed, GroundSizeError

Condition = Literal["star", "fork_free", "antichain"]
CONDITIONS = ("star", "fork_free", "antichain")


@dataclass(frozen=True)
class StarViolation:
    a: Subset
    b: Subset
    c: Subset
    d: Subset

    def to_dict(self) -> dict:
        return {"a": list(self.a), "b": list(self.b), "c": list(self.c), "d": list(self.d)}


@dataclass(frozen=True)
class ForkViolation:
    a: Subset
    b: Subset
    c: Subset

    def to_dict(self) -> dict:
        return {"a": list(self.a), "b": list(self.b), "c": list(self.c)}


@dataclass(frozen=True)
class Decomposition:
    m1: Family
    m2: Family
    mid: Family

    @property
    def isolated(self) -> Family:
        return Family(self.m1.n, tuple(m for m in self.m1.masks if m in self.m2))


def _below_count(family: Family, top: int) -> int:
    if has_tables(family.n):
        down, _ = lattice_tables(family.n)
        return (family.presence & down[top]).bit_count()
    return sum(1 for m in family.masks if m & ~top == 0)


def _above_count(family: Family, bottom: int) -> int:
    if has_tables(family.n):
        _, up = lattice_tables(family.n)
        return (family.presence & up[bottom]).bit_count()
    return sum(1 for m in family.masks if bottom & ~m == 0)


def find_star_violation(family: Family) -> Optional[StarViolation]:
    masks = family.masks
    for i, c in enumerate(masks):
        for d in masks[i + 1:]:
            inter = c & d
            count = _below_count(family, inter)
            # c or d itself lies inside c ∩ d when they are nested
            count -= (c & ~d == 0) + (d & ~c == 0)
            if count < 2:
                continue
            lows = [e for e in masks if e & ~inter == 0 and e != c and e != d][:2]
            n = family.n
            return StarViolation(Subset(lows[0], n), Subset(lows[1], n), Subset(c, n), Subset(d, n))
    return None


def find_fork_violation(family: Family) -> Optional[ForkViolation]:
    masks = family.masks
    for a in masks:
        if _above_count(family, a) < 3:
            continue
        b, c = [m for m in masks if m != a and a & ~m == 0][:2]
        n = family.n
        return ForkViolation(Subset(a, n), Subset(b, n), Subset(c, n))
    return None


def is_antichain(family: Family) -> bool:
    return all(_below_count(family, m) == 1 for m in family.masks)


def find_comparable_pair(family: Family) -> Optional[Tuple[Subset, Subset]]:
    """The first (A, B) with A ⊂ B, scanning B in canonical order."""
    n = family.n
    for b in family.masks:
        for a in family.masks:
            if a == b:
                break
            if a & ~b == 0:
                return Subset(a, n), Subset(b, n)
    return None


def satisfies(family: Family, condition: Condition) -> bool:
    if condition == "star":
        return find_star_violation(family) is None
    if condition == "fork_free":
        return find_fork_violation(family) is None
    if condition == "antichain":
        return is_antichain(family)
    raise ValueError(f"unknown condition '{condition}'; expected one of {CONDITIONS}")


def decompose(family: Family) -> Decomposition:
    maximal, minimal, rest = [], [], []
    for m in family.masks:
        is_max = _above_count(family, m) == 1
        is_min = _below_count(family, m) == 1
        if is_max:
            maximal.append(m)
        if is_min:
            minimal.append(m)
        if not is_max and not is_min:
            rest.append(m)
    n = family.n
    return Decomposition(Family(n, tuple(maximal)), Family(n, tuple(minimal)), Family(n, tuple(rest)))


def unique_superset_map(mid: Family, m: Family) -> Dict[Subset, Subset]:
    """Map each member of ``mid`` to the single member of ``m`` strictly containing it."""
    if mid.n != m.n:
        raise GroundSizeError(f"ground sizes differ: {mid.n} vs {m.n}")
    n = m.n
    mapping = {}
    for a in mid.masks:
        supersets = [s for s in m.masks if s != a and a & ~s == 0]
        if not supersets:
            raise NoSuperset(Subset(a, n))
        if len(supersets) > 1:
            raise MultipleSupersets(Subset(a, n), Subset(supersets[0], n), Subset(supersets[1], n))
        mapping[Subset(a, n)] = Subset(supersets[0], n)
    return mapping


def replace_empty_set(family: Family) -> Family:
    """Swap ∅ for the least singleton not in the family; keeps size and the butterfly condition."""
    n = family.n
    if not family.has_empty:
        raise PreconditionFailed("empty_set_absent", "the family does not contain the empty set")
    if family.has_full:
        raise PreconditionFailed("full_set_present", f"the family contains [{n}]")
    for element in range(n):
        singleton = 1 << element
        if singleton not in family:
            return Family(n, tuple(m for m in family.masks if m != 0) + (singleton,))
    raise PreconditionFailed("all_singletons_present", "the empty set and every singleton are members")


def star_addition_ok(family_presence: int, masks, candidate: int, n: int) -> bool:
    """Whether ``candidate`` can join a butterfly-free family without creating a violation."""
    down, _ = lattice_tables(n)
    supersets = []
    for d in masks:
        inter = candidate & d
        count = (family_presence & down[inter]).bit_count() - (d & ~candidate == 0)
        if count >= 2:
            return False
        if candidate & ~d == 0:
            supersets.append(d)
    for c, d in combinations(supersets, 2):
        inter = c & d
        count = (family_presence & down[inter]).bit_count() - (c & ~d == 0) - (d & ~c == 0)
        if count >= 1:
            return False
    return True


def fork_addition_ok(family_presence: int, masks, candidate: int, n: int) -> bool:
    down, up = lattice_tables(n)
    above = family_presence & up[candidate] & ~(1 << candidate)
    if above.bit_count() >= 2:
        return False
    below = family_presence & down[candidate] & ~(1 << candidate)
    if not below:
        return True
    for z in masks:
        if below >> z & 1 and (family_presence & up[z]).bit_count() >= 2:
            return False
    return True
