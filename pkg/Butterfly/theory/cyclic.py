# Butterfly/theory/cyclic.py

"""Intervals along a cyclic permutation and the chain counts built on them.

A cyclic permutation of [n] is stored as its element order read from 1, so the
(n-1)! orders starting with 1 are exactly the distinct cyclic arrangements.
Positions are 0-based indices into that order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import permutations
from typing import Dict, Iterable, Iterator, List, NamedTuple, Tuple

from Butterfly.core.subsets import (Family, Subset, check_ground, complement_family,
                                    factorial, full_mask)
from Butterfly.exceptions import NotAnInterval, PermutationError, PreconditionFailed
from Butterfly.theory.conditions import find_star_violation
from Butterfly.theory.lym import InequalityVerdict

MAX_AUDIT_GROUND = 8
MAX_SWEEP_GROUND = 4


@dataclass(frozen=True)
class CyclicPerm:
    order: Tuple[int, ...]

    def __post_init__(self):
        order = tuple(self.order)
        n = len(order)
        check_ground(n)
        if sorted(order) != list(range(1, n + 1)):
            raise PermutationError(f"{order} is not an ordering of 1..{n}")
        if order[0] != 1:
            raise PermutationError(f"a cyclic permutation is written from 1, got {order}")
        object.__setattr__(self, "order", order)

    @classmethod
    def identity(cls, n: int) -> CyclicPerm:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> CyclicPerm:
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as e:
            raise PermutationError(f"cannot read cyclic permutation '{text}': {e}") from e

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.order)

    @property
    def n(self) -> int:
        return len(self.order)

    def arc(self, start: int, length: int) -> int:
        """Mask of the ``length`` elements read clockwise from position ``start``."""
        n = self.n
        mask = 0
        for step in range(length):
            mask |= 1 << (self.order[(start + step) % n] - 1)
        return mask

    @cached_property
    def interval_presence(self) -> int:
        """Bit ``m`` set for every mask ``m`` that is a nonempty interval, [n] included."""
        presence = 1 << full_mask(self.n)
        for length in range(1, self.n):
            for start in range(self.n):
                presence |= 1 << self.arc(start, length)
        return presence

    def proper_intervals(self) -> Tuple[int, ...]:
        """The n(n-1) proper nonempty intervals, by length then start position."""
        return tuple(self.arc(start, length) for length in range(1, self.n) for start in range(self.n))


def iter_cyclic_perms(n: int) -> Iterator[CyclicPerm]:
    check_ground(n)
    for tail in permutations(range(2, n + 1)):
        yield CyclicPerm((1,) + tail)


def _check_same_ground(s: Subset, cp: CyclicPerm) -> None:
    if s.n != cp.n:
        raise PreconditionFailed("ground_mismatch", f"{s} lives on n={s.n}, cyclic permutation on n={cp.n}")


def is_interval(s: Subset, cp: CyclicPerm) -> bool:
    _check_same_ground(s, cp)
    if s.bits == 0:
        raise PreconditionFailed("empty_set", "the empty set is not an interval")
    return bool(cp.interval_presence >> s.bits & 1)


def intervals_of(family: Family, cp: CyclicPerm) -> Family:
    if family.n != cp.n:
        raise PreconditionFailed("ground_mismatch", f"family on n={family.n}, cyclic permutation on n={cp.n}")
    return Family(family.n, tuple(m for m in family.masks if m and cp.interval_presence >> m & 1))


@dataclass(frozen=True)
class IntervalFamily:
    cp: CyclicPerm
    members: Family

    def __post_init__(self):
        if self.members.n != self.cp.n:
            raise PreconditionFailed("ground_mismatch", f"family on n={self.members.n}, cyclic permutation on n={self.cp.n}")
        for mask in self.members.masks:
            if mask == 0 or not self.cp.interval_presence >> mask & 1:
                raise NotAnInterval(Subset(mask, self.cp.n), self.cp)

    @property
    def n(self) -> int:
        return self.cp.n

    def __len__(self) -> int:
        return len(self.members)


def iter_interval_chains(cp: CyclicPerm, through: Iterable[int] = ()) -> Iterator[Tuple[int, ...]]:
    """Yield every chain L1 ⊂ … ⊂ Ln of intervals along ``cp`` as a tuple of masks.

    A chain grows from a singleton by one element on the left or right end; at
    length n-1 both ends add the same element, so there is one way to finish.
    ``through`` restricts to chains containing all the given masks.
    """
    n = cp.n
    required: Dict[int, int] = {}
    for mask in through:
        size = mask.bit_count()
        if required.get(size, mask) != mask:
            return
        required[size] = mask

    def fits(mask: int, length: int) -> bool:
        if length in required and required[length] != mask:
            return False
        return all(mask & ~r == 0 for size, r in required.items() if size > length)

    def grow(start: int, length: int, chain: List[int]) -> Iterator[Tuple[int, ...]]:
        if length == n:
            yield tuple(chain)
            return
        if length == n - 1:
            moves = [(start, length + 1)]
        else:
            moves = [((start - 1) % n, length + 1), (start, length + 1)]
        for new_start, new_length in moves:
            mask = cp.arc(new_start, new_length)
            if not fits(mask, new_length):
                continue
            chain.append(mask)
            yield from grow(new_start, new_length, chain)
            chain.pop()

    for start in range(n):
        mask = cp.arc(start, 1)
        if fits(mask, 1):
            yield from grow(start, 1, [mask])


def count_interval_chains(n: int) -> int:
    if n < 2:
        raise PreconditionFailed("ground_size_below_2", f"chain counts need n >= 2, got {n}")
    return sum(1 for _ in iter_interval_chains(CyclicPerm.identity(n)))


def _check_proper_interval(s: Subset, cp: CyclicPerm) -> None:
    _check_same_ground(s, cp)
    if s.bits == 0 or s.bits == full_mask(cp.n):
        raise PreconditionFailed("not_proper", f"{s} must be a proper nonempty interval")
    if not is_interval(s, cp):
        raise NotAnInterval(s, cp)


def count_chains_through(cp: CyclicPerm, f: Subset) -> int:
    _check_proper_interval(f, cp)
    return sum(1 for _ in iter_interval_chains(cp, (f.bits,)))


def count_chains_through_pair(cp: CyclicPerm, a: Subset, b: Subset) -> int:
    _check_proper_interval(a, cp)
    _check_proper_interval(b, cp)
    if not a.is_proper_subset_of(b):
        raise PreconditionFailed("not_nested", f"{a} must be a proper subset of {b}")
    return sum(1 for _ in iter_interval_chains(cp, (a.bits, b.bits)))


@dataclass(frozen=True)
class IntervalChainReport:
    m: int
    a: int
    verdict: InequalityVerdict

    def to_dict(self) -> dict:
        return {"m": self.m, "a": self.a, "verdict": self.verdict.to_dict()}


def _boundary_failures(family: Family) -> List[str]:
    failures = []
    if family.has_empty:
        failures.append("empty_set_member")
    if family.has_full:
        failures.append("full_set_member")
    return failures


def check_interval_chain_bound(fam: IntervalFamily) -> IntervalChainReport:
    """m + a/2 ≤ n, where m counts maximal members and a the rest."""
    members = fam.members
    failures = _boundary_failures(members)
    m = 0
    for x in members.masks:
        above = sum(1 for y in members.masks if y != x and x & ~y == 0)
        if above == 0:
            m += 1
        elif above > 1 and "contained_in_two_members" not in failures:
            failures.append("contained_in_two_members")
    a = len(members) - m
    verdict = InequalityVerdict.compare(m + Fraction(a, 2), fam.n, failures)
    return IntervalChainReport(m, a, verdict)


def complement_interval_family(fam: IntervalFamily) -> IntervalFamily:
    """Complements of proper intervals are intervals along the same cyclic permutation."""
    if fam.members.has_empty or fam.members.has_full:
        raise PreconditionFailed("boundary_member", "complementing needs ∅ and [n] absent")
    return IntervalFamily(fam.cp, complement_family(fam.members))


def check_interval_family_bound(fam: IntervalFamily) -> InequalityVerdict:
    """|F| ≤ 2n for butterfly-free interval families without ∅ and [n]."""
    failures = _boundary_failures(fam.members)
    details = {}
    violation = find_star_violation(fam.members)
    if violation is not None:
        failures.append("star_violated")
        details["star_witness"] = violation.to_dict()
    return InequalityVerdict.compare(len(fam.members), 2 * fam.n, failures, details)


class DoubleCountAudit(NamedTuple):
    lhs: int
    rhs: int
    pair_count: int

    @property
    def identity_holds(self) -> bool:
        return self.lhs == self.pair_count

    @property
    def bound_holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pair_count": self.pair_count,
            "identity_holds": self.identity_holds,
            "bound_holds": self.bound_holds,
            "equality": self.equality,
        }


@lru_cache(maxsize=MAX_AUDIT_GROUND + 1)
def cyclic_interval_presences(n: int) -> Tuple[int, ...]:
    """Interval presence masks of all (n-1)! cyclic permutations of [n]."""
    return tuple(cp.interval_presence for cp in iter_cyclic_perms(n))


def incidence_count(family: Family, presences: Iterable[int]) -> int:
    """Number of (cyclic permutation, member) pairs with the member an interval along it."""
    return sum((family.presence & presence).bit_count() for presence in presences)


def double_count_audit(family: Family) -> DoubleCountAudit:
    n = family.n
    if family.has_empty or family.has_full:
        raise PreconditionFailed("boundary_member", "the double count needs ∅ and [n] absent")
    if n > MAX_AUDIT_GROUND:
        raise PreconditionFailed("ground_size_too_large", f"enumerates (n-1)! cyclic permutations, limited to n <= {MAX_AUDIT_GROUND}")
    lhs = sum(factorial(m.bit_count()) * factorial(n - m.bit_count()) for m in family.masks)
    rhs = factorial(n - 1) * 2 * n
    return DoubleCountAudit(lhs, rhs, incidence_count(family, cyclic_interval_presences(n)))


@dataclass
class IntervalSweepReport:
    n: int
    families_checked: int = 0
    chain_bound_checked: int = 0
    complement_bound_checked: int = 0
    size_bound_checked: int = 0
    max_star_size: int = 0
    counterexamples: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "families_checked": self.families_checked,
            "chain_bound_checked": self.chain_bound_checked,
            "complement_bound_checked": self.complement_bound_checked,
            "size_bound_checked": self.size_bound_checked,
            "max_star_size": self.max_star_size,
            "counterexamples": self.counterexamples,
        }


def sweep_interval_families(n: int) -> IntervalSweepReport:
    """Every family of proper nonempty intervals along the identity order, checked against all three interval bounds."""
    if not 2 <= n <= MAX_SWEEP_GROUND:
        raise PreconditionFailed("ground_size_out_of_range", f"the exhaustive sweep covers 2 <= n <= {MAX_SWEEP_GROUND}, got {n}")
    cp = CyclicPerm.identity(n)
    intervals = cp.proper_intervals()
    report = IntervalSweepReport(n)
    for choice in range(1 << len(intervals)):
        masks = tuple(mask for index, mask in enumerate(intervals) if choice >> index & 1)
        fam = IntervalFamily(cp, Family(n, masks))
        report.families_checked += 1

        chain = check_interval_chain_bound(fam)
        if chain.verdict.hypotheses_ok:
            report.chain_bound_checked += 1
            if not chain.verdict.holds:
                report.counterexamples.append({"check": "chain_bound", "members": [list(s) for s in fam.members]})

        dual = check_interval_chain_bound(complement_interval_family(fam))
        if dual.verdict.hypotheses_ok:
            report.complement_bound_checked += 1
            if not dual.verdict.holds:
                report.counterexamples.append({"check": "complement_chain_bound", "members": [list(s) for s in fam.members]})

        size = check_interval_family_bound(fam)
        if size.hypotheses_ok:
            report.size_bound_checked += 1
            report.max_star_size = max(report.max_star_size, len(fam))
            if not size.holds:
                report.counterexamples.append({"check": "size_bound", "members": [list(s) for s in fam.members]})
    return report
