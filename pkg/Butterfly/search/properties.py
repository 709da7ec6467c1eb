# Butterfly/search/properties.py

"""Seeded random-family property suites.

Every case draws its family from the string seed ``"{seed}:{suite}:{n}:{i}"``,
so a suite's verdict depends only on (seed, suite, n, cases).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

from Butterfly.core.family_io import format_family
from Butterfly.core.rational import format_rat
from Butterfly.core.subsets import Family, full_mask, middle_two_levels_size
from Butterfly.search.random_families import random_family, random_fork_free_family, random_star_family
from Butterfly.theory.conditions import find_star_violation
from Butterfly.theory.cyclic import double_count_audit
from Butterfly.theory.lym import fork_free_bound, lym_sum
from Butterfly.utils.logger import logger
from Butterfly.utils.messages import MSG_NOTE_SMALL_GROUND

SUITES = ("butterfly_lym", "max_size", "fork_free_size", "double_count")
# exhaustive sweeps replace random draws at and below this ground size
EXHAUSTIVE_GROUND = 2
DOUBLE_COUNT_DEFAULT_MAX = 7


def case_seed(seed: int, suite: str, n: int, index: int) -> str:
    return f"{seed}:{suite}:{n}:{index}"


def shrink_counterexample(family: Family, still_fails: Callable[[Family], bool]) -> Family:
    """Greedily drop members while the failure persists; the result is removal-minimal."""
    current = family
    changed = True
    while changed:
        changed = False
        for mask in current.masks:
            smaller = current.without_masks((mask,))
            if still_fails(smaller):
                current = smaller
                changed = True
                break
    return current


@dataclass
class SuiteResult:
    suite: str
    n: int
    cases: int = 0
    skipped: bool = False
    exhaustive: bool = False
    max_size: int = 0
    max_lym: Optional[Fraction] = None
    counterexamples: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> Dict[str, Any]:
        out = {
            "kind": "proptest",
            "suite": self.suite,
            "n": self.n,
            "cases": self.cases,
            "skipped": self.skipped,
            "exhaustive": self.exhaustive,
            "max_size": self.max_size,
            "counterexample_count": len(self.counterexamples),
            "counterexamples": self.counterexamples,
        }
        if self.max_lym is not None:
            out["max_lym"] = format_rat(self.max_lym)
        if self.notes:
            out["notes"] = self.notes
        return out


def _record_failure(result: SuiteResult, family: Family, fails: Callable[[Family], bool]) -> None:
    shrunk = shrink_counterexample(family, fails)
    logger.warning(f"{result.suite} n={result.n}: counterexample of size {len(family)} shrunk to {len(shrunk)}")
    result.counterexamples.append(format_family(shrunk))


def _butterfly_lym(n: int, cases: int, seed: int) -> SuiteResult:
    result = SuiteResult("butterfly_lym", n)
    if n < 3:
        result.skipped = True
        result.notes.append("the LYM bound of 2 is stated for n >= 3")
        return result

    def fails(family: Family) -> bool:
        return find_star_violation(family) is None and lym_sum(family) > 2

    for index in range(cases):
        family = random_star_family(n, case_seed(seed, result.suite, n, index), exclude_empty_and_full=True)
        value = lym_sum(family)
        result.cases += 1
        result.max_size = max(result.max_size, len(family))
        if result.max_lym is None or value > result.max_lym:
            result.max_lym = value
        if fails(family):
            _record_failure(result, family, fails)
    return result


def _star_sizes_exhaustive(n: int) -> SuiteResult:
    result = SuiteResult("max_size", n, exhaustive=True)
    for choice in range(1 << (1 << n)):
        family = Family(n, tuple(m for m in range(1 << n) if choice >> m & 1))
        result.cases += 1
        if find_star_violation(family) is None:
            result.max_size = max(result.max_size, len(family))
    bound = middle_two_levels_size(n)
    if result.max_size > bound:
        result.notes.append(MSG_NOTE_SMALL_GROUND.format(n=n, size=result.max_size, bound=bound))
    return result


def _max_size(n: int, cases: int, seed: int) -> SuiteResult:
    if n <= EXHAUSTIVE_GROUND:
        return _star_sizes_exhaustive(n)
    result = SuiteResult("max_size", n)
    limit = middle_two_levels_size(n)

    def fails(family: Family) -> bool:
        return find_star_violation(family) is None and len(family) > limit

    for index in range(cases):
        family = random_star_family(n, case_seed(seed, result.suite, n, index))
        result.cases += 1
        result.max_size = max(result.max_size, len(family))
        if fails(family):
            _record_failure(result, family, fails)
    return result


def _fork_free_size(n: int, cases: int, seed: int) -> SuiteResult:
    result = SuiteResult("fork_free_size", n)
    if n < 4:
        result.skipped = True
        result.notes.append("the fork-free size bound is stated for n >= 4")
        return result
    limit = fork_free_bound(n)

    def fails(family: Family) -> bool:
        return len(family) > limit

    for index in range(cases):
        family = random_fork_free_family(n, case_seed(seed, result.suite, n, index))
        result.cases += 1
        result.max_size = max(result.max_size, len(family))
        if fails(family):
            _record_failure(result, family, fails)
    return result


def _double_count(n: int, cases: int, seed: int) -> SuiteResult:
    result = SuiteResult("double_count", n)
    if not 2 <= n <= DOUBLE_COUNT_DEFAULT_MAX:
        result.skipped = True
        result.notes.append(f"the double count enumerates (n-1)! cyclic permutations; run for 2 <= n <= {DOUBLE_COUNT_DEFAULT_MAX}")
        return result
    top = full_mask(n)

    def identity_fails(family: Family) -> bool:
        audit = double_count_audit(family)
        return not audit.identity_holds

    def bound_fails(family: Family) -> bool:
        return find_star_violation(family) is None and not double_count_audit(family).bound_holds

    for index in range(cases):
        label = case_seed(seed, result.suite, n, index)
        family = random_family(n, 0.5, label).without_masks((0, top))
        result.cases += 1
        if identity_fails(family):
            _record_failure(result, family, identity_fails)
        star = random_star_family(n, label, exclude_empty_and_full=True)
        result.max_size = max(result.max_size, len(star))
        if bound_fails(star):
            _record_failure(result, star, bound_fails)
    return result


_RUNNERS = {
    "butterfly_lym": _butterfly_lym,
    "max_size": _max_size,
    "fork_free_size": _fork_free_size,
    "double_count": _double_count,
}


def run_suite(suite: str, n: int, cases: int, seed: int) -> SuiteResult:
    runner = _RUNNERS.get(suite)
    if runner is None:
        raise ValueError(f"unknown property suite '{suite}'; expected one of {SUITES}")
    return runner(n, cases, seed)
