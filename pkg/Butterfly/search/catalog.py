# Butterfly/search/catalog.py

import asyncio
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from Butterfly.core.canonical import canonical_form
from Butterfly.core.family_io import family_to_dict, format_family
from Butterfly.core.fixtures import EXCEPTIONAL_N3, EXCEPTIONAL_N4
from Butterfly.core.rational import format_rat
from Butterfly.core.subsets import Family, complement_family, middle_two_levels_size, two_levels
from Butterfly.exceptions import BudgetExhausted, GroundSizeError
from Butterfly.search.engine import (MAX_CERTIFIED_GROUND, SearchBudget, SearchCondition,
                                     SearchResult, enumerate_classes_async, max_family_async)
from Butterfly.theory.conditions import find_star_violation
from Butterfly.theory.lym import InequalityVerdict, check_butterfly_lym, fork_free_bound
from Butterfly.utils.logger import logger


@dataclass(frozen=True)
class ExtremalCatalog:
    n: int
    condition: str
    size: int
    classes: Tuple[Family, ...]
    proof_complete: bool = True
    nodes_explored: int = 0

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def optimum(self) -> int:
        return self.size

    def __contains__(self, family: Family) -> bool:
        return canonical_form(family) in self.classes

    def is_dual_closed(self) -> bool:
        return all(complement_family(c) in self for c in self.classes)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "condition": self.condition,
            "size": self.size,
            "class_count": self.class_count,
            "proof_complete": self.proof_complete,
            "nodes_explored": self.nodes_explored,
            "classes": [format_family(c) for c in self.classes],
        }


async def enumerate_max_families_async(
    n: int,
    condition: SearchCondition,
    optimum: int,
    budget: Optional[SearchBudget] = None,
    workers: int = 1,
) -> ExtremalCatalog:
    if n > MAX_CERTIFIED_GROUND:
        raise GroundSizeError(f"complete catalogs are limited to n <= {MAX_CERTIFIED_GROUND}, got {n}")
    outcome = await enumerate_classes_async(n, condition, optimum, budget, workers)
    catalog = ExtremalCatalog(n, condition, optimum, outcome.classes, outcome.proof_complete, outcome.nodes_explored)
    if not outcome.proof_complete:
        raise BudgetExhausted(catalog)
    return catalog


def enumerate_max_families(n: int, condition: SearchCondition, optimum: int, budget: Optional[SearchBudget] = None, workers: int = 1) -> ExtremalCatalog:
    return asyncio.run(enumerate_max_families_async(n, condition, optimum, budget, workers))


def is_two_consecutive_levels(family: Family) -> bool:
    sizes = set(family.sizes())
    if len(sizes) != 2:
        return False
    k = min(sizes)
    if max(sizes) != k + 1:
        return False
    return family == two_levels(family.n, k)


def _check_verify_range(n: int) -> None:
    if not 3 <= n <= MAX_CERTIFIED_GROUND:
        raise GroundSizeError(f"verification covers 3 <= n <= {MAX_CERTIFIED_GROUND}, got {n}")


@dataclass(frozen=True)
class MaxSizeReport:
    n: int
    expected: int
    result: SearchResult

    @property
    def holds(self) -> bool:
        return self.result.proof_complete and self.result.optimum == self.expected

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "expected": self.expected, "holds": self.holds, "result": self.result.to_dict()}


async def verify_max_size_async(n: int, budget: Optional[SearchBudget] = None, workers: int = 1) -> MaxSizeReport:
    """Certified star optimum against the two middle binomial coefficients."""
    _check_verify_range(n)
    result = await max_family_async(n, "star", budget, workers)
    report = MaxSizeReport(n, middle_two_levels_size(n), result)
    if not report.holds:
        logger.warning(f"n={n}: certified optimum {result.optimum} differs from {report.expected}")
    return report


def verify_max_size(n: int, budget: Optional[SearchBudget] = None, workers: int = 1) -> MaxSizeReport:
    return asyncio.run(verify_max_size_async(n, budget, workers))


def listed_extremal_families(n: int) -> List[Tuple[str, Family]]:
    """The extremal families usually listed for small n, including ones that do not survive checking."""
    listed = []
    for k in range(n):
        family = two_levels(n, k)
        if len(family) == middle_two_levels_size(n):
            listed.append((f"two-levels:{n}:{k}", family))
    if n == 3:
        listed.append(("exceptional-n3", EXCEPTIONAL_N3))
    if n == 4:
        listed.append(("exceptional-n4", EXCEPTIONAL_N4))
    return listed


@dataclass
class ClassReport:
    family: Family
    two_levels: bool
    lym: InequalityVerdict
    dual_in_catalog: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": family_to_dict(self.family),
            "two_levels": self.two_levels,
            "lym_sum": format_rat(self.lym.lhs),
            "lym": self.lym.to_dict(),
            "dual_in_catalog": self.dual_in_catalog,
        }


@dataclass
class ListedReport:
    name: str
    family: Family
    satisfies_star: bool
    in_catalog: bool
    lym: InequalityVerdict
    witness: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "family": family_to_dict(self.family),
            "satisfies_star": self.satisfies_star,
            "in_catalog": self.in_catalog,
            "lym_sum": format_rat(self.lym.lhs),
            "lym": self.lym.to_dict(),
            **({"witness": self.witness} if self.witness else {}),
        }


@dataclass
class ExtremalReport:
    n: int
    catalog: ExtremalCatalog
    classes: List[ClassReport] = field(default_factory=list)
    listed: List[ListedReport] = field(default_factory=list)

    @property
    def unlisted_classes(self) -> List[Family]:
        names = {canonical_form(item.family) for item in self.listed}
        return [c for c in self.catalog.classes if c not in names]

    @property
    def only_two_levels(self) -> bool:
        return all(item.two_levels for item in self.classes)

    @property
    def consistent(self) -> bool:
        """Every listed family is either in the catalog or fails the condition, and the catalog is closed under complements."""
        listed_ok = all(item.in_catalog or not item.satisfies_star for item in self.listed)
        return listed_ok and self.catalog.is_dual_closed()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "catalog": self.catalog.to_dict(),
            "classes": [c.to_dict() for c in self.classes],
            "listed": [item.to_dict() for item in self.listed],
            "unlisted_classes": [format_family(c) for c in self.unlisted_classes],
            "only_two_levels": self.only_two_levels,
            "consistent": self.consistent,
        }


def build_extremal_report(catalog: ExtremalCatalog) -> ExtremalReport:
    """Per-class LYM and duality facts, plus how the usually listed families fare against the catalog."""
    n = catalog.n
    report = ExtremalReport(n, catalog)
    for family in catalog.classes:
        report.classes.append(ClassReport(
            family=family,
            two_levels=is_two_consecutive_levels(family),
            lym=check_butterfly_lym(family),
            dual_in_catalog=complement_family(family) in catalog,
        ))
    for name, family in listed_extremal_families(n):
        violation = find_star_violation(family)
        report.listed.append(ListedReport(
            name=name,
            family=family,
            satisfies_star=violation is None,
            in_catalog=family in catalog,
            lym=check_butterfly_lym(family),
            witness=violation.to_dict() if violation else None,
        ))
        if violation is not None:
            logger.info(f"listed family {name} violates the butterfly condition: {violation.to_dict()}")
    return report


async def verify_extremal_classes_async(n: int, budget: Optional[SearchBudget] = None, workers: int = 1) -> ExtremalReport:
    _check_verify_range(n)
    result = await max_family_async(n, "star", budget, workers)
    catalog = await enumerate_max_families_async(n, "star", result.optimum, budget, workers)
    return build_extremal_report(catalog)


def verify_extremal_classes(n: int, budget: Optional[SearchBudget] = None, workers: int = 1) -> ExtremalReport:
    return asyncio.run(verify_extremal_classes_async(n, budget, workers))


async def verify_fork_free_bound_async(n: int, budget: Optional[SearchBudget] = None, workers: int = 1) -> Tuple[SearchResult, InequalityVerdict]:
    """Certified fork-free optimum compared with C(n,⌊n/2⌋)(1 + 2/(n-3))."""
    if not 4 <= n <= MAX_CERTIFIED_GROUND:
        raise GroundSizeError(f"fork-free verification covers 4 <= n <= {MAX_CERTIFIED_GROUND}, got {n}")
    result = await max_family_async(n, "fork_free", budget, workers)
    return result, InequalityVerdict.compare(result.optimum, fork_free_bound(n))


def verify_fork_free_bound(n: int, budget: Optional[SearchBudget] = None, workers: int = 1) -> Tuple[SearchResult, InequalityVerdict]:
    return asyncio.run(verify_fork_free_bound_async(n, budget, workers))
