# Butterfly/search/engine.py

"""Exact maximum families by depth-first branch-and-bound.

Candidates are the 2^n subsets in canonical (size, value) order, so a newly
added set can only ever be a top of a forbidden configuration: everything
already chosen is no larger than it. That keeps the feasibility update to one
pass over the remaining candidates per inclusion.

The upper bound is a chain-partition bound: a butterfly-free family meets
every chain in at most three sets and a fork-free one in at most two, and the
symmetric chain decomposition partitions the lattice. No size theorem is used
for pruning.

Branches fix the first member to {1..s} (every family has a relabelling whose
least member is of that form), run independently, and are merged in branch
order, so optimum, witness and node counts do not depend on the worker count.
"""

import asyncio
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, Literal, Optional, Tuple

from Butterfly.core.canonical import canonical_form
from Butterfly.core.family_io import family_to_dict
from Butterfly.core.subsets import Family, check_ground, full_mask, lattice_tables, level, member_key, two_levels
from Butterfly.exceptions import BudgetExhausted, GroundSizeError, InconsistentOptimum
from Butterfly.search.pool import run_branches
from Butterfly.theory.conditions import find_fork_violation, find_star_violation
from Butterfly.utils.logger import logger
from Butterfly.vars import Var

SearchCondition = Literal["star", "fork_free"]
SEARCH_CONDITIONS = ("star", "fork_free")
# ground sizes above this are best-effort only
MAX_CERTIFIED_GROUND = 5
MAX_SEARCH_GROUND = 6

CHAIN_CAP = {"star": 3, "fork_free": 2}


@dataclass(frozen=True)
class SearchBudget:
    nodes: int = 0
    seconds: float = 0.0

    @classmethod
    def unlimited(cls) -> "SearchBudget":
        return cls()

    @property
    def limited(self) -> bool:
        return self.nodes > 0 or self.seconds > 0

    def to_dict(self) -> Dict[str, Any]:
        return {"nodes": self.nodes, "seconds": self.seconds}


@dataclass(frozen=True)
class SearchResult:
    n: int
    condition: str
    optimum: int
    witness: Family
    nodes_explored: int
    proof_complete: bool
    branch_nodes: Tuple[int, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "condition": self.condition,
            "optimum": self.optimum,
            "witness": family_to_dict(self.witness),
            "nodes_explored": self.nodes_explored,
            "proof_complete": self.proof_complete,
            "branch_nodes": list(self.branch_nodes),
        }


@dataclass
class BranchOutcome:
    first: int
    nodes: int = 0
    complete: bool = True
    best: Optional[Tuple[int, ...]] = None
    # canonical keys of families of the target size (enumeration only)
    classes: List[Tuple[int, ...]] = field(default_factory=list)
    inconsistent: Optional[Tuple[int, ...]] = None


class _Stop(Exception):
    pass


@lru_cache(maxsize=None)
def candidate_order(n: int) -> Tuple[int, ...]:
    return tuple(sorted(range(1 << n), key=member_key))


@lru_cache(maxsize=None)
def symmetric_chains(n: int) -> Tuple[Tuple[int, ...], ...]:
    """De Bruijn's symmetric chain decomposition of the subsets of [n]."""
    chains: List[List[int]] = [[0]]
    for element in range(n):
        bit = 1 << element
        grown = []
        for chain in chains:
            grown.append(chain + [chain[-1] | bit])
            if len(chain) > 1:
                grown.append([m | bit for m in chain[:-1]])
        chains = grown
    return tuple(tuple(chain) for chain in chains)


@lru_cache(maxsize=None)
def chain_presence(n: int) -> Tuple[int, ...]:
    out = []
    for chain in symmetric_chains(n):
        presence = 0
        for mask in chain:
            presence |= 1 << mask
        out.append(presence)
    return tuple(out)


def chain_bound(n: int, pool: int, cap: int) -> int:
    total = 0
    for chain in chain_presence(n):
        total += min(cap, (chain & pool).bit_count())
    return min(total, pool.bit_count())


class _BranchSearch:
    def __init__(self, n: int, condition: str, enumerate_target: int, floor: int, node_limit: int, seconds: float):
        self.n = n
        self.condition = condition
        self.cap = CHAIN_CAP[condition]
        self.order = candidate_order(n)
        self.down, self.up = lattice_tables(n)
        # max mode when enumerate_target is 0: only families larger than floor are recorded
        self.target = enumerate_target
        self.best_size = floor
        self.node_limit = node_limit
        self.seconds = seconds
        self.deadline = 0.0
        self.outcome: Optional[BranchOutcome] = None
        self.seen = set()

    def _include(self, x: int, index: int, presence: int, chosen: List[int], avail: int) -> int:
        avail &= ~(1 << x)
        if self.condition == "star":
            down = self.down
            for y in self.order[index + 1:]:
                if not avail >> y & 1:
                    continue
                if (presence & down[x & y]).bit_count() - (x & ~y == 0) >= 2:
                    avail &= ~(1 << y)
        else:
            up = self.up
            for z in chosen:
                if z & ~x == 0:
                    avail &= ~up[z]
        return avail

    def _tick(self) -> None:
        outcome = self.outcome
        outcome.nodes += 1
        if self.node_limit and outcome.nodes > self.node_limit:
            raise _Stop()
        if self.deadline and outcome.nodes & 1023 == 0 and time.time() > self.deadline:
            raise _Stop()

    def _leaf(self, chosen: List[int]) -> None:
        size = len(chosen)
        if self.target:
            if size > self.target:
                self.outcome.inconsistent = tuple(chosen)
                raise _Stop()
            if size == self.target:
                key = canonical_form(Family(self.n, tuple(chosen))).masks
                if key not in self.seen:
                    self.seen.add(key)
                    self.outcome.classes.append(key)
        elif size > self.best_size:
            self.best_size = size
            self.outcome.best = tuple(chosen)

    def _dfs(self, index: int, presence: int, chosen: List[int], avail: int) -> None:
        self._tick()
        order = self.order
        while index < len(order) and not avail >> order[index] & 1:
            index += 1
        if index == len(order):
            self._leaf(chosen)
            return
        bound = chain_bound(self.n, presence | avail, self.cap)
        if self.target:
            if bound < self.target:
                return
            if len(chosen) >= self.target:
                # an available candidate extends a target-size family
                self.outcome.inconsistent = tuple(chosen) + (order[index],)
                raise _Stop()
        elif bound <= self.best_size:
            return
        x = order[index]
        chosen.append(x)
        self._dfs(index + 1, presence | 1 << x, chosen, self._include(x, index, presence | 1 << x, chosen[:-1], avail))
        chosen.pop()
        self._dfs(index + 1, presence, chosen, avail & ~(1 << x))

    def run(self, first: int) -> BranchOutcome:
        self.outcome = BranchOutcome(first)
        # the time budget, like the node budget, is per branch
        self.deadline = time.time() + self.seconds if self.seconds else 0.0
        start = self.order.index(first)
        avail = 0
        for y in self.order[start:]:
            avail |= 1 << y
        try:
            avail = self._include(first, start, 1 << first, [], avail)
            self._dfs(start + 1, 1 << first, [first], avail)
        except _Stop:
            if self.outcome.inconsistent is None:
                self.outcome.complete = False
        return self.outcome


def explore_branch(n: int, condition: str, s: int, enumerate_target: int, floor: int, node_limit: int, seconds: float) -> BranchOutcome:
    """One root branch: families whose least member is {1..s}. Runs in worker processes."""
    return _BranchSearch(n, condition, enumerate_target, floor, node_limit, seconds).run(full_mask(s))


def lower_bound_witness(n: int, condition: str) -> Family:
    """The largest full-level construction for the condition."""
    if condition == "star":
        best = max((two_levels(n, k) for k in range(n)), key=len)
    else:
        best = max((level(n, k) for k in range(n + 1)), key=len)
    return best


def _check_search_args(n: int, condition: str) -> None:
    check_ground(n)
    if condition not in SEARCH_CONDITIONS:
        raise ValueError(f"unknown search condition '{condition}'; expected one of {SEARCH_CONDITIONS}")
    if not 1 <= n <= MAX_SEARCH_GROUND:
        raise GroundSizeError(f"search covers 1 <= n <= {MAX_SEARCH_GROUND}, got {n}")
    if n > MAX_CERTIFIED_GROUND:
        logger.warning(f"n={n} is beyond certified range; result is best-effort")


def effective_budget(n: int, budget: Optional[SearchBudget] = None) -> SearchBudget:
    """The budget a search actually runs with; unlimited runs above the certified range get a node cap per branch."""
    budget = budget or SearchBudget(Var.NODE_BUDGET, Var.TIME_BUDGET)
    if n > MAX_CERTIFIED_GROUND and not budget.limited:
        logger.info(f"n={n} has no budget; capping each branch at {Var.BEST_EFFORT_NODES} nodes")
        return SearchBudget(nodes=Var.BEST_EFFORT_NODES)
    return budget


def _satisfies(family: Family, condition: str) -> bool:
    if condition == "star":
        return find_star_violation(family) is None
    return find_fork_violation(family) is None


async def max_family_async(n: int, condition: SearchCondition = "star", budget: Optional[SearchBudget] = None, workers: int = 1) -> SearchResult:
    _check_search_args(n, condition)
    budget = effective_budget(n, budget)
    seed = lower_bound_witness(n, condition)
    jobs = [(n, condition, s, 0, len(seed), budget.nodes, budget.seconds) for s in range(n + 1)]
    logger.debug(f"max_family n={n} condition={condition}: {len(jobs)} branches, floor {len(seed)}")
    outcomes = await run_branches(explore_branch, jobs, workers)

    witness = seed
    for outcome in outcomes:
        logger.debug(f"branch {{1..{outcome.first.bit_count()}}}: {outcome.nodes} nodes, complete={outcome.complete}")
        if outcome.best is not None and len(outcome.best) > len(witness):
            witness = Family(n, outcome.best)
    if not _satisfies(witness, condition):
        raise InconsistentOptimum(f"search witness {witness} violates {condition}")
    result = SearchResult(
        n=n,
        condition=condition,
        optimum=len(witness),
        witness=witness,
        nodes_explored=sum(o.nodes for o in outcomes),
        proof_complete=all(o.complete for o in outcomes),
        branch_nodes=tuple(o.nodes for o in outcomes),
    )
    if not result.proof_complete:
        raise BudgetExhausted(result)
    return result


def max_family(n: int, condition: SearchCondition = "star", budget: Optional[SearchBudget] = None, workers: int = 1) -> SearchResult:
    return asyncio.run(max_family_async(n, condition, budget, workers))


@dataclass(frozen=True)
class EnumerationOutcome:
    classes: Tuple[Family, ...]
    nodes_explored: int
    proof_complete: bool


async def enumerate_classes_async(n: int, condition: SearchCondition, target: int, budget: Optional[SearchBudget] = None, workers: int = 1) -> EnumerationOutcome:
    """Canonical forms of every family of exactly ``target`` members satisfying ``condition``."""
    _check_search_args(n, condition)
    if target < 1:
        raise ValueError(f"target size must be positive, got {target}")
    budget = effective_budget(n, budget)
    jobs = [(n, condition, s, target, 0, budget.nodes, budget.seconds) for s in range(n + 1)]
    outcomes = await run_branches(explore_branch, jobs, workers)

    keys = set()
    for outcome in outcomes:
        if outcome.inconsistent is not None:
            raise InconsistentOptimum(
                f"found a {condition} family of size {len(outcome.inconsistent)} above the target {target}: "
                f"{Family(n, outcome.inconsistent)}"
            )
        logger.debug(f"branch {{1..{outcome.first.bit_count()}}}: {outcome.nodes} nodes, {len(outcome.classes)} classes")
        keys.update(outcome.classes)
    classes = tuple(Family(n, key) for key in sorted(keys, key=lambda k: tuple(member_key(m) for m in k)))
    return EnumerationOutcome(classes, sum(o.nodes for o in outcomes), all(o.complete for o in outcomes))
