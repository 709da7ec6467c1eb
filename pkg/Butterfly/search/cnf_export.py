# Butterfly/search/cnf_export.py

"""The maximum-family question as CNF: one variable per subset, one clause per
forbidden configuration, and a sequential-counter encoding of |F| ≥ k.

A satisfiable instance at the optimum and an unsatisfiable one just above it
give optimality evidence that does not depend on the branch-and-bound code.
"""

from itertools import combinations
from typing import Optional, Set

from pysat.card import CardEnc, EncType
from pysat.formula import CNF, IDPool
from pysat.solvers import Solver

from Butterfly.core.subsets import Family, check_ground, lattice_tables
from Butterfly.utils.logger import logger

SOLVER_NAME = "g4"


def subset_var(pool: IDPool, mask: int) -> int:
    return pool.id(("set", mask))


def forbidden_clauses(n: int, condition: str = "star") -> Set[frozenset]:
    """Each clause forbids one configuration; as sets of masks they are deduplicated."""
    check_ground(n)
    down, up = lattice_tables(n)
    masks = range(1 << n)
    out: Set[frozenset] = set()
    if condition == "star":
        for c, d in combinations(masks, 2):
            inter = c & d
            lows = [e for e in masks if down[inter] >> e & 1 and e != c and e != d]
            for a, b in combinations(lows, 2):
                out.add(frozenset((a, b, c, d)))
    elif condition == "fork_free":
        for a in masks:
            highs = [m for m in masks if up[a] >> m & 1 and m != a]
            for b, c in combinations(highs, 2):
                out.add(frozenset((a, b, c)))
    else:
        raise ValueError(f"unknown condition '{condition}' for CNF export")
    return out


def build_star_cnf(n: int, at_least: int, condition: str = "star") -> CNF:
    pool = IDPool()
    lits = [subset_var(pool, m) for m in range(1 << n)]
    cnf = CNF()
    for clause in sorted(forbidden_clauses(n, condition), key=sorted):
        cnf.append([-subset_var(pool, m) for m in sorted(clause)])
    if at_least > 0:
        card = CardEnc.atleast(lits=lits, bound=at_least, vpool=pool, encoding=EncType.seqcounter)
        cnf.extend(card.clauses)
    logger.debug(f"CNF for n={n} {condition} |F| >= {at_least}: {cnf.nv} vars, {len(cnf.clauses)} clauses")
    return cnf


def export_star_cnf(n: int, at_least: int, path: str, condition: str = "star") -> CNF:
    cnf = build_star_cnf(n, at_least, condition)
    comments = [f"c {condition} families on [{n}] with at least {at_least} members",
                f"c variable i+1 is the subset with bit mask i, for i < {1 << n}"]
    cnf.to_file(path, comments=comments)
    return cnf


def solve_star_cnf(n: int, at_least: int, condition: str = "star") -> Optional[Family]:
    """A family of at least ``at_least`` members satisfying the condition, or None if none exists."""
    if at_least > 1 << n:
        return None
    cnf = build_star_cnf(n, at_least, condition)
    with Solver(name=SOLVER_NAME, bootstrap_with=cnf.clauses) as solver:
        if not solver.solve():
            return None
        model = set(lit for lit in solver.get_model() if lit > 0)
    # set variables were registered first, so mask m has id m + 1
    return Family(n, tuple(m for m in range(1 << n) if m + 1 in model))
