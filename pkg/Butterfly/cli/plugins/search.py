# Butterfly/cli/plugins/search.py

from Butterfly.cli import EXIT_BUDGET, EXIT_VIOLATION, RunReport, command, echo_args
from Butterfly.core.family_io import family_to_dict
from Butterfly.core.subsets import middle_two_levels_size
from Butterfly.exceptions import BudgetExhausted
from Butterfly.search.catalog import build_extremal_report, enumerate_max_families_async
from Butterfly.search.cnf_export import export_star_cnf, solve_star_cnf
from Butterfly.search.engine import MAX_CERTIFIED_GROUND, effective_budget, max_family_async
from Butterfly.theory.lym import InequalityVerdict, fork_free_bound
from Butterfly.utils.logger import logger
from Butterfly.utils.messages import MSG_ERROR_BUDGET, MSG_HELP_SEARCH, MSG_NOTE_BEST_EFFORT, MSG_NOTE_LISTED_VIOLATES

CONDITION_ALIASES = {"star": "star", "fork_free": "fork_free", "fork": "fork_free"}


def _budget_exhausted(report: RunReport, e: BudgetExhausted) -> RunReport:
    report.add("budget_exhausted", e.result.to_dict())
    report.notes.append(MSG_ERROR_BUDGET.format(nodes=e.result.nodes_explored, optimum=e.result.optimum))
    report.fail(EXIT_BUDGET)
    return report


def _sat_cross_check(report: RunReport, n: int, condition: str, optimum: int) -> None:
    above = solve_star_cnf(n, optimum + 1, condition)
    at = solve_star_cnf(n, optimum, condition)
    ok = above is None and at is not None
    report.add("sat_cross_check", {
        "at_optimum": family_to_dict(at) if at is not None else None,
        "above_optimum_satisfiable": above is not None,
        "agrees": ok,
    })
    if not ok:
        logger.error(f"SAT cross-check disagrees with search at n={n} {condition}: optimum {optimum}")
        report.fail(EXIT_VIOLATION)


@command("search", MSG_HELP_SEARCH, arguments=[
    (("n",), {"type": int, "help": "ground set size"}),
    (("condition",), {"nargs": "?", "default": "star", "choices": sorted(CONDITION_ALIASES)}),
    (("--enumerate",), {"action": "store_true", "help": "list every isomorphism class of maximum families"}),
    (("--cnf",), {"metavar": "PATH", "help": "write a DIMACS CNF asking for a family one larger than the optimum"}),
    (("--sat-check",), {"action": "store_true", "help": "confirm the optimum with a SAT solver"}),
])
async def search_command(args) -> RunReport:
    condition = CONDITION_ALIASES[args.condition]
    budget = effective_budget(args.n, args.budget)
    report = RunReport("search", echo_args(args, condition=condition, budget=budget.to_dict()))
    if args.n > MAX_CERTIFIED_GROUND:
        report.notes.append(MSG_NOTE_BEST_EFFORT.format(n=args.n))

    try:
        result = await max_family_async(args.n, condition, budget, args.threads)
    except BudgetExhausted as e:
        return _budget_exhausted(report, e)
    report.add("search", result.to_dict())

    if condition == "star" and args.n >= 3:
        verdict = InequalityVerdict.compare(result.optimum, middle_two_levels_size(args.n))
        report.add("two_levels_size", verdict.to_dict())
        if not verdict.equality:
            report.fail(EXIT_VIOLATION)
    if condition == "fork_free" and args.n >= 4:
        verdict = InequalityVerdict.compare(result.optimum, fork_free_bound(args.n))
        report.add("fork_free_bound", verdict.to_dict())
        if not verdict.holds:
            report.fail(EXIT_VIOLATION)

    if args.sat_check:
        _sat_cross_check(report, args.n, condition, result.optimum)
    if args.cnf:
        cnf = export_star_cnf(args.n, result.optimum + 1, args.cnf, condition)
        report.add("cnf_export", {"path": args.cnf, "variables": cnf.nv, "clauses": len(cnf.clauses), "at_least": result.optimum + 1})

    if args.enumerate:
        try:
            catalog = await enumerate_max_families_async(args.n, condition, result.optimum, budget, args.threads)
        except BudgetExhausted as e:
            return _budget_exhausted(report, e)
        if condition == "star" and 3 <= args.n <= MAX_CERTIFIED_GROUND:
            extremal = build_extremal_report(catalog)
            report.add("extremal_catalog", extremal.to_dict())
            for item in extremal.listed:
                if not item.satisfies_star:
                    report.notes.append(MSG_NOTE_LISTED_VIOLATES.format(name=item.name))
            if not extremal.consistent:
                report.fail(EXIT_VIOLATION)
        else:
            report.add("catalog", catalog.to_dict())
    return report
