# Butterfly/cli/plugins/audit.py

from Butterfly.cli import EXIT_INPUT_ERROR, EXIT_VIOLATION, RunReport, command, echo_args
from Butterfly.core.family_io import load_family
from Butterfly.core.subsets import Subset
from Butterfly.exceptions import PreconditionFailed
from Butterfly.theory.conditions import find_star_violation
from Butterfly.theory.cyclic import (CyclicPerm, IntervalFamily, check_interval_chain_bound,
                                     check_interval_family_bound, count_chains_through,
                                     count_chains_through_pair, count_interval_chains,
                                     double_count_audit, sweep_interval_families)
from Butterfly.utils.messages import MSG_ERROR_PRECONDITION, MSG_HELP_AUDIT, MSG_HELP_FAMILY, MSG_NOTE_SWEEP

MIN_CHAIN_GROUND = 2
MAX_CHAIN_GROUND = 10


def _precondition(report: RunReport, e: PreconditionFailed) -> None:
    report.add("precondition", {"reason": e.reason, "detail": e.detail})
    report.notes.append(MSG_ERROR_PRECONDITION.format(reason=e.reason, detail=e.detail))
    report.fail(EXIT_INPUT_ERROR)


def _audit_family(report: RunReport, family, cp_text) -> None:
    try:
        audit = double_count_audit(family)
    except PreconditionFailed as e:
        _precondition(report, e)
        return
    star = find_star_violation(family) is None
    report.add("double_count", {**audit.to_dict(), "satisfies_star": star})
    if not audit.identity_holds or (star and not audit.bound_holds):
        report.fail(EXIT_VIOLATION)

    if cp_text is None:
        return
    try:
        fam = IntervalFamily(CyclicPerm.parse(cp_text), family)
    except PreconditionFailed as e:
        _precondition(report, e)
        return
    chain = check_interval_chain_bound(fam)
    size = check_interval_family_bound(fam)
    report.add("interval_chain_bound", chain.to_dict())
    report.add("interval_size_bound", size.to_dict())
    for verdict in (chain.verdict, size):
        if verdict.hypotheses_ok and not verdict.holds:
            report.fail(EXIT_VIOLATION)


def _chain_counts(report: RunReport, n: int) -> None:
    if not MIN_CHAIN_GROUND <= n <= MAX_CHAIN_GROUND:
        raise PreconditionFailed("ground_size_out_of_range", f"chain counts cover {MIN_CHAIN_GROUND} <= n <= {MAX_CHAIN_GROUND}, got {n}")
    cp = CyclicPerm.identity(n)
    total = count_interval_chains(n)
    expected_total = n * 2 ** (n - 2)
    through = {count_chains_through(cp, Subset(mask, n)) for mask in cp.proper_intervals()}
    pair_max = 0
    intervals = cp.proper_intervals()
    for a in intervals:
        for b in intervals:
            if a != b and a & ~b == 0:
                pair_max = max(pair_max, count_chains_through_pair(cp, Subset(a, n), Subset(b, n)))
    ok = total == expected_total and through == {2 ** (n - 2)} and (n < 3 or pair_max <= 2 ** (n - 3))
    report.add("chain_counts", {
        "n": n,
        "total": total,
        "expected_total": expected_total,
        "through_interval": sorted(through),
        "expected_through_interval": 2 ** (n - 2),
        "through_nested_pair_max": pair_max,
        "ok": ok,
    })
    if not ok:
        report.fail(EXIT_VIOLATION)


@command("audit", MSG_HELP_AUDIT, arguments=[
    (("family",), {"nargs": "?", "help": MSG_HELP_FAMILY}),
    (("--all-intervals",), {"type": int, "metavar": "N", "help": "exhaustive sweep of interval families along the identity order (n <= 4)"}),
    (("--chains",), {"type": int, "metavar": "N", "help": "check the interval chain counts in closed form"}),
    (("--cyclic",), {"metavar": "ORDER", "help": "also check the interval bounds along this cyclic order, e.g. 1,3,2,4"}),
])
async def audit_command(args) -> RunReport:
    report = RunReport("audit", echo_args(args))
    if args.family is None and args.all_intervals is None and args.chains is None:
        raise PreconditionFailed("no_input", "give a family, --all-intervals N or --chains N")

    if args.family is not None:
        family = load_family(args.family)
        report.inputs.update(n=family.n, size=len(family))
        _audit_family(report, family, args.cyclic)

    if args.all_intervals is not None:
        sweep = sweep_interval_families(args.all_intervals)
        report.add("interval_sweep", sweep.to_dict())
        report.notes.append(MSG_NOTE_SWEEP.format(families=sweep.families_checked, counterexamples=len(sweep.counterexamples)))
        if not sweep.ok:
            report.fail(EXIT_VIOLATION)

    if args.chains is not None:
        _chain_counts(report, args.chains)
    return report
