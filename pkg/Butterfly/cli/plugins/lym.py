# Butterfly/cli/plugins/lym.py

from Butterfly.cli import EXIT_VIOLATION, RunReport, command, echo_args
from Butterfly.core.family_io import load_family
from Butterfly.core.rational import format_rat
from Butterfly.theory.conditions import is_antichain
from Butterfly.theory.lym import check_butterfly_lym, check_butterfly_lym_split, lym_sum
from Butterfly.utils.messages import MSG_HELP_FAMILY, MSG_HELP_LYM, MSG_NOTE_HYPOTHESES


@command("lym", MSG_HELP_LYM, arguments=[
    (("family",), {"help": MSG_HELP_FAMILY}),
    (("--butterfly-bound", "-b"), {"action": "store_true", "help": "compare the sum with 2 for butterfly-free families without ∅ and [n]"}),
    (("--split",), {"action": "store_true", "help": "also evaluate the bound as two half-weight bounds over maximal and minimal members"}),
])
async def lym_command(args) -> RunReport:
    family = load_family(args.family)
    report = RunReport("lym", echo_args(args, n=family.n, size=len(family)))
    value = lym_sum(family)
    antichain = is_antichain(family)
    report.add("lym_sum", {
        "value": format_rat(value),
        "antichain": antichain,
        "classical_bound_holds": value <= 1 if antichain else None,
    })
    if antichain and value > 1:
        report.fail(EXIT_VIOLATION)

    if args.butterfly_bound:
        verdict = check_butterfly_lym(family)
        report.add("butterfly_lym", verdict.to_dict())
        if not verdict.hypotheses_ok:
            report.notes.append(MSG_NOTE_HYPOTHESES.format(failures=", ".join(verdict.hypothesis_failures)))
        elif not verdict.holds:
            report.fail(EXIT_VIOLATION)

    if args.split:
        split = check_butterfly_lym_split(family)
        report.add("butterfly_lym_split", split.to_dict())
    return report
