# Butterfly/cli/plugins/check.py

from Butterfly.cli import EXIT_VIOLATION, RunReport, command, echo_args
from Butterfly.core.family_io import family_to_dict, load_family
from Butterfly.theory.conditions import find_comparable_pair, find_fork_violation, find_star_violation
from Butterfly.utils.messages import MSG_HELP_CHECK, MSG_HELP_FAMILY

CONDITION_ALIASES = {
    "star": "star",
    "butterfly": "star",
    "fork": "fork_free",
    "fork_free": "fork_free",
    "antichain": "antichain",
}


def _witness(family, condition):
    if condition == "star":
        violation = find_star_violation(family)
        return violation.to_dict() if violation else None
    if condition == "fork_free":
        violation = find_fork_violation(family)
        return violation.to_dict() if violation else None
    pair = find_comparable_pair(family)
    return {"a": list(pair[0]), "b": list(pair[1])} if pair else None


@command("check", MSG_HELP_CHECK, arguments=[
    (("family",), {"help": MSG_HELP_FAMILY}),
    (("--condition", "-c"), {"choices": sorted(CONDITION_ALIASES), "default": "star"}),
])
async def check_command(args) -> RunReport:
    family = load_family(args.family)
    condition = CONDITION_ALIASES[args.condition]
    report = RunReport("check", echo_args(args, condition=condition, n=family.n, size=len(family)))
    witness = _witness(family, condition)
    verdict = report.add("condition", {
        "condition": condition,
        "satisfied": witness is None,
        "family": family_to_dict(family),
    })
    if witness is not None:
        verdict["witness"] = witness
        report.fail(EXIT_VIOLATION)
    return report
