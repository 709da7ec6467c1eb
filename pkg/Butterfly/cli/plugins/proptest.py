# Butterfly/cli/plugins/proptest.py

from Butterfly.cli import EXIT_VIOLATION, RunReport, command, echo_args
from Butterfly.search.properties import SUITES, run_suite
from Butterfly.utils.logger import logger
from Butterfly.utils.messages import MSG_HELP_PROPTEST, MSG_NOTE_SUITE_SKIPPED
from Butterfly.vars import Var


@command("proptest", MSG_HELP_PROPTEST, arguments=[
    (("n",), {"type": int, "help": "ground set size"}),
    (("--cases",), {"type": int, "default": Var.PROPTEST_CASES, "help": "random families per suite"}),
    (("--suite",), {"choices": SUITES + ("all",), "default": "all"}),
])
async def proptest_command(args) -> RunReport:
    report = RunReport("proptest", echo_args(args), seed=args.seed)
    suites = SUITES if args.suite == "all" else (args.suite,)
    for suite in suites:
        result = run_suite(suite, args.n, args.cases, args.seed)
        report.add("proptest", result.to_dict())
        report.notes.extend(result.notes)
        if result.skipped:
            report.notes.append(MSG_NOTE_SUITE_SKIPPED.format(suite=suite, n=args.n))
        if not result.ok:
            logger.warning(f"proptest {suite} n={args.n} seed={args.seed}: {len(result.counterexamples)} counterexamples")
            report.fail(EXIT_VIOLATION)
    return report
