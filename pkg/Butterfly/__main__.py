# Butterfly/__main__.py

import argparse
import asyncio
import glob
import importlib.util
import sys
import time
from pathlib import Path
from typing import List, Optional

from uvloop import install

install()

from Butterfly import __version__
from Butterfly.cli import (EXIT_BUDGET, EXIT_INPUT_ERROR, EXIT_VIOLATION, RunReport,
                           commands)
from Butterfly.exceptions import (BudgetExhausted, FamilyParseError, InconsistentOptimum,
                                  PreconditionFailed, WorkbenchError)
from Butterfly.utils.config_parser import BudgetParser
from Butterfly.utils.human_readable import process_usage
from Butterfly.utils.logger import logger, set_level
from Butterfly.utils.messages import (MSG_ERROR_BUDGET, MSG_ERROR_INCONSISTENT, MSG_ERROR_INPUT,
                                      MSG_ERROR_PRECONDITION, MSG_HELP_BUDGET, MSG_HELP_DESCRIPTION)
from Butterfly.utils.render_template import render_report
from Butterfly.utils.time_format import get_readable_time
from Butterfly.vars import Var

PLUGIN_PATH = str(Path(__file__).resolve().parent / "cli" / "plugins" / "*.py")
VERSION = __version__


def import_plugins() -> int:
    success_count = 0
    failed_plugins = []
    for file_path in sorted(glob.glob(PLUGIN_PATH)):
        plugin_path = Path(file_path)
        import_path = f"Butterfly.cli.plugins.{plugin_path.stem}"
        if import_path in sys.modules:
            success_count += 1
            continue
        try:
            spec = importlib.util.spec_from_file_location(import_path, plugin_path)
            if spec is None or spec.loader is None:
                logger.error(f"Invalid import spec for plugin {plugin_path.stem}")
                failed_plugins.append(plugin_path.stem)
                continue
            module = importlib.util.module_from_spec(spec)
            sys.modules[import_path] = module
            spec.loader.exec_module(module)
            success_count += 1
        except Exception as e:
            sys.modules.pop(import_path, None)
            logger.error(f"Failed to import plugin {plugin_path.stem}: {e}", exc_info=True)
            failed_plugins.append(plugin_path.stem)
    if failed_plugins:
        logger.warning(f"Plugins failed to load: {', '.join(failed_plugins)}")
    logger.debug(f"Loaded {success_count} command plugins")
    return success_count


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--seed", type=int, default=Var.DEFAULT_SEED, help="seed for random families")
    common.add_argument("--budget", type=BudgetParser(), default=BudgetParser.from_env(), help=MSG_HELP_BUDGET)
    common.add_argument("--threads", type=int, default=Var.WORKERS, help="worker processes for searches")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(prog="butterfly", description=MSG_HELP_DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, cmd in sorted(commands.items()):
        sub = subparsers.add_parser(name, help=cmd.help, description=cmd.help, parents=[common])
        for flags, kwargs in cmd.arguments:
            sub.add_argument(*flags, **kwargs)
    return parser


def _error_report(args, message: str, code: int) -> RunReport:
    report = RunReport(args.command, {})
    report.notes.append(message)
    report.fail(code)
    return report


async def execute(args) -> RunReport:
    """Run one subcommand and map workbench errors onto exit codes."""
    handler = commands[args.command].handler
    try:
        return await handler(args)
    except FamilyParseError as e:
        logger.debug(f"Parse error in {args.command} input: {e}")
        return _error_report(args, MSG_ERROR_INPUT.format(error=e), EXIT_INPUT_ERROR)
    except PreconditionFailed as e:
        report = _error_report(args, MSG_ERROR_PRECONDITION.format(reason=e.reason, detail=e.detail), EXIT_INPUT_ERROR)
        report.add("precondition", {"reason": e.reason, "detail": e.detail})
        return report
    except BudgetExhausted as e:
        report = _error_report(args, MSG_ERROR_BUDGET.format(nodes=e.result.nodes_explored, optimum=e.result.optimum), EXIT_BUDGET)
        report.add("budget_exhausted", e.result.to_dict())
        return report
    except InconsistentOptimum as e:
        logger.error(f"Inconsistent search state: {e}", exc_info=True)
        return _error_report(args, MSG_ERROR_INCONSISTENT.format(error=e), EXIT_VIOLATION)
    except (WorkbenchError, ValueError, OSError) as e:
        logger.warning(f"{args.command}: {e}")
        return _error_report(args, MSG_ERROR_INPUT.format(error=e), EXIT_INPUT_ERROR)


async def emit(report: RunReport, as_json: bool) -> str:
    if as_json:
        return report.to_json()
    return await render_report({
        "report": report.to_dict(),
        "elapsed": get_readable_time(report.timing_ms),
        "usage": process_usage(),
        "version": VERSION,
    })


async def run(argv: Optional[List[str]] = None) -> int:
    import_plugins()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT_ERROR if e.code else 0
    set_level("DEBUG" if args.verbose else Var.LOG_LEVEL)

    start = time.perf_counter()
    report = await execute(args)
    report.timing_ms = (time.perf_counter() - start) * 1000
    report.seed = args.seed
    logger.debug(f"{args.command} finished in {get_readable_time(report.timing_ms)} with exit code {report.exit_code}")

    output = await emit(report, args.json)
    sys.stdout.write(output if output.endswith("\n") else output + "\n")
    sys.stdout.flush()
    return report.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    return asyncio.run(run(argv))


if __name__ == "__main__":
    sys.exit(main())
