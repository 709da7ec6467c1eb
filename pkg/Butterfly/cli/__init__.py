# Butterfly/cli/__init__.py

import json
from dataclasses import dataclass, field
from typing import Any, Awaitable, Callable, Dict, List, Optional, Sequence, Tuple

from Butterfly.utils.logger import logger

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3


@dataclass
class RunReport:
    command: str
    inputs: Dict[str, Any]
    verdicts: List[Dict[str, Any]] = field(default_factory=list)
    timing_ms: float = 0.0
    seed: Optional[int] = None
    exit_code: int = EXIT_PASS
    notes: List[str] = field(default_factory=list)

    def add(self, kind: str, payload: Dict[str, Any]) -> Dict[str, Any]:
        verdict = {"kind": kind, **payload}
        self.verdicts.append(verdict)
        return verdict

    def fail(self, code: int) -> None:
        # a budget or input failure outranks a violation
        self.exit_code = max(self.exit_code, code)

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "verdicts": self.verdicts,
            "seed": self.seed,
            "exit_code": self.exit_code,
            "notes": self.notes,
        }
        if include_timing:
            out["timing_ms"] = round(self.timing_ms, 3)
        return out

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True)

    def verdict_payload(self) -> str:
        """Everything but the timing, for comparing runs."""
        return self.to_json(include_timing=False)


_NOT_ECHOED = {"json", "verbose", "command", "seed"}


def echo_args(args: Any, **extra: Any) -> Dict[str, Any]:
    """Parsed arguments as report inputs, with resolved defaults."""
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in _NOT_ECHOED:
            continue
        out[key] = value.to_dict() if hasattr(value, "to_dict") else value
    out.update(extra)
    return out


Argument = Tuple[Sequence[str], Dict[str, Any]]
Handler = Callable[[Any], Awaitable[RunReport]]


@dataclass
class Command:
    name: str
    help: str
    arguments: List[Argument]
    handler: Handler


commands: Dict[str, Command] = {}


def command(name: str, help: str, arguments: Optional[List[Argument]] = None) -> Callable[[Handler], Handler]:
    """Register an async handler ``(args) -> RunReport`` as a subcommand."""
    def decorator(handler: Handler) -> Handler:
        if name in commands:
            logger.debug(f"Command '{name}' registered again; keeping the latest handler")
        commands[name] = Command(name, help, list(arguments or []), handler)
        return handler
    return decorator
