# Butterfly/utils/config_parser.py

import argparse
import re

from Butterfly.search.engine import SearchBudget
from Butterfly.utils.logger import logger
from Butterfly.vars import Var

SECONDS_REGEX = re.compile(r"^(\d+(?:\.\d+)?)s$")

class BudgetParser:
    """Reads ``--budget`` values: node counts, ``<N>s`` for seconds, or a named preset."""

    PRESETS = {
        "tiny": SearchBudget(nodes=1000),
        "none": SearchBudget(),
    }

    def __call__(self, text: str) -> SearchBudget:
        return self.parse(text)

    def parse(self, text: str) -> SearchBudget:
        value = text.strip().lower()
        if value in self.PRESETS:
            return self.PRESETS[value]
        match = SECONDS_REGEX.match(value)
        if match:
            return SearchBudget(seconds=float(match.group(1)))
        if value.isdigit():
            return SearchBudget(nodes=int(value))
        logger.debug(f"Rejected budget value '{text}'")
        raise argparse.ArgumentTypeError(f"invalid budget '{text}': use a node count, '<N>s' or one of {sorted(self.PRESETS)}")

    @staticmethod
    def from_env() -> SearchBudget:
        return SearchBudget(nodes=Var.NODE_BUDGET, seconds=Var.TIME_BUDGET)
