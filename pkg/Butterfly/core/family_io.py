# Butterfly/core/family_io.py

import os
import re
from typing import Any, Dict

from Butterfly.core.subsets import Family, check_ground, elements_of, mask_of
from Butterfly.exceptions import FamilyParseError, GroundSizeError
from Butterfly.utils.logger import logger

HEADER_REGEX = re.compile(r"^n\s*=\s*(\d+)$")
MEMBER_REGEX = re.compile(r"^\d+(\s*,\s*\d+)*$")
EMPTY_MEMBER = "{}"


def parse_family(text: str) -> Family:
    n = None
    masks = []
    seen = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            match = HEADER_REGEX.match(line)
            if not match:
                raise FamilyParseError(line_no, f"expected header 'n=<int>', got '{line}'")
            try:
                n = check_ground(int(match.group(1)))
            except GroundSizeError as e:
                raise FamilyParseError(line_no, str(e)) from e
            continue
        if line == EMPTY_MEMBER:
            elements = ()
        elif MEMBER_REGEX.match(line):
            elements = tuple(int(part) for part in line.split(","))
        else:
            raise FamilyParseError(line_no, f"member must be comma-separated integers or '{{}}', got '{line}'")
        if any(not 1 <= e <= n for e in elements):
            raise FamilyParseError(line_no, f"element outside [1, {n}] in '{line}'")
        if list(elements) != sorted(set(elements)):
            raise FamilyParseError(line_no, f"elements must be strictly ascending in '{line}'")
        mask = mask_of(elements)
        if mask in seen:
            raise FamilyParseError(line_no, f"duplicate member '{line}'")
        seen.add(mask)
        masks.append(mask)
    if n is None:
        raise FamilyParseError(1, "missing header 'n=<int>'")
    return Family(n, tuple(masks))


def format_member(mask: int) -> str:
    elements = elements_of(mask)
    return ",".join(str(e) for e in elements) if elements else EMPTY_MEMBER


def format_family(family: Family) -> str:
    lines = [f"n={family.n}"]
    lines.extend(format_member(m) for m in family.masks)
    return "\n".join(lines) + "\n"


def family_to_dict(family: Family) -> Dict[str, Any]:
    return {"n": family.n, "members": [list(elements_of(m)) for m in family.masks]}


def family_from_dict(data: Dict[str, Any]) -> Family:
    return Family.from_sets(int(data["n"]), data["members"])


def load_family(source: str) -> Family:
    """Read a family file, or resolve a built-in fixture name when no such file exists."""
    from Butterfly.core.fixtures import is_fixture_name, load_fixture

    if not os.path.exists(source) and is_fixture_name(source):
        return load_fixture(source)
    try:
        with open(source, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as e:
        logger.error(f"Error reading family file {source}: {e}")
        raise FamilyParseError(0, f"cannot read '{source}': {e.strerror or e}") from e
    return parse_family(text)
