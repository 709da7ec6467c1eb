# Butterfly/core/fixtures.py

from typing import Callable, Dict

from Butterfly.core.subsets import Family, level, two_levels
from Butterfly.exceptions import FixtureNotFound, GroundSizeError

# the small-n extremal families as they are usually printed
EXCEPTIONAL_N3 = Family.from_sets(3, [[], [1], [2], [1, 2], [2, 3], [1, 3]])
EXCEPTIONAL_N4 = level(4, 2).union(Family.from_sets(4, [[1], [2, 3, 4], [2], [1, 3, 4]]))

_NAMED: Dict[str, Callable[[], Family]] = {
    "exceptional-n3": lambda: EXCEPTIONAL_N3,
    "exceptional-n4": lambda: EXCEPTIONAL_N4,
}

_PARAMETRIC: Dict[str, Callable[[int, int], Family]] = {
    "two-levels": two_levels,
    "level": level,
}


def fixture_names() -> list:
    return sorted(_NAMED) + [f"{name}:<n>:<k>" for name in sorted(_PARAMETRIC)]


def is_fixture_name(name: str) -> bool:
    return name in _NAMED or name.split(":", 1)[0] in _PARAMETRIC


def load_fixture(name: str) -> Family:
    if name in _NAMED:
        return _NAMED[name]()
    head, _, rest = name.partition(":")
    builder = _PARAMETRIC.get(head)
    if builder is None:
        raise FixtureNotFound(f"unknown fixture '{name}'; known: {', '.join(fixture_names())}")
    parts = rest.split(":")
    if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
        raise FixtureNotFound(f"fixture '{name}' must look like {head}:<n>:<k>")
    try:
        return builder(int(parts[0]), int(parts[1]))
    except GroundSizeError as e:
        raise FixtureNotFound(f"fixture '{name}': {e}") from e
