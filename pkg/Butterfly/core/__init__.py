# Butterfly/core/__init__.py

from Butterfly.core.rational import Rat, format_rat, parse_rat
from Butterfly.core.subsets import (Family, Subset, apply_permutation, binomial,
                                    complement_family, factorial, level,
                                    power_set, two_levels)
from Butterfly.core.canonical import canonical_form, is_isomorphic

__all__ = [
    "Family", "Subset", "Rat", "format_rat", "parse_rat", "binomial", "factorial",
    "complement_family", "apply_permutation", "level", "two_levels", "power_set",
    "canonical_form", "is_isomorphic",
]
