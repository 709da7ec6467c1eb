# Butterfly/core/canonical.py

from itertools import permutations
from typing import Iterator

from Butterfly.core.subsets import Family, member_key, permute_mask
from Butterfly.exceptions import CanonicalFormTooLarge
from Butterfly.vars import Var


def iter_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return permutations(range(1, n + 1))


def canonical_form(family: Family) -> Family:
    """Least relabelling of ``family`` in the (size, value) member order, over all n! permutations."""
    if family.n > Var.MAX_CANONICAL_N:
        raise CanonicalFormTooLarge(
            f"canonical_form scans n! relabellings and is limited to n <= {Var.MAX_CANONICAL_N}, got n={family.n}"
        )
    best = None
    for perm in iter_permutations(family.n):
        key = tuple(sorted(member_key(permute_mask(m, perm)) for m in family.masks))
        if best is None or key < best:
            best = key
    if best is None:
        return family
    return Family(family.n, tuple(value for _, value in best))


def is_isomorphic(first: Family, second: Family) -> bool:
    if first.n != second.n or len(first) != len(second) or sorted(first.sizes()) != sorted(second.sizes()):
        return False
    return canonical_form(first) == canonical_form(second)
