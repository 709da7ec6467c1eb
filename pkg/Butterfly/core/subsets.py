# Butterfly/core/subsets.py

"""Subsets of [n] as bit vectors and canonically ordered families of them.

Element ``i`` (1-based) lives in bit ``i - 1``. A family keeps its members as
raw masks sorted by ``(cardinality, value)``; the ``presence`` integer has bit
``m`` set for every member mask ``m``, which lets the checkers count members
below or above a set with one AND and a popcount.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from Butterfly.exceptions import GroundSizeError, PermutationError

MAX_GROUND = 16
MAX_BINOMIAL = 20
# presence-mask lattice tables are built up to this ground size
MAX_TABLE_GROUND = 12

_FACTORIALS = tuple(math.factorial(i) for i in range(MAX_BINOMIAL + 1))
_BINOMIALS = tuple(tuple(math.comb(n, k) for k in range(n + 1)) for n in range(MAX_BINOMIAL + 1))


def binomial(n: int, k: int) -> int:
    if not 0 <= n <= MAX_BINOMIAL:
        raise GroundSizeError(f"binomial table covers 0 <= n <= {MAX_BINOMIAL}, got n={n}")
    if k < 0 or k > n:
        return 0
    return _BINOMIALS[n][k]


def factorial(n: int) -> int:
    if not 0 <= n <= MAX_BINOMIAL:
        raise GroundSizeError(f"factorial table covers 0 <= n <= {MAX_BINOMIAL}, got n={n}")
    return _FACTORIALS[n]


def check_ground(n: int) -> int:
    if not isinstance(n, int) or not 1 <= n <= MAX_GROUND:
        raise GroundSizeError(f"ground size must satisfy 1 <= n <= {MAX_GROUND}, got {n!r}")
    return n


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(elements: Iterable[int]) -> int:
    value = 0
    for element in elements:
        value |= 1 << (element - 1)
    return value


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    index = 1
    while mask:
        if mask & 1:
            out.append(index)
        mask >>= 1
        index += 1
    return tuple(out)


def member_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


def format_mask(mask: int) -> str:
    return "{" + ",".join(str(e) for e in elements_of(mask)) + "}"


@dataclass(frozen=True, slots=True)
class Subset:
    bits: int
    n: int

    def __post_init__(self):
        check_ground(self.n)
        if self.bits < 0 or self.bits >> self.n:
            raise GroundSizeError(f"bits {self.bits:#x} exceed ground size {self.n}")

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> Subset:
        elements = tuple(elements)
        for element in elements:
            if not 1 <= element <= n:
                raise GroundSizeError(f"element {element} outside [1, {n}]")
        return cls(mask_of(elements), n)

    @classmethod
    def empty(cls, n: int) -> Subset:
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> Subset:
        return cls(full_mask(n), n)

    @property
    def elements(self) -> tuple[int, ...]:
        return elements_of(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.n and bool(self.bits >> (element - 1) & 1)

    def __lt__(self, other: Subset) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return format_mask(self.bits)

    def sort_key(self) -> tuple[int, int]:
        return member_key(self.bits)

    def _same_ground(self, other: Subset) -> None:
        if self.n != other.n:
            raise GroundSizeError(f"ground sizes differ: {self.n} vs {other.n}")

    def union(self, other: Subset) -> Subset:
        self._same_ground(other)
        return Subset(self.bits | other.bits, self.n)

    def intersect(self, other: Subset) -> Subset:
        self._same_ground(other)
        return Subset(self.bits & other.bits, self.n)

    def is_subset_of(self, other: Subset) -> bool:
        self._same_ground(other)
        return self.bits & ~other.bits == 0

    def is_proper_subset_of(self, other: Subset) -> bool:
        return self.bits != other.bits and self.is_subset_of(other)

    def complement(self) -> Subset:
        return Subset(full_mask(self.n) ^ self.bits, self.n)


@dataclass(frozen=True)
class Family:
    n: int
    masks: tuple[int, ...]
    presence: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        check_ground(self.n)
        limit = 1 << self.n
        unique = set()
        for mask in self.masks:
            if not isinstance(mask, int) or not 0 <= mask < limit:
                raise GroundSizeError(f"member {mask!r} does not fit ground size {self.n}")
            unique.add(mask)
        ordered = tuple(sorted(unique, key=member_key))
        presence = 0
        for mask in ordered:
            presence |= 1 << mask
        object.__setattr__(self, "masks", ordered)
        object.__setattr__(self, "presence", presence)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> Family:
        return cls(n, tuple(Subset.of(n, s).bits for s in sets))

    @classmethod
    def empty(cls, n: int) -> Family:
        return cls(n, ())

    @property
    def members(self) -> tuple[Subset, ...]:
        return tuple(Subset(mask, self.n) for mask in self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.members)

    def __contains__(self, item) -> bool:
        mask = item.bits if isinstance(item, Subset) else item
        return isinstance(mask, int) and mask >= 0 and bool(self.presence >> mask & 1)

    def __str__(self) -> str:
        return "{" + ", ".join(format_mask(m) for m in self.masks) + "}"

    def sizes(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.masks)

    def with_masks(self, extra: Iterable[int]) -> Family:
        return Family(self.n, self.masks + tuple(extra))

    def without_masks(self, removed: Iterable[int]) -> Family:
        removed = set(removed)
        return Family(self.n, tuple(m for m in self.masks if m not in removed))

    def union(self, other: Family) -> Family:
        if other.n != self.n:
            raise GroundSizeError(f"ground sizes differ: {self.n} vs {other.n}")
        return Family(self.n, self.masks + other.masks)

    @property
    def has_empty(self) -> bool:
        return bool(self.presence & 1)

    @property
    def has_full(self) -> bool:
        return bool(self.presence >> full_mask(self.n) & 1)


def complement_family(family: Family) -> Family:
    top = full_mask(family.n)
    return Family(family.n, tuple(top ^ m for m in family.masks))


def check_permutation(perm: Sequence[int], n: int) -> tuple[int, ...]:
    perm = tuple(perm)
    if len(perm) != n or sorted(perm) != list(range(1, n + 1)):
        raise PermutationError(f"{perm} is not a bijection of 1..{n}")
    return perm


def permute_mask(mask: int, perm: Sequence[int]) -> int:
    # perm[i - 1] is the image of element i
    image = 0
    index = 0
    while mask:
        if mask & 1:
            image |= 1 << (perm[index] - 1)
        mask >>= 1
        index += 1
    return image


def apply_permutation(family: Family, perm: Sequence[int]) -> Family:
    perm = check_permutation(perm, family.n)
    return Family(family.n, tuple(permute_mask(m, perm) for m in family.masks))


def level_masks(n: int, k: int) -> tuple[int, ...]:
    return tuple(mask_of(c) for c in combinations(range(1, n + 1), k))


def level(n: int, k: int) -> Family:
    check_ground(n)
    if not 0 <= k <= n:
        raise GroundSizeError(f"level index must satisfy 0 <= k <= {n}, got {k}")
    return Family(n, level_masks(n, k))


def two_levels(n: int, k: int) -> Family:
    check_ground(n)
    if not 0 <= k or k + 1 > n:
        raise GroundSizeError(f"two_levels needs 0 <= k and k + 1 <= {n}, got k={k}")
    return Family(n, level_masks(n, k) + level_masks(n, k + 1))


def power_set(n: int) -> Family:
    check_ground(n)
    return Family(n, tuple(range(1 << n)))


def middle_two_levels_size(n: int) -> int:
    half = n // 2
    return binomial(n, half) + binomial(n, half + 1)


@lru_cache(maxsize=MAX_TABLE_GROUND + 1)
def lattice_tables(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Presence masks of all subsets (``down``) and supersets (``up``) of every set."""
    check_ground(n)
    if n > MAX_TABLE_GROUND:
        raise GroundSizeError(f"lattice tables are limited to n <= {MAX_TABLE_GROUND}")
    size = 1 << n
    down = [0] * size
    for mask in range(size):
        acc = 0
        sub = mask
        while True:
            acc |= 1 << sub
            if sub == 0:
                break
            sub = (sub - 1) & mask
        down[mask] = acc
    top = size - 1
    up = [0] * size
    for mask in range(size):
        acc = 0
        free = top ^ mask
        sub = free
        while True:
            acc |= 1 << (mask | sub)
            if sub == 0:
                break
            sub = (sub - 1) & free
        up[mask] = acc
    return tuple(down), tuple(up)


def has_tables(n: int) -> bool:
    return n <= MAX_TABLE_GROUND
