# Butterfly/search/random_families.py

import random
from typing import Sequence, Union

from Butterfly.core.subsets import Family, check_ground, full_mask
from Butterfly.theory.conditions import fork_addition_ok, star_addition_ok

Seed = Union[int, str]
DensityProfile = Union[float, Sequence[float]]


def _rng(seed: Seed) -> random.Random:
    # str seeds hash through sha512, so they are stable across processes
    return random.Random(seed)


def _level_probability(profile: DensityProfile, n: int, size: int) -> float:
    if isinstance(profile, (int, float)):
        return float(profile)
    if len(profile) != n + 1:
        raise ValueError(f"density profile needs {n + 1} entries, one per level, got {len(profile)}")
    return float(profile[size])


def random_family(n: int, density: DensityProfile = 0.5, seed: Seed = 0) -> Family:
    """Each subset joins independently with the probability given for its level."""
    check_ground(n)
    rng = _rng(seed)
    masks = tuple(m for m in range(1 << n) if rng.random() < _level_probability(density, n, m.bit_count()))
    return Family(n, masks)


def _candidates(n: int, exclude_empty_and_full: bool) -> list:
    top = full_mask(n)
    return [m for m in range(1 << n) if not (exclude_empty_and_full and m in (0, top))]


def _greedy(n: int, seed: Seed, exclude_empty_and_full: bool, accept) -> Family:
    rng = _rng(seed)
    order = _candidates(n, exclude_empty_and_full)
    rng.shuffle(order)
    # a per-family attempt rate keeps small families in the mix
    rate = rng.uniform(0.3, 1.0)
    presence = 0
    masks = []
    for candidate in order:
        if rng.random() >= rate:
            continue
        if accept(presence, masks, candidate, n):
            presence |= 1 << candidate
            masks.append(candidate)
    return Family(n, tuple(masks))


def random_star_family(n: int, seed: Seed = 0, exclude_empty_and_full: bool = False) -> Family:
    """Randomized greedy insertion that rejects any set creating A ∪ B ⊆ C ∩ D."""
    check_ground(n)
    return _greedy(n, seed, exclude_empty_and_full, star_addition_ok)


def random_fork_free_family(n: int, seed: Seed = 0, exclude_full: bool = True) -> Family:
    check_ground(n)
    family = _greedy(n, seed, False, fork_addition_ok)
    if exclude_full and family.has_full:
        family = family.without_masks((full_mask(n),))
    return family
