from itertools import combinations, permutations

import pytest

from Butterfly.core.subsets import (Family, Subset, apply_permutation, complement_family, level, power_set,
                                    two_levels)
from Butterfly.exceptions import MultipleSupersets, NoSuperset, PreconditionFailed
from Butterfly.search.random_families import random_family, random_star_family
from Butterfly.theory.conditions import (decompose, find_comparable_pair, find_fork_violation,
                                         find_star_violation, fork_addition_ok, is_antichain,
                                         replace_empty_set, satisfies, star_addition_ok,
                                         unique_superset_map)


def _brute_star(family: Family) -> bool:
    masks = family.masks
    for c, d in combinations(masks, 2):
        inter = c & d
        lows = [m for m in masks if m not in (c, d) and m & ~inter == 0]
        if len(lows) >= 2:
            return False
    return True


def test_listed_n3_family_violates_star(exceptional_n3):
    violation = find_star_violation(exceptional_n3)
    assert violation is not None
    assert violation.to_dict() == {"a": [], "b": [1], "c": [1, 2], "d": [1, 3]}


def test_chain_violates_star(chain_n3):
    violation = find_star_violation(chain_n3)
    assert violation.to_dict() == {"a": [], "b": [1], "c": [1, 2], "d": [1, 2, 3]}


def test_star_holds_for_two_levels_and_n4_family(exceptional_n4):
    for n in range(2, 6):
        for k in range(n):
            assert satisfies(two_levels(n, k), "star")
    assert satisfies(exceptional_n4, "star")


def test_power_set_of_two_is_star_free():
    assert find_star_violation(power_set(2)) is None
    assert find_star_violation(power_set(3)) is not None


def test_star_checker_matches_pair_scan_on_all_n3_families():
    for choice in range(1 << 8):
        family = Family(3, tuple(m for m in range(8) if choice >> m & 1))
        assert (find_star_violation(family) is None) == _brute_star(family)


def test_fork_violation():
    family = Family.from_sets(3, [[1], [1, 2], [1, 3]])
    violation = find_fork_violation(family)
    assert violation.to_dict() == {"a": [1], "b": [1, 2], "c": [1, 3]}
    assert satisfies(level(4, 2), "fork_free")
    assert not satisfies(two_levels(4, 1), "fork_free")


def test_antichain_and_comparable_pair():
    assert is_antichain(level(4, 2))
    assert find_comparable_pair(level(4, 2)) is None
    family = level(3, 1).with_masks((0b011,))
    assert not satisfies(family, "antichain")
    a, b = find_comparable_pair(family)
    assert (list(a), list(b)) == ([1], [1, 2])


def test_unknown_condition():
    with pytest.raises(ValueError):
        satisfies(level(3, 1), "diamond")


def test_decompose_two_levels():
    parts = decompose(two_levels(4, 1))
    assert parts.m1 == level(4, 2)
    assert parts.m2 == level(4, 1)
    assert len(parts.mid) == 0
    assert len(parts.isolated) == 0


def test_decompose_isolated_and_middle():
    family = Family.from_sets(4, [[1], [2], [1, 2], [1, 2, 3], [4]])
    parts = decompose(family)
    assert list(map(list, parts.isolated)) == [[4]]
    assert list(map(list, parts.mid)) == [[1, 2]]


def test_unique_superset_map():
    tops = Family.from_sets(4, [[1, 2, 3], [2, 4]])
    mid = Family.from_sets(4, [[1, 2], [4]])
    mapping = unique_superset_map(mid, tops)
    assert mapping[Subset.of(4, [1, 2])] == Subset.of(4, [1, 2, 3])
    assert mapping[Subset.of(4, [4])] == Subset.of(4, [2, 4])
    with pytest.raises(NoSuperset):
        unique_superset_map(Family.from_sets(4, [[3, 4]]), tops)
    with pytest.raises(MultipleSupersets):
        unique_superset_map(Family.from_sets(4, [[2]]), tops)


def test_replace_empty_set_keeps_size_and_star():
    family = Family.from_sets(3, [[], [2], [2, 3]])
    replaced = replace_empty_set(family)
    assert replaced == Family.from_sets(3, [[1], [2], [2, 3]])
    assert len(replaced) == len(family)


def test_replace_empty_set_exhaustive_n3():
    checked = 0
    for choice in range(1 << 8):
        family = Family(3, tuple(m for m in range(8) if choice >> m & 1))
        if not family.has_empty or family.has_full or all(1 << e in family for e in range(3)):
            continue
        if find_star_violation(family) is not None:
            continue
        replaced = replace_empty_set(family)
        assert len(replaced) == len(family)
        assert find_star_violation(replaced) is None
        checked += 1
    assert checked > 0


def test_replace_empty_set_preconditions():
    with pytest.raises(PreconditionFailed) as excinfo:
        replace_empty_set(level(3, 1))
    assert excinfo.value.reason == "empty_set_absent"
    with pytest.raises(PreconditionFailed) as excinfo:
        replace_empty_set(Family.from_sets(3, [[], [1, 2, 3]]))
    assert excinfo.value.reason == "full_set_present"


def test_addition_checks_agree_with_checkers():
    for choice in range(1 << 8):
        family = Family(3, tuple(m for m in range(8) if choice >> m & 1))
        for candidate in range(8):
            if candidate in family:
                continue
            grown = family.with_masks((candidate,))
            if satisfies(family, "star"):
                assert star_addition_ok(family.presence, family.masks, candidate, 3) == satisfies(grown, "star")
            if satisfies(family, "fork_free"):
                assert fork_addition_ok(family.presence, family.masks, candidate, 3) == satisfies(grown, "fork_free")


def _all_families(n):
    for choice in range(1 << (1 << n)):
        yield Family(n, tuple(m for m in range(1 << n) if choice >> m & 1))


def _sampled_families(n, count):
    return [random_family(n, 0.5, f"cond:{n}:{index}") for index in range(count)] + [
        random_star_family(n, f"cond-star:{n}:{index}") for index in range(count)
    ]


def _quadruple_star(family: Family) -> bool:
    masks = family.masks
    for a, b, c, d in permutations(masks, 4):
        if (a | b) & ~(c & d) == 0:
            return False
    return True


@pytest.mark.parametrize("n", [4, 5])
def test_star_checker_matches_quadruple_scan_on_random_families(n):
    for family in _sampled_families(n, 40):
        assert (find_star_violation(family) is None) == _quadruple_star(family)


def test_star_checker_matches_quadruple_scan_on_all_n3_families():
    for family in _all_families(3):
        assert (find_star_violation(family) is None) == _quadruple_star(family)


def test_star_is_closed_under_complement_for_every_n3_family():
    for family in _all_families(3):
        assert satisfies(family, "star") == satisfies(complement_family(family), "star")


@pytest.mark.parametrize("n", [4, 5])
def test_star_is_closed_under_complement_on_random_families(n):
    for family in _sampled_families(n, 50):
        assert satisfies(family, "star") == satisfies(complement_family(family), "star")


def test_star_is_invariant_under_relabelling_n3():
    for family in _all_families(3):
        expected = satisfies(family, "star")
        for perm in permutations((1, 2, 3)):
            assert satisfies(apply_permutation(family, perm), "star") == expected


def test_star_is_monotone():
    for family in _sampled_families(4, 50):
        if satisfies(family, "star"):
            for mask in family.masks:
                assert satisfies(family.without_masks((mask,)), "star")
        else:
            for mask in range(16):
                assert not satisfies(family.with_masks((mask,)), "star")


def test_star_violation_is_also_a_fork():
    for family in _sampled_families(5, 50):
        violation = find_star_violation(family)
        if violation is not None:
            assert violation.a.is_proper_subset_of(violation.c)
            assert violation.a.is_proper_subset_of(violation.d)
            assert find_fork_violation(family) is not None


def test_decompose_places_middle_members_between_the_extremes():
    for family in _sampled_families(5, 30):
        parts = decompose(family)
        for a in parts.mid.masks:
            assert any(a != s and a & ~s == 0 for s in parts.m1.masks)
            assert any(a != s and s & ~a == 0 for s in parts.m2.masks)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_middle_members_of_star_families_hang_from_a_single_set(n):
    for index in range(60):
        family = random_star_family(n, f"hang:{n}:{index}")
        parts = decompose(family)
        mapping = unique_superset_map(parts.mid, parts.m1.union(parts.mid))
        assert set(mapping) == set(parts.mid)
        assert all(target.bits in parts.m1 for target in mapping.values())
