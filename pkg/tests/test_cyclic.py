import pytest

from Butterfly.core.subsets import Family, Subset, level, two_levels
from Butterfly.exceptions import NotAnInterval, PermutationError, PreconditionFailed
from Butterfly.theory.cyclic import (CyclicPerm, IntervalFamily, check_interval_chain_bound,
                                     check_interval_family_bound, complement_interval_family,
                                     count_chains_through, count_chains_through_pair,
                                     count_interval_chains, double_count_audit, intervals_of,
                                     is_interval, iter_cyclic_perms, iter_interval_chains,
                                     sweep_interval_families)


def test_cyclic_perm_parse_and_format():
    cp = CyclicPerm.parse("1,3,2,4")
    assert cp.n == 4
    assert str(cp) == "1,3,2,4"
    with pytest.raises(PermutationError):
        CyclicPerm.parse("2,1,3")
    with pytest.raises(PermutationError):
        CyclicPerm.parse("1,2,2")
    with pytest.raises(PermutationError):
        CyclicPerm.parse("1,x")


def test_cyclic_perm_count():
    assert sum(1 for _ in iter_cyclic_perms(5)) == 24


def test_intervals_wrap_around():
    cp = CyclicPerm.identity(4)
    assert is_interval(Subset.of(4, [4, 1]), cp)
    assert not is_interval(Subset.of(4, [1, 3]), cp)
    assert is_interval(Subset.of(4, [1, 3]), CyclicPerm.parse("1,3,2,4"))
    assert is_interval(Subset.full(4), cp)
    with pytest.raises(PreconditionFailed):
        is_interval(Subset.empty(4), cp)
    with pytest.raises(PreconditionFailed):
        is_interval(Subset.of(3, [1]), cp)


def test_intervals_of_filters_members():
    cp = CyclicPerm.identity(4)
    family = Family.from_sets(4, [[], [1, 3], [2, 3], [1, 2, 4]])
    assert intervals_of(family, cp) == Family.from_sets(4, [[2, 3], [1, 2, 4]])


def test_interval_family_rejects_non_intervals():
    cp = CyclicPerm.identity(4)
    with pytest.raises(NotAnInterval):
        IntervalFamily(cp, Family.from_sets(4, [[1, 3]]))
    with pytest.raises(NotAnInterval):
        IntervalFamily(cp, Family.from_sets(4, [[]]))


def test_chains_are_nested_intervals():
    cp = CyclicPerm.parse("1,3,2,4")
    chains = list(iter_interval_chains(cp))
    assert len(chains) == 4 * 2 ** 2
    assert len(set(chains)) == len(chains)
    for chain in chains:
        assert [m.bit_count() for m in chain] == [1, 2, 3, 4]
        assert all(small & ~big == 0 for small, big in zip(chain, chain[1:]))
        assert all(is_interval(Subset(m, 4), cp) for m in chain)


@pytest.mark.parametrize("n", range(2, 13))
def test_count_interval_chains_closed_form(n):
    assert count_interval_chains(n) == n * 2 ** (n - 2)


@pytest.mark.parametrize("n", range(3, 11))
def test_chains_through_an_interval(n):
    cp = CyclicPerm.identity(n)
    for mask in cp.proper_intervals():
        assert count_chains_through(cp, Subset(mask, n)) == 2 ** (n - 2)


def test_chains_through_a_two_interval_at_n4():
    assert count_chains_through(CyclicPerm.identity(4), Subset.of(4, [2, 3])) == 4


@pytest.mark.parametrize("n", [*range(3, 9), *(pytest.param(n, marks=pytest.mark.slow) for n in (9, 10))])
def test_chains_through_nested_pairs(n):
    cp = CyclicPerm.identity(n)
    intervals = cp.proper_intervals()
    for a in intervals:
        for b in intervals:
            if a != b and a & ~b == 0:
                assert count_chains_through_pair(cp, Subset(a, n), Subset(b, n)) <= 2 ** (n - 3)


def test_chain_count_preconditions():
    cp = CyclicPerm.identity(4)
    with pytest.raises(PreconditionFailed):
        count_interval_chains(1)
    with pytest.raises(PreconditionFailed):
        count_chains_through(cp, Subset.full(4))
    with pytest.raises(NotAnInterval):
        count_chains_through(cp, Subset.of(4, [1, 3]))
    with pytest.raises(PreconditionFailed) as excinfo:
        count_chains_through_pair(cp, Subset.of(4, [1, 2]), Subset.of(4, [2, 3]))
    assert excinfo.value.reason == "not_nested"


def test_chain_bound_equality_on_two_intervals():
    cp = CyclicPerm.identity(4)
    fam = IntervalFamily(cp, Family.from_sets(4, [[1, 2], [2, 3], [3, 4], [4, 1]]))
    report = check_interval_chain_bound(fam)
    assert (report.m, report.a) == (4, 0)
    assert report.verdict.equality and report.verdict.hypotheses_ok


def test_chain_bound_counts_pendants_as_halves():
    cp = CyclicPerm.identity(4)
    fam = IntervalFamily(cp, Family.from_sets(4, [[1], [1, 2], [3, 4]]))
    report = check_interval_chain_bound(fam)
    assert (report.m, report.a) == (2, 1)
    assert report.verdict.lhs == 2 + 0.5


def test_chain_bound_flags_double_containment():
    cp = CyclicPerm.identity(4)
    fam = IntervalFamily(cp, Family.from_sets(4, [[2], [1, 2], [2, 3]]))
    report = check_interval_chain_bound(fam)
    assert "contained_in_two_members" in report.verdict.hypothesis_failures


def test_complement_interval_family():
    cp = CyclicPerm.identity(4)
    fam = IntervalFamily(cp, Family.from_sets(4, [[1], [2, 3]]))
    assert complement_interval_family(fam).members == Family.from_sets(4, [[2, 3, 4], [1, 4]])
    with pytest.raises(PreconditionFailed):
        complement_interval_family(IntervalFamily(cp, Family.from_sets(4, [[1, 2, 3, 4]])))


def test_interval_family_size_bound():
    cp = CyclicPerm.identity(4)
    fam = IntervalFamily(cp, Family(4, cp.proper_intervals()))
    verdict = check_interval_family_bound(fam)
    assert "star_violated" in verdict.hypothesis_failures
    fam = IntervalFamily(cp, Family.from_sets(4, [[1], [2], [3], [4], [1, 2], [2, 3], [3, 4], [4, 1]]))
    verdict = check_interval_family_bound(fam)
    assert verdict.hypotheses_ok and verdict.equality


@pytest.mark.parametrize("family, lhs", [
    (two_levels(3, 1), 12),
    (two_levels(4, 1), 48),
    (two_levels(4, 2), 48),
    (level(4, 2), 24),
    (Family.from_sets(4, [[1]]), 6),
])
def test_double_count_values(family, lhs):
    audit = double_count_audit(family)
    assert audit.lhs == lhs
    assert audit.identity_holds
    assert audit.bound_holds


def test_double_count_equality_for_middle_two_levels():
    assert double_count_audit(two_levels(3, 1)).equality
    audit = double_count_audit(two_levels(4, 2))
    assert (audit.lhs, audit.rhs, audit.pair_count) == (48, 48, 48)
    assert audit.to_dict()["equality"]


def test_double_count_preconditions(exceptional_n3):
    with pytest.raises(PreconditionFailed) as excinfo:
        double_count_audit(exceptional_n3)
    assert excinfo.value.reason == "boundary_member"
    with pytest.raises(PreconditionFailed) as excinfo:
        double_count_audit(Family.from_sets(9, [[1]]))
    assert excinfo.value.reason == "ground_size_too_large"


def test_sweep_n3():
    report = sweep_interval_families(3)
    assert report.families_checked == 2 ** 6
    assert report.ok


def test_sweep_n4_is_exhaustive():
    report = sweep_interval_families(4)
    assert report.families_checked == 2 ** 12
    assert report.ok
    assert report.max_star_size <= 8


def test_sweep_range():
    with pytest.raises(PreconditionFailed):
        sweep_interval_families(5)
