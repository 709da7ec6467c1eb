import math
import random
from fractions import Fraction
from itertools import permutations

import pytest

from Butterfly.core.canonical import canonical_form, is_isomorphic
from Butterfly.core.family_io import (family_from_dict, family_to_dict, format_family,
                                      load_family, parse_family)
from Butterfly.core.fixtures import load_fixture
from Butterfly.core.rational import Rat, format_rat, parse_rat
from Butterfly.core.subsets import (Family, Subset, apply_permutation, binomial, complement_family,
                                    lattice_tables, level, middle_two_levels_size, power_set, two_levels)
from Butterfly.exceptions import (CanonicalFormTooLarge, FamilyParseError, FixtureNotFound,
                                  GroundSizeError, PermutationError)


def test_subset_operations():
    a = Subset.of(4, [1, 2])
    b = Subset.of(4, [2, 3])
    assert list(a.union(b)) == [1, 2, 3]
    assert list(a.intersect(b)) == [2]
    assert a.intersect(b).is_subset_of(a)
    assert not a.is_subset_of(b)
    assert list(a.complement()) == [3, 4]
    assert str(Subset.empty(4)) == "{}"
    assert len(Subset.full(4)) == 4


def test_subset_rejects_foreign_elements():
    with pytest.raises(GroundSizeError):
        Subset.of(3, [4])
    with pytest.raises(GroundSizeError):
        Subset.of(3, [1]).union(Subset.of(4, [1]))


def test_binomial_edges():
    assert binomial(4, 2) == 6
    assert binomial(5, 0) == 1
    assert binomial(3, 4) == 0
    assert binomial(3, -1) == 0
    with pytest.raises(GroundSizeError):
        binomial(21, 3)


def test_family_is_canonically_ordered_and_deduplicated():
    family = Family.from_sets(3, [[1, 2], [], [3], [1, 2], [1]])
    assert [list(s) for s in family] == [[], [1], [3], [1, 2]]
    assert len(family) == 4
    assert family.has_empty and not family.has_full


def test_levels():
    assert len(level(4, 2)) == 6
    assert len(two_levels(4, 1)) == 10
    assert len(power_set(3)) == 8
    assert middle_two_levels_size(3) == 6
    assert middle_two_levels_size(4) == 10
    assert middle_two_levels_size(5) == 20
    with pytest.raises(GroundSizeError):
        two_levels(3, 3)


def test_complement_is_an_involution(exceptional_n4):
    assert complement_family(complement_family(exceptional_n4)) == exceptional_n4
    assert complement_family(two_levels(4, 1)) == two_levels(4, 2)


def test_apply_permutation():
    family = Family.from_sets(3, [[1], [1, 2]])
    moved = apply_permutation(family, (2, 3, 1))
    assert moved == Family.from_sets(3, [[2], [2, 3]])
    with pytest.raises(PermutationError):
        apply_permutation(family, (1, 1, 2))


def test_canonical_form_identifies_isomorphic_families():
    first = Family.from_sets(4, [[1], [1, 2], [3, 4]])
    second = Family.from_sets(4, [[4], [2, 4], [1, 3]])
    assert canonical_form(first) == canonical_form(second)
    assert is_isomorphic(first, second)
    assert not is_isomorphic(first, Family.from_sets(4, [[1], [2, 3], [3, 4]]))


def test_canonical_form_is_refused_above_the_limit():
    with pytest.raises(CanonicalFormTooLarge):
        canonical_form(Family.from_sets(9, [[1]]))


def test_exceptional_n4_is_self_dual_up_to_isomorphism(exceptional_n4):
    assert is_isomorphic(complement_family(exceptional_n4), exceptional_n4)


def test_lattice_tables_count_subsets():
    down, up = lattice_tables(4)
    full = 0b1111
    assert down[full].bit_count() == 16
    assert up[0].bit_count() == 16
    assert down[0b0101].bit_count() == 4
    assert up[0b0101].bit_count() == 4


def test_parse_and_format_family():
    text = "n=3\n{}\n1\n1,2\n\n# comment\n2,3\n"
    family = parse_family(text)
    assert family == Family.from_sets(3, [[], [1], [1, 2], [2, 3]])
    assert parse_family(format_family(family)) == family
    assert family_from_dict(family_to_dict(family)) == family
    assert family_to_dict(family) == {"n": 3, "members": [[], [1], [1, 2], [2, 3]]}


@pytest.mark.parametrize("text, line", [
    ("hello\n", 1),
    ("n=3\n1,4\n", 2),
    ("n=3\n2,1\n", 2),
    ("n=3\n1\n1\n", 3),
    ("n=3\n1;2\n", 2),
    ("", 1),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(FamilyParseError) as excinfo:
        parse_family(text)
    assert excinfo.value.line == line


def test_fixtures():
    assert load_fixture("two-levels:3:1") == two_levels(3, 1)
    assert load_fixture("level:4:2") == level(4, 2)
    assert len(load_fixture("exceptional-n3")) == 6
    assert len(load_fixture("exceptional-n4")) == 10
    with pytest.raises(FixtureNotFound):
        load_fixture("two-levels:3")
    with pytest.raises(FixtureNotFound):
        load_fixture("two-levels:3:5")


def test_load_family_reads_files_and_fixtures(family_file):
    path = family_file("n=2\n1\n2\n")
    assert load_family(path) == level(2, 1)
    assert load_family("level:2:1") == level(2, 1)
    with pytest.raises(FamilyParseError):
        load_family("no/such/file.txt")


def test_rational_strings():
    assert format_rat(Fraction(2)) == "2/1"
    assert format_rat(Fraction(8, 3)) == "8/3"
    assert parse_rat("8/3") == Fraction(8, 3)
    assert parse_rat("2") == 2


def test_binomial_pascal_rule():
    for n in range(1, 21):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_canonical_form_is_relabelling_invariant_for_every_family(n):
    for choice in range(1 << (1 << n)):
        family = Family(n, tuple(m for m in range(1 << n) if choice >> m & 1))
        expected = canonical_form(family)
        for perm in permutations(range(1, n + 1)):
            assert canonical_form(apply_permutation(family, perm)) == expected


def test_canonical_form_is_relabelling_invariant_n4():
    rng = random.Random(4)
    for _ in range(40):
        family = Family(4, tuple(m for m in range(16) if rng.random() < 0.4))
        expected = canonical_form(family)
        for perm in permutations(range(1, 5)):
            assert canonical_form(apply_permutation(family, perm)) == expected


@pytest.mark.parametrize("n", [5, 6, pytest.param(7, marks=pytest.mark.slow), pytest.param(8, marks=pytest.mark.slow)])
def test_canonical_form_is_relabelling_invariant_on_random_families(n):
    rng = random.Random(n)
    for _ in range(3):
        family = Family(n, tuple(m for m in range(1 << n) if rng.random() < 0.15))
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        assert canonical_form(apply_permutation(family, perm)) == canonical_form(family)


def test_rat_arithmetic_agrees_with_cross_multiplication():
    rng = random.Random(7)
    for _ in range(500):
        p, q = rng.randint(-10 ** 12, 10 ** 12), rng.randint(1, 10 ** 12)
        r, s = rng.randint(-10 ** 12, 10 ** 12), rng.randint(1, 10 ** 12)
        a, b = Rat(p, q), Rat(r, s)
        assert math.gcd(a.numerator, a.denominator) == 1 and a.denominator > 0
        total = a + b
        assert total.numerator * q * s == (p * s + r * q) * total.denominator
        product = a * b
        assert product.numerator * q * s == p * r * product.denominator
        assert (a < b) == (p * s < r * q)
        assert (a == b) == (p * s == r * q)
