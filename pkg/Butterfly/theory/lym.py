# Butterfly/theory/lym.py

"""Exact LYM-type sums and bounds.

Every left/right side is a :class:`fractions.Fraction`; nothing in a verdict
is ever rounded.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from Butterfly.core.rational import format_rat
from Butterfly.core.subsets import Family, Subset, binomial, complement_family, full_mask
from Butterfly.exceptions import GroundSizeError, MultipleSupersets, NoSuperset
from Butterfly.theory.conditions import decompose, find_star_violation, is_antichain, unique_superset_map
from Butterfly.utils.logger import logger


@dataclass(frozen=True)
class InequalityVerdict:
    lhs: Fraction
    rhs: Fraction
    holds: bool
    equality: bool
    hypotheses_ok: bool
    hypothesis_failures: Tuple[str, ...] = ()
    details: Dict[str, Any] = field(default_factory=dict, compare=False)

    @classmethod
    def compare(cls, lhs, rhs, failures: Sequence[str] = (), details: Optional[Dict[str, Any]] = None) -> "InequalityVerdict":
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        return cls(
            lhs=lhs,
            rhs=rhs,
            holds=lhs <= rhs,
            equality=lhs == rhs,
            hypotheses_ok=not failures,
            hypothesis_failures=tuple(failures),
            details=details or {},
        )

    @property
    def slack(self) -> Fraction:
        return self.rhs - self.lhs

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lhs": format_rat(self.lhs),
            "rhs": format_rat(self.rhs),
            "holds": self.holds,
            "equality": self.equality,
            "hypotheses_ok": self.hypotheses_ok,
            "hypothesis_failures": list(self.hypothesis_failures),
            **({"details": self.details} if self.details else {}),
        }


def weight(n: int, size: int) -> Fraction:
    return Fraction(1, binomial(n, size))


def lym_sum(family: Family) -> Fraction:
    n = family.n
    return sum((weight(n, m.bit_count()) for m in family.masks), Fraction(0))


def check_butterfly_lym(family: Family) -> InequalityVerdict:
    """Σ 1/C(n,|F|) ≤ 2 for butterfly-free families without ∅ and [n]."""
    failures = []
    if family.n < 3:
        failures.append("ground_size_below_3")
    if family.has_empty:
        failures.append("empty_set_member")
    if family.has_full:
        failures.append("full_set_member")
    violation = find_star_violation(family)
    details = {}
    if violation is not None:
        failures.append("star_violated")
        details["star_witness"] = violation.to_dict()
    return InequalityVerdict.compare(lym_sum(family), 2, failures, details)


@dataclass(frozen=True)
class PendantAntichains:
    """An antichain ``m`` of tops and a disjoint antichain ``mid`` hanging below them through ``f``."""
    m: Family
    mid: Family
    f: Mapping[Subset, Subset]

    @property
    def n(self) -> int:
        return self.m.n

    def validate(self) -> List[str]:
        n = self.n
        failures = []
        if self.mid.n != n:
            return ["ground_mismatch"]
        if not is_antichain(self.m):
            failures.append("m_not_antichain")
        if not is_antichain(self.mid):
            failures.append("mid_not_antichain")
        if self.m.presence & self.mid.presence:
            failures.append("not_disjoint")
        if self.m.has_full:
            failures.append("full_set_in_m")
        for a in self.mid.masks:
            target = self.f.get(Subset(a, n))
            if target is None:
                failures.append("f_not_total")
                continue
            if target.bits not in self.m:
                failures.append("f_target_not_in_m")
            if target.bits == a or a & ~target.bits:
                failures.append("f_not_superset")
            if sum(1 for s in self.m.masks if s != a and a & ~s == 0) > 1:
                failures.append("superset_not_unique")
        return sorted(set(failures))


def _pendant_pattern(n: int, size_a: int, size_f: int) -> Optional[str]:
    top = size_f == n - 1
    adjacent = size_f == size_a + 1
    if top and adjacent:
        return "top+adjacent"
    if top:
        return "top"
    if adjacent:
        return "adjacent"
    return None


def check_pendant_bounds(x: PendantAntichains) -> Tuple[InequalityVerdict, InequalityVerdict]:
    """Chain-counting bounds for tops plus pendants.

    Returns ``(relaxed, exact)``: the exact form charges each pendant A with
    ``1 - 1/C(n-|A|, n-|f(A)|)``; the relaxed form with ``1 - 1/(n-|A|)``.
    ``relaxed.lhs <= exact.lhs <= 1`` whenever the hypotheses hold.
    """
    n = x.n
    failures = x.validate()
    top_sum = sum((weight(n, m.bit_count()) for m in x.m.masks), Fraction(0))
    relaxed = exact = top_sum
    terms = []
    for a in x.mid.masks:
        size_a = a.bit_count()
        if size_a >= n - 1:
            # no room for f(A) strictly between A and [n]
            failures.append("pendant_too_large")
            continue
        relaxed_factor = 1 - Fraction(1, n - size_a)
        relaxed += weight(n, size_a) * relaxed_factor
        target = x.f.get(Subset(a, n))
        if target is None or target.bits == a or a & ~target.bits or target.bits == full_mask(n):
            continue
        size_f = len(target)
        exact_factor = 1 - Fraction(1, binomial(n - size_a, n - size_f))
        exact += weight(n, size_a) * exact_factor
        tight = relaxed_factor == exact_factor
        pattern = _pendant_pattern(n, size_a, size_f)
        terms.append({
            "a": list(Subset(a, n)),
            "f_a": list(target),
            "size_gap": size_f - size_a,
            "tight": tight,
            "pattern": pattern,
        })
    failures = sorted(set(failures))
    details = {
        "terms": terms,
        "tight_terms": sum(1 for t in terms if t["tight"]),
        "pattern_consistent": all(t["tight"] == (t["pattern"] is not None) for t in terms),
    }
    return (
        InequalityVerdict.compare(relaxed, 1, failures, details),
        InequalityVerdict.compare(exact, 1, failures),
    )


def check_half_weight_bound(m: Family, mid: Family, f: Mapping[Subset, Subset]) -> InequalityVerdict:
    """Σ_M 1/C(n,|M|) + ½ Σ_A 1/C(n,|A|) ≤ 1; equality only with |A| = n-2 and |f(A)| = n-1 throughout."""
    x = PendantAntichains(m, mid, f)
    n = x.n
    failures = x.validate()
    lhs = sum((weight(n, s.bit_count()) for s in m.masks), Fraction(0))
    lhs += sum((weight(n, a.bit_count()) / 2 for a in mid.masks), Fraction(0))
    stated = True
    for a in mid.masks:
        target = f.get(Subset(a, n))
        if a.bit_count() != n - 2 or target is None or len(target) != n - 1:
            stated = False
    verdict = InequalityVerdict.compare(lhs, 1, failures)
    verdict.details.update({
        "equality_condition_met": stated,
        "equality_implies_condition": (not verdict.equality) or stated or not verdict.hypotheses_ok,
    })
    return verdict


@dataclass(frozen=True)
class SplitReport:
    direct: InequalityVerdict
    dual: InequalityVerdict
    total: Fraction
    isolated_weight: Fraction

    def to_dict(self) -> Dict[str, Any]:
        return {
            "direct": self.direct.to_dict(),
            "dual": self.dual.to_dict(),
            "total": format_rat(self.total),
            "isolated_weight": format_rat(self.isolated_weight),
        }


def _pendant_map(mid: Family, tops: Family) -> Tuple[Dict[Subset, Subset], List[str]]:
    try:
        return unique_superset_map(mid, tops), []
    except NoSuperset as e:
        logger.debug(f"Pendant map failed: {e}")
        return {}, ["f_not_total"]
    except MultipleSupersets as e:
        logger.debug(f"Pendant map failed: {e}")
        return {}, ["superset_not_unique"]


def check_butterfly_lym_split(family: Family) -> SplitReport:
    """The LYM ≤ 2 bound as two half-weight bounds: maximal members over the middle, and the complemented minimal side.

    ``total`` is the sum of both left sides; it equals ``lym_sum(family)`` plus
    the weight of members that are both maximal and minimal.
    """
    n = family.n
    parts = decompose(family)
    upper_map, upper_failures = _pendant_map(parts.mid, parts.m1)
    direct = check_half_weight_bound(parts.m1, parts.mid, upper_map)
    comp_mid = complement_family(parts.mid)
    comp_m2 = complement_family(parts.m2)
    lower_map, lower_failures = _pendant_map(comp_mid, comp_m2)
    dual = check_half_weight_bound(comp_m2, comp_mid, lower_map)
    if upper_failures:
        direct = InequalityVerdict.compare(direct.lhs, direct.rhs, sorted(set(direct.hypothesis_failures) | set(upper_failures)), direct.details)
    if lower_failures:
        dual = InequalityVerdict.compare(dual.lhs, dual.rhs, sorted(set(dual.hypothesis_failures) | set(lower_failures)), dual.details)
    isolated = sum((weight(n, m.bit_count()) for m in parts.isolated.masks), Fraction(0))
    return SplitReport(direct, dual, direct.lhs + dual.lhs, isolated)


def pendant_weight(n: int, i: int) -> Fraction:
    """C(n,i)·(n-i)/(n-i-1): the largest weight one pendant of size i can force."""
    if not 0 <= i <= n - 2:
        raise GroundSizeError(f"pendant_weight needs 0 <= i <= n-2, got n={n}, i={i}")
    return Fraction(math.comb(n, i) * (n - i), n - i - 1)


def pendant_weight_maximizers(n: int) -> Tuple[int, ...]:
    if n < 4:
        raise GroundSizeError(f"pendant_weight_maximizers needs n >= 4, got {n}")
    values = {i: pendant_weight(n, i) for i in range(1, n - 1)}
    best = max(values.values())
    return tuple(i for i, v in values.items() if v == best)


def pendant_weight_argmax(n: int) -> int:
    maximizers = pendant_weight_maximizers(n)
    if len(maximizers) > 1:
        logger.debug(f"pendant_weight has tied maximizers {maximizers} at n={n}; taking {maximizers[0]}")
    return maximizers[0]


def pendant_weight_step_up(n: int, i: int) -> bool:
    """Whether the weight does not decrease from i-1 to i, via the quadratic criterion."""
    return i * (n - i - 1) <= (n - i) ** 2


def fork_free_bound(n: int) -> Fraction:
    """C(n,⌊n/2⌋)·(1 + 2/(n-3)): the size bound for families without A ⊂ B, C."""
    if n <= 3:
        raise GroundSizeError(f"fork_free_bound needs n >= 4, got {n}")
    return math.comb(n, n // 2) * (1 + Fraction(2, n - 3))
