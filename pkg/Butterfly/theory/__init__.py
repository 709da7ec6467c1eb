# Butterfly/theory/__init__.py

from Butterfly.theory.conditions import (decompose, find_fork_violation, find_star_violation,
                                         is_antichain, replace_empty_set, satisfies,
                                         unique_superset_map)
from Butterfly.theory.lym import (InequalityVerdict, PendantAntichains, check_butterfly_lym,
                                  check_half_weight_bound, check_pendant_bounds, fork_free_bound,
                                  lym_sum, pendant_weight, pendant_weight_argmax)
from Butterfly.theory.cyclic import (CyclicPerm, IntervalFamily, check_interval_chain_bound,
                                     check_interval_family_bound, double_count_audit, is_interval,
                                     intervals_of)
