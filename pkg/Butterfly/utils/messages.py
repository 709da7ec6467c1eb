# Butterfly/utils/messages.py

# =====================================================================================
# ====== ERROR MESSAGES ======
# =====================================================================================

MSG_ERROR_INPUT = "✖ Input error: {error}"
MSG_ERROR_PRECONDITION = "✖ Precondition failed ({reason}): {detail}"
MSG_ERROR_BUDGET = "◎ Budget exhausted after {nodes} nodes; best so far {optimum}, not certified."
MSG_ERROR_INCONSISTENT = "🚨 Internal inconsistency: {error}"

# =====================================================================================
# ====== COMMAND HELP ======
# =====================================================================================

MSG_HELP_DESCRIPTION = "Workbench for butterfly-free set families: exact checks, LYM sums, cyclic audits and certified searches."
MSG_HELP_CHECK = "Check a family against the butterfly, fork-free or antichain condition"
MSG_HELP_LYM = "Exact LYM sum of a family, with the butterfly bound on request"
MSG_HELP_AUDIT = "Cyclic-permutation double count of a family, or exhaustive interval sweeps"
MSG_HELP_SEARCH = "Certified maximum families and complete extremal catalogs"
MSG_HELP_PROPTEST = "Seeded random-family property suites"
MSG_HELP_FAMILY = "family file path or fixture name (exceptional-n3, exceptional-n4, two-levels:<n>:<k>, level:<n>:<k>)"
MSG_HELP_BUDGET = "node budget per branch as an integer, seconds as '<N>s', or 'tiny'"

# =====================================================================================
# ====== REPORT NOTES ======
# =====================================================================================

MSG_NOTE_SWEEP = "all {families} interval families checked, {counterexamples} counterexamples"
MSG_NOTE_SMALL_GROUND = "n={n}: maximum butterfly-free size is {size}; the two-levels bound {bound} only holds from n=3 on"
MSG_NOTE_HYPOTHESES = "bound not applicable: {failures}"
MSG_NOTE_LISTED_VIOLATES = "listed family {name} violates the butterfly condition and is not extremal"
MSG_NOTE_BEST_EFFORT = "n={n} is beyond the certified range; the optimum is best-effort"
MSG_NOTE_SUITE_SKIPPED = "suite {suite} skipped at n={n}"
