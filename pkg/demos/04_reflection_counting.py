"""Reflection counting: a second, independent test for rational smoothness.

Each pair of opposite signs in a closed clan can become a fresh pair; that is
a noncompact reflection pushing the closed orbit up.  For a target orbit,
count the reflections keeping a closed orbit below the target and compare
with the dimension budget: exceeding it rules out rational smoothness.

The final section shows the one clan (up to sign padding, for p+q <= 7)
where this diagnostic and the seven-pattern criterion disagree, and why the
diagnostic is the one matching the geometry; see tests/test_findings.py for
the machine-checked evidence.
"""

from clans import (
    FORBIDDEN_PATTERNS,
    build_poset,
    collapse_to_closed,
    dimension,
    format_clan,
    includes_any,
    is_closed,
    parse_clan,
    springer_count,
    springer_diagnosis,
    token_sort_key,
)

poset = build_poset(2, 2)
target = parse_clan("1,+,-,1", 2, 2)
print(f"target {format_clan(target)}, dimension {dimension(target)}")
print("counts per closed orbit below it (budget 3):")
for closed in sorted(poset.closed_below(target), key=token_sort_key):
    w = springer_count(poset, closed, target)
    flag = "  <-- exceeds budget" if w.count > w.budget else ""
    print(f"  {format_clan(closed):10s} count {w.count}{flag}")

print()
print("collapsing the embedded pattern gives a closed orbit to try first,")
print("but it can meet the budget exactly; the sweep over all closed orbits")
print("is what detects the failure:")
collapsed = collapse_to_closed(target, FORBIDDEN_PATTERNS[0], (1, 2, 3, 4))
w = springer_count(poset, collapsed, target)
print(f"  collapsed orbit {format_clan(collapsed)}: count {w.count} = budget {w.budget}")

print()
print("where the two criteria part ways (p+q = 6):")
poset6 = build_poset(3, 3)
for clan in poset6.elements:
    avoids = includes_any(clan) is None
    witness = springer_diagnosis(poset6, clan)
    if avoids != (witness is None):
        print(
            f"  {format_clan(clan)}: avoids the seven patterns, but closed orbit "
            f"{format_clan(witness.closed)} scores {witness.count} > {witness.budget}"
        )
        print(
            "  its closure point count over F_q is not palindromic, so the"
            " closure is in fact not rationally smooth; the avoidance list"
            " would need 1,2,2,3,3,1 as an eighth pattern"
        )
