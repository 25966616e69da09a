"""Clans, signatures, and orbit dimensions.

A clan of signature (p, q) is a string of "+", "-" and paired numbers; it
parametrizes one orbit of GL(p) x GL(q) on the complete flags of C^(p+q).
This script enumerates small cases and tabulates the dimension formula.
"""

from clans import (
    base_dimension,
    count_clans,
    dimension,
    enumerate_clans,
    format_clan,
    is_closed,
    open_clan,
    parse_clan,
    prefix_signature,
)

print("clan counts by signature")
for n in range(1, 7):
    row = ", ".join(f"({p},{n-p}): {count_clans(p, n - p)}" for p in range(n + 1))
    print(f"  n={n}:  {row}")

print()
print("the 21 clans of signature (2,2), with dimensions")
for clan in enumerate_clans(2, 2):
    marker = "closed" if is_closed(clan) else ""
    print(f"  {format_clan(clan):10s} dim {dimension(clan)}  {marker}")

print()
print("extremes: closed orbits sit at d = (p(p-1)+q(q-1))/2, the dense")
print("orbit at n(n-1)/2")
for p, q in [(2, 2), (3, 2), (3, 3)]:
    top = open_clan(p, q)
    print(
        f"  ({p},{q}): base {base_dimension(p, q)}, "
        f"open clan {format_clan(top)} at {dimension(top)}"
    )

print()
print("prefix counts model how the flag meets the fixed p-dimensional subspace:")
clan = parse_clan("1,+,-,1", 2, 2)
sig = prefix_signature(clan)
print(f"  {format_clan(clan)}: plus {sig.plus}, minus {sig.minus}")
