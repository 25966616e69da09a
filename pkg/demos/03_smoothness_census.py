"""Classifying orbit closures as smooth or not rationally smooth.

Inclusion of one of seven small patterns rules out rational smoothness; an
avoider gets a recursive certificate mirroring a smooth fibration of its
closure.  This script runs the census for small signatures and unpacks one
witness and one certificate.
"""

import json

from clans import (
    FORBIDDEN_PATTERNS,
    certificate_json,
    classify,
    enumerate_clans,
    format_clan,
    parse_clan,
    verdict_json,
)

print("the seven patterns:", ", ".join(format_clan(p) for p in FORBIDDEN_PATTERNS))
print()

for p, q in [(2, 2), (3, 2), (3, 3)]:
    clans = enumerate_clans(p, q)
    singular = [c for c in clans if not classify(c).rationally_smooth]
    print(f"({p},{q}): {len(clans)} orbits, {len(singular)} not rationally smooth")
    if singular and len(singular) <= 6:
        for c in singular:
            v = classify(c)
            print(
                f"   {format_clan(c):12s} includes {format_clan(v.witness_pattern)}"
                f" at positions {v.witness_positions}"
            )
print()

clan = parse_clan("1,1,-,+", 2, 2)
print(f"certificate for {format_clan(clan)} (smooth):")
print(json.dumps(certificate_json(classify(clan).certificate), indent=2))
print()

print("full verdict document for 1,2,1,2 (singular):")
print(json.dumps(verdict_json(classify(parse_clan("1,2,1,2", 2, 2))), indent=2))
