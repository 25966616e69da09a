"""Self-check engine: exhaustive verification over all signatures up to a cap.

Runs, per signature, the enumeration count against the closed form, the
dimension extremes, move monotonicity, poset extremes and prefix-count
monotonicity, a handful of pinned order facts, and the mutual equivalence of
the three smoothness criteria (pattern avoidance, structural decomposition,
reflection counting).  Any disagreement between the criteria is a finding to
report, never something to patch over.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from ._parallel import ordered_map
from .core import (
    Clan,
    base_dimension,
    count_clans,
    dimension,
    enumerate_clans,
    format_clan,
    is_closed,
    open_clan,
    parse_clan,
    prefix_signature,
    token_sort_key,
)
from .patterns import (
    DecompositionError,
    build_certificate,
    includes_any,
    structural_check,
    verify_certificate,
)
from .poset import _bits, build_poset
from .springer import springer_count, springer_diagnosis


@dataclass
class CheckResult:
    name: str
    p: int
    q: int
    passed: bool
    detail: str


@dataclass
class BudgetStatistic:
    """How often the reflection count reaches the budget (informational)."""

    pairs: int = 0
    at_least: int = 0


#: Pinned order facts: (lower, upper, expected leq) per signature.
ORDER_FACTS: dict[tuple[int, int], tuple[tuple[str, str, bool], ...]] = {
    (2, 2): (
        ("1,+,1,-", "1,2,1,2", True),
        ("1,+,1,-", "1,+,-,1", True),
    ),
    (3, 3): (
        ("1,2,1,3,2,3", "1,3,1,2,2,3", True),
        ("1,2,1,3,2,3", "1,3,1,3,2,2", False),
    ),
}


def criteria_bits(clan: Clan) -> tuple[bool, bool, bool]:
    """(avoids the seven patterns, passes structural check, certificate builds)."""
    avoids = includes_any(clan) is None
    structural_ok = structural_check(clan) is None
    try:
        certificate_ok = verify_certificate(clan, build_certificate(clan))
    except DecompositionError:
        certificate_ok = False
    return avoids, structural_ok, certificate_ok


def run_checks(max_n: int = 6, jobs: int = 1) -> tuple[list[CheckResult], BudgetStatistic]:
    """Run every check for all signatures with 1 <= p + q <= max_n."""
    results: list[CheckResult] = []
    statistic = BudgetStatistic()
    for n in range(1, max_n + 1):
        for p in range(n + 1):
            results.extend(_signature_checks(p, n - p, jobs, statistic))
    return results, statistic


def _signature_checks(
    p: int, q: int, jobs: int, statistic: BudgetStatistic
) -> list[CheckResult]:
    n = p + q
    out: list[CheckResult] = []
    elements = enumerate_clans(p, q)

    expected = count_clans(p, q)
    closed_count = sum(1 for c in elements if is_closed(c))
    count_ok = (
        len(elements) == expected
        and len(set(elements)) == expected
        and closed_count == comb(n, p)
    )
    out.append(
        CheckResult(
            "count", p, q, count_ok, f"{len(elements)} clans, {closed_count} closed"
        )
    )

    dims = [dimension(c) for c in elements]
    base = base_dimension(p, q)
    full = n * (n - 1) // 2
    top = open_clan(p, q)
    bad = ""
    for c, d in zip(elements, dims):
        if not base <= d <= full:
            bad = f"{format_clan(c)} has dimension {d} outside [{base},{full}]"
        elif (d == base) != is_closed(c):
            bad = f"{format_clan(c)}: dimension {d} vs closedness mismatch"
        elif (d == full) != (c == top):
            bad = f"{format_clan(c)}: dimension {d} vs open clan mismatch"
        if bad:
            break
    out.append(
        CheckResult(
            "dimensions",
            p,
            q,
            not bad,
            bad or f"range [{base},{full}], extremes are the closed/open clans",
        )
    )

    poset = build_poset(p, q, jobs=jobs)
    edges = sum(len(s) for s in poset.succ)
    monotone = all(
        poset.dims[j] > poset.dims[i]
        for i in range(len(poset))
        for j in poset.succ[i]
    )
    out.append(
        CheckResult("move-monotonicity", p, q, monotone, f"{edges} move edges all raise dimension")
    )

    extremes_ok = poset.maximum() == top and sorted(
        poset.minimal_elements(), key=token_sort_key
    ) == [c for c in elements if is_closed(c)]
    out.append(
        CheckResult(
            "poset-extremes",
            p,
            q,
            extremes_ok,
            f"maximum {format_clan(top)}, {closed_count} minimal elements",
        )
    )

    signatures = [prefix_signature(c) for c in elements]
    prefix_bad = ""
    for i, c in enumerate(elements):
        lower = signatures[i]
        for j in _bits(poset._up[i]):
            if j == i:
                continue
            upper = signatures[j]
            if any(x < y for x, y in zip(lower.plus, upper.plus)) or any(
                x < y for x, y in zip(lower.minus, upper.minus)
            ):
                prefix_bad = (
                    f"{format_clan(c)} <= {format_clan(poset.elements[j])} "
                    "violates prefix-count monotonicity"
                )
                break
        if prefix_bad:
            break
    out.append(
        CheckResult(
            "prefix-monotonicity",
            p,
            q,
            not prefix_bad,
            prefix_bad or "all relations dominate prefix counts",
        )
    )

    if (p, q) in ORDER_FACTS:
        facts_ok = True
        checked = []
        for low_text, high_text, expected_leq in ORDER_FACTS[(p, q)]:
            low = parse_clan(low_text, p, q)
            high = parse_clan(high_text, p, q)
            got = poset.leq(low, high)
            facts_ok = facts_ok and got == expected_leq
            rel = "<=" if got else "!<="
            checked.append(f"{low_text} {rel} {high_text}")
        out.append(
            CheckResult("order-facts", p, q, facts_ok, "; ".join(checked))
        )

    bits = ordered_map(criteria_bits, elements, jobs)
    mismatch = ""
    for c, (avoids, structural_ok, certificate_ok) in zip(elements, bits):
        springer_ok = springer_diagnosis(poset, c) is None
        if not avoids == structural_ok == certificate_ok == springer_ok:
            mismatch = (
                f"{format_clan(c)}: avoidance={avoids} structural={structural_ok} "
                f"certificate={certificate_ok} springer={springer_ok}"
            )
            break
    smooth = sum(1 for b in bits if b[0])
    out.append(
        CheckResult(
            "criteria-equivalence",
            p,
            q,
            not mismatch,
            mismatch or f"{smooth} smooth / {len(elements) - smooth} singular, criteria agree",
        )
    )

    for target in elements:
        for closed in sorted(poset.closed_below(target), key=token_sort_key):
            witness = springer_count(poset, closed, target)
            statistic.pairs += 1
            if witness.count >= witness.budget:
                statistic.at_least += 1

    return out


def report_lines(results: list[CheckResult], statistic: BudgetStatistic) -> list[str]:
    """Human- and diff-friendly report, one line per check plus a summary."""
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.name} p={r.p} q={r.q}: {r.detail}"
        for r in results
    ]
    passed = sum(1 for r in results if r.passed)
    lines.append(
        f"count>=budget held for {statistic.at_least}/{statistic.pairs} "
        "(closed, target) pairs"
    )
    lines.append(f"{passed}/{len(results)} checks passed")
    return lines
