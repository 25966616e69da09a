"""Pattern containment and the smoothness classification of orbit closures.

A clan includes a pattern when some increasing choice of positions restricts
to it: same signs in the same slots, and pattern pairs filled by whole pairs
of the host.  The classifier rules that inclusion of one of seven small
patterns makes the orbit closure not rationally smooth, while an avoider
gets a recursive decomposition (certificate) along which the closure is
meant to fiber smoothly.

The decomposition alone is not a smoothness proof: (1,+,-,1) still peels to
its closed interior (+,-) even though its closure is singular.  What carries
the burden is a structural test (laminar pairs, constant signs inside a pair,
signs nesting into inner pairs); certificates are built only behind that
gate, and the equivalence of the gate with pattern avoidance is verified
exhaustively by the test suite rather than assumed.

Known caveat, pinned in the findings test module: clans including
1,2,2,3,3,1 classify as smooth here although their closures fail the
reflection-counting diagnostic and are in fact not rationally smooth; the
avoidance list would need that clan as an eighth pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .core import (
    PLUS,
    MINUS,
    Clan,
    canonicalize,
    dimension,
    format_clan,
    is_closed,
    is_sign,
)

#: Inclusion of any of these seven patterns makes the orbit closure not
#: rationally smooth.  Order fixed for deterministic witnesses.
FORBIDDEN_PATTERNS: tuple[Clan, ...] = (
    canonicalize((1, PLUS, MINUS, 1)),
    canonicalize((1, MINUS, PLUS, 1)),
    canonicalize((1, 2, 1, 2)),
    canonicalize((1, PLUS, 2, 2, 1)),
    canonicalize((1, MINUS, 2, 2, 1)),
    canonicalize((1, 2, 2, PLUS, 1)),
    canonicalize((1, 2, 2, MINUS, 1)),
)


def find_embedding(host: Clan, pattern: Clan) -> Optional[tuple[int, ...]]:
    """Least increasing position tuple along which host restricts to pattern.

    A host position holding a pair number participates only together with its
    mate, the two of them filling one pattern pair.  Returns None when the
    host avoids the pattern.

    >>> find_embedding(canonicalize((1, 2, "+", "-", 2, 1)), canonicalize((1, "+", "-", 1)))
    (1, 3, 4, 6)
    """
    m = pattern.n
    if m > host.n:
        return None
    host_mates = host.mates()
    pattern_mates = pattern.mates()
    host_entries = host.entries
    pattern_entries = pattern.entries
    chosen: list[int] = []

    def extend(slot: int, start: int) -> bool:
        if slot > m:
            return True
        want = pattern_entries[slot - 1]
        mate_slot = pattern_mates.get(slot)
        if mate_slot is not None and mate_slot < slot:
            # right end of a pattern pair: the host position is forced
            pos = host_mates[chosen[mate_slot - 1]]
            if pos < start:
                return False
            chosen.append(pos)
            if extend(slot + 1, pos + 1):
                return True
            chosen.pop()
            return False
        for pos in range(start, host.n + 1):
            entry = host_entries[pos - 1]
            if mate_slot is None:
                if entry != want:
                    continue
            elif is_sign(entry) or host_mates[pos] < pos:
                continue
            chosen.append(pos)
            if extend(slot + 1, pos + 1):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if extend(1, 1) else None


def includes_any(
    host: Clan, patterns: Sequence[Clan] = FORBIDDEN_PATTERNS
) -> Optional[tuple[Clan, tuple[int, ...]]]:
    """First (pattern, least embedding) hit in the given order, else None."""
    for pattern in patterns:
        embedding = find_embedding(host, pattern)
        if embedding is not None:
            return pattern, embedding
    return None


def is_rationally_smooth(clan: Clan) -> bool:
    """True iff the clan avoids all seven forbidden patterns."""
    return includes_any(clan) is None


CROSSING_PAIRS = "crossing-pairs"
MIXED_SIGNS = "mixed-signs"
SIGN_OUTSIDE_INNER_PAIR = "sign-outside-inner-pair"


@dataclass(frozen=True)
class StructuralViolation:
    """Which structural condition failed, with the positions exhibiting it."""

    rule: str
    pairs: tuple[tuple[int, int], ...]
    signs: tuple[int, ...]


def structural_check(clan: Clan) -> Optional[StructuralViolation]:
    """None iff the clan passes all three structural conditions.

    1. crossing-pairs: any two pair intervals nest or are disjoint;
    2. mixed-signs: the signs strictly inside one pair all agree;
    3. sign-outside-inner-pair: a sign inside a pair lies inside every pair
       nested in it.

    Violations are reported for the first failing condition, in that order.
    """
    pairs = clan.pairs
    entries = clan.entries

    for x in range(len(pairs)):
        a, b = pairs[x]
        for y in range(x + 1, len(pairs)):
            c, d = pairs[y]  # a < c since pairs are ordered by left endpoint
            if c < b < d:
                return StructuralViolation(CROSSING_PAIRS, ((a, b), (c, d)), ())

    for a, b in pairs:
        inside = [k for k in range(a + 1, b) if is_sign(entries[k - 1])]
        for k in inside[1:]:
            if entries[k - 1] != entries[inside[0] - 1]:
                return StructuralViolation(MIXED_SIGNS, ((a, b),), (inside[0], k))

    for a, b in pairs:
        for c, d in pairs:
            if a < c and d < b:
                for k in range(a + 1, b):
                    if is_sign(entries[k - 1]) and not c < k < d:
                        return StructuralViolation(
                            SIGN_OUTSIDE_INNER_PAIR, ((a, b), (c, d)), (k,)
                        )
    return None


@dataclass(frozen=True)
class ClosedLeaf:
    """A (possibly empty) run of signs; nothing left to decompose."""

    start: int
    end: int


@dataclass(frozen=True)
class SignDelete:
    """A sign inside no pair is deleted; the flanks decompose independently."""

    start: int
    end: int
    position: int
    left: "Certificate"
    right: "Certificate"


@dataclass(frozen=True)
class BlockSplit:
    """Two or more adjacent blocks, each flanked by one pair, none sharing pairs."""

    start: int
    end: int
    children: tuple["Certificate", ...]


@dataclass(frozen=True)
class OuterStrip:
    """First and last positions are mates; the interior decomposes on its own."""

    start: int
    end: int
    child: "Certificate"


Certificate = Union[ClosedLeaf, SignDelete, BlockSplit, OuterStrip]


class DecompositionError(ValueError):
    """Certificate construction refused: the clan fails the structural check."""

    def __init__(self, violation: StructuralViolation):
        super().__init__(f"clan fails structural check: {violation}")
        self.violation = violation


def build_certificate(clan: Clan) -> Certificate:
    """Recursive smooth-fibration certificate for a structurally sound clan.

    Raises DecompositionError (carrying the violation) when the structural
    check fails; once it passes, construction cannot fail.
    """
    violation = structural_check(clan)
    if violation is not None:
        raise DecompositionError(violation)
    return _decompose(clan, 1, clan.n)


def _decompose(clan: Clan, s: int, e: int) -> Certificate:
    entries = clan.entries
    inside = [(a, b) for a, b in clan.pairs if s <= a and b <= e]
    for a, b in clan.pairs:
        if (s <= a <= e) != (s <= b <= e):
            raise RuntimeError(
                f"pair ({a},{b}) straddles decomposition range [{s},{e}] "
                f"of {format_clan(clan)}"
            )
    signs = [k for k in range(s, e + 1) if is_sign(entries[k - 1])]
    if not inside:
        return ClosedLeaf(s, e)
    free = [k for k in signs if not any(a < k < b for a, b in inside)]
    if free:
        k = free[0]
        return SignDelete(s, e, k, _decompose(clan, s, k - 1), _decompose(clan, k + 1, e))
    top = [
        (a, b)
        for a, b in inside
        if not any(c < a and b < d for c, d in inside)
    ]
    top.sort()
    tiles = top[0][0] == s and top[-1][1] == e and all(
        top[i][1] + 1 == top[i + 1][0] for i in range(len(top) - 1)
    )
    if not tiles:
        raise RuntimeError(
            f"top-level pairs {top} do not tile [{s},{e}] of {format_clan(clan)}; "
            "decomposition reached an impossible state"
        )
    if len(top) >= 2:
        return BlockSplit(s, e, tuple(_decompose(clan, a, b) for a, b in top))
    return OuterStrip(s, e, _decompose(clan, s + 1, e - 1))


def verify_certificate(clan: Clan, cert: Certificate) -> bool:
    """Re-check every certificate invariant against the clan from scratch."""
    pairs = clan.pairs
    mates = clan.mates()
    entries = clan.entries

    def valid(node: Certificate, s: int, e: int) -> bool:
        if (node.start, node.end) != (s, e):
            return False
        if any((s <= a <= e) != (s <= b <= e) for a, b in pairs):
            return False
        if isinstance(node, ClosedLeaf):
            return all(is_sign(entries[k - 1]) for k in range(s, e + 1))
        if s > e:
            return False  # only a leaf may cover an empty range
        if isinstance(node, SignDelete):
            k = node.position
            if not s <= k <= e or not is_sign(entries[k - 1]):
                return False
            if any(a < k < b for a, b in pairs if s <= a and b <= e):
                return False
            return valid(node.left, s, k - 1) and valid(node.right, k + 1, e)
        if isinstance(node, BlockSplit):
            if len(node.children) < 2:
                return False
            pos = s
            for child in node.children:
                a, b = child.start, child.end
                if a != pos or b > e or mates.get(a) != b:
                    return False
                if not valid(child, a, b):
                    return False
                pos = b + 1
            return pos == e + 1
        if isinstance(node, OuterStrip):
            if mates.get(s) != e:
                return False
            return valid(node.child, s + 1, e - 1)
        return False

    return valid(cert, 1, clan.n)


@dataclass(frozen=True)
class SmoothnessVerdict:
    """Outcome of classification: a witness embedding or a certificate."""

    clan: Clan
    rationally_smooth: bool
    witness_pattern: Optional[Clan] = None
    witness_positions: Optional[tuple[int, ...]] = None
    certificate: Optional[Certificate] = None


def classify(clan: Clan) -> SmoothnessVerdict:
    """Decide (rational) smoothness of the orbit closure.

    Inclusion of a forbidden pattern yields a witness; avoidance yields a
    certificate.  An avoider whose certificate cannot be built would mean the
    two criteria disagree, which aborts loudly instead of guessing.
    """
    hit = includes_any(clan)
    if hit is not None:
        pattern, embedding = hit
        return SmoothnessVerdict(
            clan=clan,
            rationally_smooth=False,
            witness_pattern=pattern,
            witness_positions=embedding,
        )
    try:
        certificate = build_certificate(clan)
    except DecompositionError as exc:
        raise RuntimeError(
            f"clan {format_clan(clan)} avoids all seven patterns yet fails the "
            f"structural check ({exc.violation}); the smoothness criteria disagree"
        ) from exc
    return SmoothnessVerdict(clan=clan, rationally_smooth=True, certificate=certificate)


def certificate_json(cert: Certificate) -> dict:
    """Certificate as nested tagged nodes (JSON-ready)."""
    if isinstance(cert, ClosedLeaf):
        return {"kind": "closed-leaf", "start": cert.start, "end": cert.end}
    if isinstance(cert, SignDelete):
        return {
            "kind": "sign-delete",
            "start": cert.start,
            "end": cert.end,
            "position": cert.position,
            "left": certificate_json(cert.left),
            "right": certificate_json(cert.right),
        }
    if isinstance(cert, BlockSplit):
        return {
            "kind": "block-split",
            "start": cert.start,
            "end": cert.end,
            "children": [certificate_json(c) for c in cert.children],
        }
    return {
        "kind": "outer-strip",
        "start": cert.start,
        "end": cert.end,
        "child": certificate_json(cert.child),
    }


def verdict_json(verdict: SmoothnessVerdict) -> dict:
    """Verdict document: clan data, the boolean, and witness or certificate."""
    doc: dict = {
        "clan": format_clan(verdict.clan),
        "p": verdict.clan.p,
        "q": verdict.clan.q,
        "dimension": dimension(verdict.clan),
        "closed": is_closed(verdict.clan),
        "rationally_smooth": verdict.rationally_smooth,
    }
    if verdict.witness_pattern is not None:
        doc["witness_pattern"] = format_clan(verdict.witness_pattern)
        doc["witness_positions"] = list(verdict.witness_positions or ())
    if verdict.certificate is not None:
        doc["certificate"] = certificate_json(verdict.certificate)
    return doc
