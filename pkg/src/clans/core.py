"""Clans: the combinatorial parameters of GL(p)xGL(q)-orbits on the flag variety.

A clan of signature (p, q) is a sequence of n = p + q symbols, each "+", "-"
or a natural number, in which every number occurs exactly twice or not at all.
Counting each pair of equal numbers once, the "+" entries together with the
pairs number p, and the "-" entries together with the pairs number q.  Two
sequences are the same clan when they carry the same signs in the same
positions and the same pairings, so pair labels are normalized to 1, 2, ...
in order of first occurrence: (2,+,2,-) and (1,+,1,-) are one clan, while
(1,+,-,1) is a different one.

Positions are 1-based throughout the public API.

>>> parse_clan("2,+,2,-", 2, 2) == parse_clan("1,+,1,-", 2, 2)
True
>>> dimension(parse_clan("1,+,-,1", 2, 2))
5
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence, Union

PLUS = "+"
MINUS = "-"

#: One clan symbol: a sign or a positive pair number.
Entry = Union[str, int]


class ClanError(ValueError):
    """A sequence of entries does not form a valid clan (or the wrong one)."""


def is_sign(entry: Entry) -> bool:
    return entry == PLUS or entry == MINUS


@dataclass(frozen=True)
class Clan:
    """A canonical clan together with its signature (p, q).

    The constructor validates everything: pair numbers must occur exactly
    twice and be numbered 1, 2, ... by first occurrence, and the entry counts
    must realize the signature.  Use :func:`canonicalize` or
    :func:`parse_clan` to build one from raw data.
    """

    entries: tuple[Entry, ...]
    p: int
    q: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        plus = minus = 0
        counts: dict[int, int] = {}
        first_seen: list[int] = []
        for e in self.entries:
            if e == PLUS:
                plus += 1
            elif e == MINUS:
                minus += 1
            elif isinstance(e, int) and not isinstance(e, bool) and e >= 1:
                if e not in counts:
                    counts[e] = 0
                    first_seen.append(e)
                counts[e] += 1
            else:
                raise ClanError(f"invalid clan entry {e!r}")
        for e, c in counts.items():
            if c != 2:
                raise ClanError(
                    f"number {e} occurs {c} time(s); every number must occur exactly twice"
                )
        if first_seen != list(range(1, len(first_seen) + 1)):
            raise ClanError(
                f"pair numbers {first_seen} are not 1..k by first occurrence; use canonicalize"
            )
        k = len(first_seen)
        if plus + k != self.p or minus + k != self.q:
            raise ClanError(
                f"entries have signature ({plus + k},{minus + k}), not ({self.p},{self.q})"
            )

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Pair intervals (left, right), 1-based, indexed by pair number."""
        left: dict[int, int] = {}
        out: list[tuple[int, int]] = []
        for pos, e in enumerate(self.entries, start=1):
            if is_sign(e):
                continue
            if e in left:
                out[e - 1] = (left[e], pos)
            else:
                left[e] = pos
                out.append((pos, pos))  # placeholder until the mate shows up
        return tuple(out)

    def mates(self) -> dict[int, int]:
        """Map each pair position to the position of its equal mate."""
        out: dict[int, int] = {}
        for left, right in self.pairs:
            out[left] = right
            out[right] = left
        return out

    def __str__(self) -> str:
        return format_clan(self)


def canonicalize(entries: Iterable[Entry]) -> Clan:
    """Relabel pair numbers by first occurrence and infer the signature.

    >>> canonicalize((2, "+", 2, "-")).entries
    (1, '+', 1, '-')
    >>> canonicalize((3, 1, 1, 3)).entries
    (1, 2, 2, 1)
    """
    seq = list(entries)
    counts: dict[int, int] = {}
    for e in seq:
        if is_sign(e):
            continue
        if not isinstance(e, int) or isinstance(e, bool) or e < 1:
            raise ClanError(f"invalid clan entry {e!r}")
        counts[e] = counts.get(e, 0) + 1
    for e, c in counts.items():
        if c != 2:
            raise ClanError(
                f"number {e} occurs {c} time(s); every number must occur exactly twice"
            )
    relabel: dict[int, int] = {}
    out: list[Entry] = []
    plus = minus = 0
    for e in seq:
        if e == PLUS:
            plus += 1
            out.append(e)
        elif e == MINUS:
            minus += 1
            out.append(e)
        else:
            if e not in relabel:
                relabel[e] = len(relabel) + 1
            out.append(relabel[e])
    k = len(relabel)
    return Clan(tuple(out), plus + k, minus + k)


def parse_clan(text: str, p: int, q: int) -> Clan:
    """Parse clan text and validate it against the signature (p, q).

    Tokens are "+", "-", or a number >= 1, separated by commas; the compact
    undelimited form ("1+1-") is accepted only while every number is a single
    digit.  Pair numbers are renumbered canonically.
    """
    raw = [_parse_token(t) for t in _tokens(text)]
    clan = canonicalize(raw)
    if (clan.p, clan.q) != (p, q):
        raise ClanError(
            f"clan {format_clan(clan)} has signature ({clan.p},{clan.q}), not ({p},{q})"
        )
    return clan


def _tokens(text: str) -> list[str]:
    s = text.strip()
    if "," in s:
        return [t.strip() for t in s.split(",")]
    return [ch for ch in s if not ch.isspace()]


def _parse_token(token: str) -> Entry:
    if token == PLUS or token == MINUS:
        return token
    if token.isdigit() and token[0] != "0":
        return int(token)
    raise ClanError(f"bad clan token {token!r}: expected '+', '-' or a number >= 1")


def format_clan(clan: Clan) -> str:
    """Canonical comma-separated text; parse_clan inverts it.

    >>> format_clan(canonicalize((1, "+", 1, "-")))
    '1,+,1,-'
    """
    return ",".join(e if is_sign(e) else str(e) for e in clan.entries)


def pair_map(clan: Clan) -> dict[int, tuple[int, int]]:
    """Pair number -> (left, right) positions."""
    return dict(enumerate(clan.pairs, start=1))


def count_clans(p: int, q: int) -> int:
    """Number of clans of signature (p, q), by the closed form.

    Choosing 2k slots for pair endpoints, matching them up, and filling the
    rest with signs gives sum over k of C(n,2k) * (2k-1)!! * C(n-2k, p-k).

    >>> [count_clans(1, 1), count_clans(2, 2), count_clans(3, 2)]
    [3, 21, 55]
    """
    n = p + q
    total = 0
    for k in range(min(p, q) + 1):
        total += (
            math.comb(n, 2 * k)
            * _odd_product(2 * k - 1)
            * math.comb(n - 2 * k, p - k)
        )
    return total


def _odd_product(m: int) -> int:
    """Double factorial m!! for odd m; 1 when m < 1."""
    return math.prod(range(1, m + 1, 2))


def enumerate_clans(p: int, q: int) -> list[Clan]:
    """Every clan of signature (p, q), exactly once, in a fixed total order.

    The order is lexicographic on entries with "+" < "-" < numbers (by pair
    number), so reruns and dumps are diff-stable.

    >>> [format_clan(c) for c in enumerate_clans(1, 1)]
    ['+,-', '-,+', '1,1']
    """
    n = p + q
    out: list[Clan] = []
    for k in range(min(p, q) + 1):
        for slots in combinations(range(n), 2 * k):
            taken = set(slots)
            rest = [i for i in range(n) if i not in taken]
            for matching in _matchings(slots):
                base: list[Entry] = [0] * n
                for number, (a, b) in enumerate(sorted(matching), start=1):
                    base[a] = number
                    base[b] = number
                for plus_slots in combinations(rest, p - k):
                    entries = base.copy()
                    chosen = set(plus_slots)
                    for i in rest:
                        entries[i] = PLUS if i in chosen else MINUS
                    out.append(Clan(tuple(entries), p, q))
    out.sort(key=token_sort_key)
    return out


def _matchings(positions: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """All partitions of the given positions into unordered pairs."""
    items = list(positions)
    if not items:
        yield []
        return
    first = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1 :]
        for sub in _matchings(rest):
            yield [(first, items[i])] + sub


def _entry_key(e: Entry) -> tuple[int, int]:
    if e == PLUS:
        return (0, 0)
    if e == MINUS:
        return (1, 0)
    return (2, e)


def token_sort_key(clan: Clan) -> tuple[tuple[int, int], ...]:
    """Sort key realizing the enumeration order "+" < "-" < 1 < 2 < ..."""
    return tuple(_entry_key(e) for e in clan.entries)


def base_dimension(p: int, q: int) -> int:
    """Dimension shared by all closed orbits: (p(p-1) + q(q-1)) / 2."""
    return (p * (p - 1) + q * (q - 1)) // 2


def dimension(clan: Clan) -> int:
    """Dimension of the orbit with this clan.

    Each pair (i, j) contributes j - i minus the number of pairs (s, t) with
    s < i < t < j.  Sign-only clans sit at the base dimension; the dense
    orbit's clan reaches n(n-1)/2.

    >>> dimension(parse_clan("1,2,1,3,2,3", 3, 3))
    11
    """
    pairs = clan.pairs
    total = base_dimension(clan.p, clan.q)
    for i, j in pairs:
        crossings = sum(1 for s, t in pairs if s < i < t < j)
        total += j - i - crossings
    return total


@dataclass(frozen=True)
class SignaturePrefix:
    """Running counts along prefixes: plus[i-1] counts "+" entries and completed
    pairs among the first i entries, minus[i-1] the same with "-".

    On the orbit, plus[i-1] is the dimension of the intersection of the i-th
    flag subspace with the fixed p-dimensional coordinate subspace.
    """

    plus: tuple[int, ...]
    minus: tuple[int, ...]


def prefix_signature(clan: Clan) -> SignaturePrefix:
    """Per-prefix sign-and-completed-pair counts.

    >>> prefix_signature(parse_clan("1,+,-,1", 2, 2))
    SignaturePrefix(plus=(0, 1, 1, 2), minus=(0, 0, 1, 2))
    """
    plus_counts: list[int] = []
    minus_counts: list[int] = []
    a = b = 0
    seen: set[Entry] = set()
    for e in clan.entries:
        if e == PLUS:
            a += 1
        elif e == MINUS:
            b += 1
        elif e in seen:
            a += 1
            b += 1
        else:
            seen.add(e)
        plus_counts.append(a)
        minus_counts.append(b)
    return SignaturePrefix(tuple(plus_counts), tuple(minus_counts))


def is_closed(clan: Clan) -> bool:
    """True when the clan is all signs, i.e. the orbit is closed."""
    return all(is_sign(e) for e in clan.entries)


def open_clan(p: int, q: int) -> Clan:
    """Clan of the dense orbit: (1,...,m, signs, m,...,1) with |p-q| majority signs.

    The q < p convention is stated for "+"; the mirrored "-" version for
    p < q is forced by swapping the sign roles and is pinned down by the
    dimension-maximality checks in the test suite.

    >>> format_clan(open_clan(2, 1))
    '1,+,1'
    >>> format_clan(open_clan(2, 2))
    '1,2,2,1'
    """
    if p == 0 and q == 0:
        raise ClanError("signature (0,0) has no open orbit clan")
    m = min(p, q)
    sign = PLUS if p >= q else MINUS
    entries = (
        list(range(1, m + 1)) + [sign] * abs(p - q) + list(range(m, 0, -1))
    )
    return Clan(tuple(entries), p, q)
