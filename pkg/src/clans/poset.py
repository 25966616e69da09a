"""The closure order on clans of a fixed signature.

Three kinds of moves enlarge an orbit:

* pair creation: two opposite signs, anywhere, become a new pair;
* endpoint slide: a pair entry trades places with a sign lying farther from
  the entry's mate, on the same side of the mate;
* pair exchange: entries of two different pairs swap, the left entry's mate
  lying left of the right entry's mate.

The order is the reflexive-transitive closure of these moves over all clans
of signature (p, q).  Every move must strictly raise the orbit dimension;
that makes the relation antisymmetric, and a generated move that fails to do
so aborts loudly instead of being dropped, since it would mean the move rules
are implemented wrong.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .core import (
    Clan,
    ClanError,
    canonicalize,
    dimension,
    enumerate_clans,
    format_clan,
    is_closed,
    is_sign,
)
from ._parallel import ordered_map

PAIR_CREATION = "pair-creation"
ENDPOINT_SLIDE = "endpoint-slide"
PAIR_EXCHANGE = "pair-exchange"


class NonIncreasingMoveError(RuntimeError):
    """A generated move failed to raise the dimension; the move rules are broken."""


class PosetSizeError(ValueError):
    """Requested signature is above the configured size bound."""


@dataclass(frozen=True)
class Move:
    """One enlargement step: its kind, the two positions touched, the result."""

    kind: str
    positions: tuple[int, int]
    result: Clan


def moves(clan: Clan) -> list[Move]:
    """Every single-move enlargement of the clan, in a deterministic order."""
    entries = clan.entries
    src_dim = dimension(clan)
    sign_positions = [i for i, e in enumerate(entries, start=1) if is_sign(e)]
    mates = clan.mates()
    out: list[Move] = []
    fresh = clan.n + 1  # above any canonical pair number, so never collides

    def push(kind: str, i: int, j: int, new_entries: list) -> None:
        result = canonicalize(new_entries)
        new_dim = dimension(result)
        if new_dim <= src_dim:
            raise NonIncreasingMoveError(
                f"{kind} at ({i},{j}) on {format_clan(clan)} gives "
                f"{format_clan(result)} with dimension {src_dim} -> {new_dim}"
            )
        out.append(Move(kind, (i, j), result))

    for i, j in combinations(sign_positions, 2):
        if entries[i - 1] != entries[j - 1]:
            new = list(entries)
            new[i - 1] = fresh
            new[j - 1] = fresh
            push(PAIR_CREATION, i, j, new)

    for v in sorted(mates):
        m = mates[v]
        for u in sign_positions:
            if (u > m) == (v > m) and abs(u - m) > abs(v - m):
                new = list(entries)
                new[u - 1], new[v - 1] = new[v - 1], new[u - 1]
                push(ENDPOINT_SLIDE, min(u, v), max(u, v), new)

    pair_positions = sorted(mates)
    for u, v in combinations(pair_positions, 2):
        if entries[u - 1] != entries[v - 1] and mates[u] < mates[v]:
            new = list(entries)
            new[u - 1], new[v - 1] = new[v - 1], new[u - 1]
            push(PAIR_EXCHANGE, u, v, new)

    return out


def successors(clan: Clan) -> set[Clan]:
    """Distinct one-move enlargements of the clan."""
    return {mv.result for mv in moves(clan)}


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class OrbitPoset:
    """All clans of signature (p, q) under the move-generated closure order.

    Elements sit in enumeration order; reachability is kept as one bitmask
    per element, so order queries are O(1) after the build.  Instances are
    immutable once constructed and safe to share; build with
    :func:`build_poset`.
    """

    def __init__(
        self,
        p: int,
        q: int,
        elements: tuple[Clan, ...],
        dims: tuple[int, ...],
        succ: tuple[tuple[int, ...], ...],
    ) -> None:
        self.p = p
        self.q = q
        self.n = p + q
        self.elements = elements
        self.dims = dims
        self.succ = succ
        self._index = {c: i for i, c in enumerate(elements)}
        size = len(elements)

        up = [0] * size
        for i in sorted(range(size), key=lambda i: dims[i], reverse=True):
            m = 1 << i
            for j in succ[i]:
                m |= up[j]
            up[i] = m
        preds: list[list[int]] = [[] for _ in range(size)]
        for i in range(size):
            for j in succ[i]:
                preds[j].append(i)
        down = [0] * size
        for j in sorted(range(size), key=lambda j: dims[j]):
            m = 1 << j
            for i in preds[j]:
                m |= down[i]
            down[j] = m

        covers: list[tuple[int, ...]] = []
        for i in range(size):
            blocked = 0
            for j in succ[i]:
                blocked |= up[j] & ~(1 << j)
            covers.append(tuple(j for j in succ[i] if not (blocked >> j) & 1))

        self._up = up
        self._down = down
        self.cover_indices = tuple(covers)
        self._closed_mask = sum(1 << i for i, c in enumerate(elements) if is_closed(c))

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, clan: Clan) -> int:
        try:
            return self._index[clan]
        except KeyError:
            raise ClanError(
                f"clan {format_clan(clan)} is not an element of the ({self.p},{self.q}) poset"
            ) from None

    def leq(self, a: Clan, b: Clan) -> bool:
        """Is the a-orbit contained in the closure of the b-orbit?"""
        return bool(self._up[self.index_of(a)] >> self.index_of(b) & 1)

    def lower_set(self, clan: Clan) -> set[Clan]:
        """Every element below-or-equal the given clan."""
        return {self.elements[i] for i in _bits(self._down[self.index_of(clan)])}

    def upper_set(self, clan: Clan) -> set[Clan]:
        """Every element above-or-equal the given clan."""
        return {self.elements[i] for i in _bits(self._up[self.index_of(clan)])}

    def closed_below(self, clan: Clan) -> set[Clan]:
        """The all-sign clans in the lower set of the given clan."""
        mask = self._down[self.index_of(clan)] & self._closed_mask
        return {self.elements[i] for i in _bits(mask)}

    def hasse_covers(self) -> list[tuple[Clan, Clan]]:
        """Transitive-reduction edges (lower, upper), by element index."""
        return [
            (self.elements[i], self.elements[j])
            for i in range(len(self.elements))
            for j in self.cover_indices[i]
        ]

    def maximum(self) -> Clan:
        """The greatest element; raises if there is none or it is not unique."""
        full = (1 << len(self.elements)) - 1
        tops = [c for i, c in enumerate(self.elements) if self._down[i] == full]
        if len(tops) != 1:
            raise RuntimeError(
                f"({self.p},{self.q}) poset has {len(tops)} top elements, expected one"
            )
        return tops[0]

    def minimal_elements(self) -> list[Clan]:
        return [
            c
            for i, c in enumerate(self.elements)
            if self._down[i] == 1 << i
        ]


def build_poset(p: int, q: int, *, size_bound: int = 9, jobs: int = 1) -> OrbitPoset:
    """Enumerate the clans of signature (p, q) and close the move relation.

    Clan counts grow super-exponentially with n = p + q, and reachability
    bitmasks are quadratic in them, so n is capped (default 9).  Successor
    generation may fan out over `jobs` workers; the merge is ordered, so the
    result is identical for any worker count.
    """
    if p + q > size_bound:
        raise PosetSizeError(f"p+q={p + q} exceeds the size bound {size_bound}")
    elements = tuple(enumerate_clans(p, q))
    index = {c: i for i, c in enumerate(elements)}
    succ_sets = ordered_map(successors, elements, jobs)
    succ = tuple(tuple(sorted(index[s] for s in ss)) for ss in succ_sets)
    dims = tuple(dimension(c) for c in elements)
    return OrbitPoset(p, q, elements, dims, succ)


def export_dot(poset: OrbitPoset) -> str:
    """Hasse diagram as a DOT digraph, byte-deterministic."""
    lines = [f"digraph clan_poset_p{poset.p}_q{poset.q} {{", "  rankdir=BT;"]
    for i, c in enumerate(poset.elements):
        lines.append(f'  n{i} [label="{format_clan(c)}  dim {poset.dims[i]}"];')
    for i in range(len(poset.elements)):
        for j in poset.cover_indices[i]:
            lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_tsv(poset: OrbitPoset) -> str:
    """One row per element: clan, dim, closed, semicolon-joined cover targets."""
    lines = ["clan\tdim\tclosed\tcovers"]
    for i, c in enumerate(poset.elements):
        targets = ";".join(
            format_clan(poset.elements[j]) for j in poset.cover_indices[i]
        )
        closed = "true" if is_closed(c) else "false"
        lines.append(f"{format_clan(c)}\t{poset.dims[i]}\t{closed}\t{targets}")
    return "\n".join(lines) + "\n"
