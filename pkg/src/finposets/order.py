"""Order-theoretic invariants: Moebius functions, lattice structure,
order ideals, distributive lattices and covering statistics.

The Moebius function follows the recursive definition mu(a, a) = 1 and
mu(a, b) = -sum of mu(a, z) over a <= z < b; rows are computed once per
starting element and shared while filling a full table.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .errors import LabelClash, NoBottom, NotComparable
from .poset import Poset, _bits


@dataclass(frozen=True)
class MoebiusTable:
    """Moebius values for every comparable pair of a fixed poset."""

    entries: dict[tuple[str, str], int]

    def __getitem__(self, pair: tuple[str, str]) -> int:
        return self.entries[pair]


@dataclass(frozen=True)
class OrderIdeal:
    """A downward closed subset of an ambient poset.

    ``bits`` is the characteristic string over the ambient element order
    and doubles as the canonical label in the distributive lattice.
    """

    members: frozenset[str]
    bits: str


@dataclass(frozen=True)
class CoverTally:
    """counts[k] = number of lattice elements covering exactly k elements."""

    counts: dict[int, int]


def _moebius_row(p: Poset, a: int) -> dict[int, int]:
    """mu(a, b) for every b above a, keyed by element index."""
    up = p._up
    down = p._down_masks()
    targets = sorted(_bits(up[a]), key=lambda i: bin(down[i]).count("1"))
    row: dict[int, int] = {}
    for b in targets:
        if b == a:
            row[b] = 1
        else:
            row[b] = -sum(row[z] for z in _bits(up[a] & down[b] & ~(1 << b)))
    return row


def moebius(p: Poset, a: str, b: str) -> int:
    """Moebius function mu(a, b); requires a <= b."""
    i, j = p._require(a), p._require(b)
    if not p._up[i] >> j & 1:
        raise NotComparable(f"{a!r} is not below {b!r}")
    return _moebius_row(p, i)[j]


def moebius_table(p: Poset) -> MoebiusTable:
    entries: dict[tuple[str, str], int] = {}
    for i, a in enumerate(p.elements):
        row = _moebius_row(p, i)
        for j, value in row.items():
            entries[(a, p.elements[j])] = value
    return MoebiusTable(entries)


def meet(p: Poset, a: str, b: str) -> str | None:
    """Greatest lower bound of a and b, or None if it does not exist."""
    down = p._down_masks()
    common = down[p._require(a)] & down[p._require(b)]
    for g in _bits(common):
        if common & ~down[g] == 0:
            return p.elements[g]
    return None


def join(p: Poset, a: str, b: str) -> str | None:
    """Least upper bound of a and b, or None if it does not exist."""
    common = p._up[p._require(a)] & p._up[p._require(b)]
    for g in _bits(common):
        if common & ~p._up[g] == 0:
            return p.elements[g]
    return None


def is_lattice(p: Poset) -> bool:
    """True iff every pair of elements has both a meet and a join."""
    labels = p.elements
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            if meet(p, labels[i], labels[j]) is None:
                return False
            if join(p, labels[i], labels[j]) is None:
                return False
    return True


def adjoin_max(p: Poset, label: str = "top") -> Poset:
    """A copy of ``p`` with a new global maximum adjoined."""
    if label in p:
        raise LabelClash(f"label {label!r} already present")

    def leq(x: str, y: str) -> bool:
        if y == label:
            return True
        if x == label:
            return False
        return p.is_leq(x, y)

    return Poset.from_order((*p.elements, label), leq)


def adjoin_min(p: Poset, label: str = "bottom") -> Poset:
    """A copy of ``p`` with a new global minimum adjoined."""
    if label in p:
        raise LabelClash(f"label {label!r} already present")

    def leq(x: str, y: str) -> bool:
        if x == label:
            return True
        if y == label:
            return False
        return p.is_leq(x, y)

    return Poset.from_order((*p.elements, label), leq)


def order_ideals(p: Poset) -> list[OrderIdeal]:
    """All downward closed subsets, sorted by characteristic bitstring.

    Enumerated by depth-first include/exclude decisions along a linear
    extension, so the cost is linear in the number of ideals.
    """
    n = len(p)
    up = p._up
    down = p._down_masks()
    ext = sorted(range(n), key=lambda i: (bin(down[i]).count("1"), i))
    masks: list[int] = []

    def extend(pos: int, chosen: int, forbidden: int) -> None:
        if pos == n:
            masks.append(chosen)
            return
        e = ext[pos]
        bit = 1 << e
        if not forbidden & bit and down[e] & ~bit & ~chosen == 0:
            extend(pos + 1, chosen | bit, forbidden)
        extend(pos + 1, chosen, forbidden | up[e])

    extend(0, 0, 0)
    ideals = []
    for mask in masks:
        bits = "".join("1" if mask >> i & 1 else "0" for i in range(n))
        members = frozenset(p.elements[i] for i in _bits(mask))
        ideals.append(OrderIdeal(members, bits))
    ideals.sort(key=lambda ideal: ideal.bits)
    return ideals


def distributive_lattice(p: Poset) -> Poset:
    """The lattice of order ideals of ``p``, ordered by inclusion.

    Element labels are the ideals' characteristic bitstrings.
    """
    ideals = order_ideals(p)
    mask_of = {ideal.bits: int(ideal.bits[::-1], 2) if ideal.bits else 0 for ideal in ideals}
    return Poset.from_order(
        (ideal.bits for ideal in ideals),
        lambda s, t: mask_of[s] & ~mask_of[t] == 0,
    )


def cover_statistics(lattice: Poset) -> CoverTally:
    """Tally of elements by how many elements they cover.

    Requires a unique minimal element, which is the single element
    covering nothing and lands in ``counts[0]``.
    """
    if len(lattice.minimal_elements()) != 1:
        raise NoBottom("cover statistics need a unique minimal element")
    covered = Counter(upper for _, upper in lattice.covering_relations())
    tally = Counter(covered.get(x, 0) for x in lattice)
    return CoverTally(dict(sorted(tally.items())))


def hibi_betti(tally: CoverTally) -> list[int]:
    """Betti numbers of a Hibi quotient from the covering tally.

    With g[j] the number of lattice elements covering exactly j
    elements, entry i is sum over j >= i of C(j, i) * g[j]; entry 0
    counts the ideal's generators.
    """
    m = max(tally.counts)
    g = [tally.counts.get(j, 0) for j in range(m + 1)]
    return [sum(comb(j, i) * g[j] for j in range(i, m + 1)) for i in range(m + 1)]
