"""Finite partially ordered sets over string labels.

The relation is stored as one bitmask row per element (``row i`` has bit
``j`` set iff element ``i`` is below element ``j``), which keeps closure,
interval and antichain computations at word speed for the sizes this
library targets.  Posets are immutable and every constructor validates
reflexivity, antisymmetry and transitivity.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, NamedTuple

from .errors import (
    CycleError,
    EmptyPoset,
    InvariantError,
    LabelClash,
    NotComparable,
    UnknownElement,
)


def _bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class CoverRelation(NamedTuple):
    lower: str
    upper: str


class Poset:
    """An immutable finite poset.

    Elements are canonical strings, kept sorted so that all derived
    orderings (covering relations, rank rows, file output) are
    reproducible across runs.
    """

    __slots__ = ("elements", "_index", "_up")

    def __init__(self, elements: tuple[str, ...], up: tuple[int, ...]):
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise LabelClash("poset labels must be pairwise distinct")
        if len(up) != len(elements):
            raise InvariantError("one relation row per element required")
        self.elements = elements
        self._index = {x: i for i, x in enumerate(elements)}
        self._up = tuple(up)
        self._check_partial_order()

    def _check_partial_order(self) -> None:
        n = len(self.elements)
        up = self._up
        full = (1 << n) - 1
        downs = self._down_masks()
        for i in range(n):
            if up[i] & ~full:
                raise InvariantError("relation row wider than the ground set")
            if not up[i] >> i & 1:
                raise InvariantError("relation is not reflexive")
            if up[i] & downs[i] != 1 << i:
                raise InvariantError("relation is not antisymmetric")
            reach = 0
            for z in _bits(up[i]):
                reach |= up[z]
            if reach & ~up[i]:
                raise InvariantError("relation is not transitive")

    # -- construction ----------------------------------------------------

    @classmethod
    def from_relations(
        cls, elements: Iterable[str], pairs: Iterable[tuple[str, str]]
    ) -> "Poset":
        """Poset generated by ``pairs``: the reflexive-transitive closure.

        Raises CycleError if the closure would relate two distinct
        elements both ways, UnknownElement if a pair endpoint is not
        listed in ``elements``.
        """
        labels = list(elements)
        if len(set(labels)) != len(labels):
            raise LabelClash("duplicate label in element list")
        labels.sort()
        index = {x: i for i, x in enumerate(labels)}
        n = len(labels)
        up = [1 << i for i in range(n)]
        for a, b in pairs:
            if a not in index:
                raise UnknownElement(a)
            if b not in index:
                raise UnknownElement(b)
            up[index[a]] |= 1 << index[b]
        # Warshall closure over bitmask rows.
        for k in range(n):
            row_k = up[k]
            for i in range(n):
                if up[i] >> k & 1:
                    up[i] |= row_k
        for i in range(n):
            for j in _bits(up[i] & ~(1 << i)):
                if up[j] >> i & 1:
                    raise CycleError(
                        f"elements {labels[i]!r} and {labels[j]!r} lie on a cycle"
                    )
        return cls(tuple(labels), tuple(up))

    @classmethod
    def from_order(
        cls, elements: Iterable[str], leq: Callable[[str, str], bool]
    ) -> "Poset":
        """Poset over ``elements`` with the order given by the predicate.

        The predicate must already be a partial order; the checked
        constructor raises InvariantError otherwise.
        """
        labels = sorted(elements)
        up = []
        for a in labels:
            mask = 0
            for j, b in enumerate(labels):
                if leq(a, b):
                    mask |= 1 << j
            up.append(mask)
        return cls(tuple(labels), tuple(up))

    # -- basic queries ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self._up == other._up

    def __hash__(self) -> int:
        return hash((self.elements, self._up))

    def __repr__(self) -> str:
        return f"<Poset with {len(self.elements)} elements, {len(self.covering_relations())} covers>"

    def _require(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownElement(label) from None

    def _down_masks(self) -> list[int]:
        """Transpose of the relation rows: ``down[j]`` = everything below j."""
        down = [0] * len(self.elements)
        for i, row in enumerate(self._up):
            for j in _bits(row):
                down[j] |= 1 << i
        return down

    def is_leq(self, a: str, b: str) -> bool:
        return bool(self._up[self._require(a)] >> self._require(b) & 1)

    def minimal_elements(self) -> set[str]:
        down = self._down_masks()
        return {x for i, x in enumerate(self.elements) if down[i] == 1 << i}

    def maximal_elements(self) -> set[str]:
        return {x for i, x in enumerate(self.elements) if self._up[i] == 1 << i}

    # -- covers and ranks ------------------------------------------------

    def covering_relations(self) -> list[CoverRelation]:
        """The transitive reduction, ordered by (lower, upper) element index."""
        n = len(self.elements)
        lt = [self._up[i] & ~(1 << i) for i in range(n)]
        out = []
        for i in range(n):
            reach = 0
            for z in _bits(lt[i]):
                reach |= lt[z]
            for j in _bits(lt[i] & ~reach):
                out.append(CoverRelation(self.elements[i], self.elements[j]))
        out.sort(key=lambda c: (self._index[c.lower], self._index[c.upper]))
        return out

    def _heights(self) -> list[int]:
        """Longest-chain height of each element, minimal elements at 0."""
        n = len(self.elements)
        down = self._down_masks()
        order = sorted(range(n), key=lambda i: bin(down[i]).count("1"))
        h = [0] * n
        for i in order:
            below = down[i] & ~(1 << i)
            if below:
                h[i] = 1 + max(h[j] for j in _bits(below))
        return h

    def rank_partition(self) -> list[set[str]]:
        """Elements grouped by height, bottom row first."""
        if not self.elements:
            return []
        h = self._heights()
        rows: list[set[str]] = [set() for _ in range(max(h) + 1)]
        for i, x in enumerate(self.elements):
            rows[h[i]].add(x)
        return rows

    def height(self) -> int:
        if not self.elements:
            raise EmptyPoset("height of the empty poset is undefined")
        return max(self._heights())

    # -- derived posets --------------------------------------------------

    def _restrict(self, mask: int) -> "Poset":
        keep = list(_bits(mask))
        pos = {old: new for new, old in enumerate(keep)}
        labels = tuple(self.elements[i] for i in keep)
        up = []
        for i in keep:
            row = 0
            for j in _bits(self._up[i] & mask):
                row |= 1 << pos[j]
            up.append(row)
        return Poset(labels, tuple(up))

    def subposet(self, labels: Iterable[str]) -> "Poset":
        mask = 0
        for x in labels:
            mask |= 1 << self._require(x)
        return self._restrict(mask)

    def open_interval(self, a: str, b: str) -> "Poset":
        """Induced poset on everything strictly between ``a`` and ``b``."""
        i, j = self._require(a), self._require(b)
        if i == j or not self._up[i] >> j & 1:
            raise NotComparable(f"{a!r} is not strictly below {b!r}")
        mask = self._up[i] & self._down_masks()[j] & ~(1 << i) & ~(1 << j)
        return self._restrict(mask)

    def closed_interval(self, a: str, b: str) -> "Poset":
        i, j = self._require(a), self._require(b)
        if not self._up[i] >> j & 1:
            raise NotComparable(f"{a!r} is not below {b!r}")
        return self._restrict(self._up[i] & self._down_masks()[j])

    def dual(self) -> "Poset":
        return Poset(self.elements, tuple(self._down_masks()))

    # -- width -----------------------------------------------------------

    def dilworth_number(self) -> int:
        """Size of a maximum antichain.

        Computed as ``n`` minus a maximum matching of the bipartite
        strict-comparability graph (minimum chain cover duality).
        """
        n = len(self.elements)
        if n == 0:
            return 0
        succ = [list(_bits(self._up[i] & ~(1 << i))) for i in range(n)]
        match_right: list[int] = [-1] * n

        def augment(i: int, seen: set[int]) -> bool:
            for j in succ[i]:
                if j in seen:
                    continue
                seen.add(j)
                if match_right[j] < 0 or augment(match_right[j], seen):
                    match_right[j] = i
                    return True
            return False

        matched = sum(augment(i, set()) for i in range(n))
        return n - matched

    def antichains(self, k: int) -> list[set[str]]:
        """All antichains of size exactly ``k``, in lexicographic index order."""
        if k < 0:
            raise ValueError("antichain size must be nonnegative")
        n = len(self.elements)
        down = self._down_masks()
        comparable = [self._up[i] | down[i] for i in range(n)]
        full = (1 << n) - 1
        out: list[set[str]] = []

        def extend(start: int, chosen: list[int], allowed: int) -> None:
            if len(chosen) == k:
                out.append({self.elements[i] for i in chosen})
                return
            for i in range(start, n):
                if allowed >> i & 1:
                    chosen.append(i)
                    extend(i + 1, chosen, allowed & ~comparable[i])
                    chosen.pop()

        extend(0, [], full)
        return out
