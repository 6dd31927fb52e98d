"""Order complexes and reduced simplicial homology over the rationals.

The chain complex is augmented: dimension -1 holds the empty face, and
the boundary out of the vertices is the all-ones augmentation map.
Homology dimensions come from exact boundary ranks (rank-nullity), so
the empty complex {()} has reduced Betti number 1 in dimension -1 and
the complex of an empty open interval contributes exactly that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .errors import InvariantError, VoidComplex
from .linalg import RationalMatrix
from .poset import Poset

_ZERO = Fraction(0)
_SIGNS = (Fraction(1), Fraction(-1))


@dataclass(frozen=True)
class SimplicialComplex:
    """An abstract simplicial complex given by its maximal faces.

    ``facets`` holds label sets that are pairwise non-nested.  The void
    complex (no faces at all) is distinct from the irrelevant complex
    whose only face is the empty set.
    """

    vertices: tuple[str, ...]
    facets: frozenset[frozenset[str]]

    def __post_init__(self):
        ground = set(self.vertices)
        if len(ground) != len(self.vertices):
            raise InvariantError("duplicate vertex label")
        for facet in self.facets:
            if not facet <= ground:
                raise InvariantError("facet contains an unknown vertex")
            if not facet and len(self.facets) > 1:
                raise InvariantError("empty face can only be a facet on its own")
        for a in self.facets:
            for b in self.facets:
                if a < b:
                    raise InvariantError("facets must be pairwise non-nested")

    @classmethod
    def make(
        cls, vertices: Iterable[str], facets: Iterable[Iterable[str]]
    ) -> "SimplicialComplex":
        return cls(tuple(vertices), frozenset(frozenset(f) for f in facets))

    @property
    def is_void(self) -> bool:
        return not self.facets

    def dimension(self) -> int:
        """Largest face dimension; -1 for the irrelevant complex."""
        if self.is_void:
            raise VoidComplex("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def faces(self) -> dict[int, list[tuple[int, ...]]]:
        """All faces as sorted vertex-index tuples, grouped by dimension.

        Lexicographic order within each dimension fixes the chain-group
        bases and therefore all boundary matrix layouts.
        """
        if self.is_void:
            raise VoidComplex("the void complex has no faces")
        index = {v: i for i, v in enumerate(self.vertices)}
        seen: set[tuple[int, ...]] = set()
        for facet in self.facets:
            top = tuple(sorted(index[v] for v in facet))
            for d in range(len(top) + 1):
                seen.update(combinations(top, d))
        by_dim: dict[int, list[tuple[int, ...]]] = {}
        for face in seen:
            by_dim.setdefault(len(face) - 1, []).append(face)
        for faces in by_dim.values():
            faces.sort()
        return by_dim


@dataclass(frozen=True)
class ChainComplex:
    """Augmented chain complex of a simplicial complex.

    ``dims[d]`` counts d-dimensional faces (d = -1 is the empty face);
    ``boundary[d]`` maps d-chains to (d-1)-chains with the alternating
    sign convention, ``boundary[0]`` being the augmentation.
    """

    dims: dict[int, int]
    boundary: dict[int, RationalMatrix]


def order_complex(p: Poset) -> SimplicialComplex:
    """The complex of chains of ``p``; maximal chains are the facets.

    The empty poset yields the irrelevant complex {()}.
    """
    if len(p) == 0:
        return SimplicialComplex((), frozenset({frozenset()}))
    up_covers: dict[str, list[str]] = {x: [] for x in p}
    for lower, upper in p.covering_relations():
        up_covers[lower].append(upper)
    facets: list[frozenset[str]] = []
    chain: list[str] = []

    def extend(x: str) -> None:
        chain.append(x)
        if up_covers[x]:
            for y in up_covers[x]:
                extend(y)
        else:
            facets.append(frozenset(chain))
        chain.pop()

    for x in sorted(p.minimal_elements()):
        extend(x)
    return SimplicialComplex(p.elements, frozenset(facets))


def chain_complex(k: SimplicialComplex) -> ChainComplex:
    """Boundary matrices of ``k``; raises VoidComplex on the void complex."""
    if k.is_void:
        raise VoidComplex("the void complex has no chain complex")
    by_dim = k.faces()
    top = max(by_dim)
    dims = {d: len(by_dim[d]) for d in sorted(by_dim)}
    boundary: dict[int, RationalMatrix] = {}
    for d in range(0, top + 1):
        rows_index = {face: i for i, face in enumerate(by_dim[d - 1])}
        rows = [[_ZERO] * dims[d] for _ in range(dims[d - 1])]
        for col, face in enumerate(by_dim[d]):
            for drop in range(d + 1):
                sub = face[:drop] + face[drop + 1 :]
                rows[rows_index[sub]][col] = _SIGNS[drop & 1]
        boundary[d] = RationalMatrix(rows, ncols=dims[d])
    _check_boundary_squares_to_zero(by_dim, top)
    return ChainComplex(dims, boundary)


def _check_boundary_squares_to_zero(by_dim, top: int) -> None:
    # Sparse check of d(d(face)) = 0, face by face; cheap even when the
    # dense matrices are large.
    for d in range(1, top + 1):
        for face in by_dim[d]:
            acc: dict[tuple[int, ...], int] = {}
            for i in range(d + 1):
                sub = face[:i] + face[i + 1 :]
                s1 = -1 if i & 1 else 1
                for j in range(d):
                    subsub = sub[:j] + sub[j + 1 :]
                    s2 = -1 if j & 1 else 1
                    acc[subsub] = acc.get(subsub, 0) + s1 * s2
            if any(acc.values()):
                raise InvariantError("boundary composition is nonzero")


def _betti(cc: ChainComplex, i: int) -> int:
    top = max(cc.dims)
    if i > top:
        return 0
    faces = cc.dims[i]
    rank_out = cc.boundary[i].rank() if i >= 0 else 0
    rank_in = cc.boundary[i + 1].rank() if i + 1 <= top else 0
    return faces - rank_out - rank_in


def reduced_betti(k: SimplicialComplex, i: int) -> int:
    """dim of the i-th reduced homology of ``k`` over the rationals."""
    if i < -1:
        raise ValueError("homological degree starts at -1")
    return _betti(chain_complex(k), i)


def all_reduced_betti(k: SimplicialComplex) -> list[int]:
    """Reduced Betti numbers for i = -1 .. dim(k)."""
    cc = chain_complex(k)
    return [_betti(cc, i) for i in range(-1, max(cc.dims) + 1)]
