"""Rational affine hyperplane arrangements and their intersection posets.

Flats are canonicalized as the reduced row echelon form of their
defining system [normal | constant] (rows read "n.x + c = 0"), so two
subsets of hyperplanes with the same intersection get the same
fingerprint and the intersection (semi)lattice falls out of string
identity.  Region counts are Zaslavsky's Moebius sums; the complement
Betti numbers group the same sums by codimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DuplicateHyperplane, IndexOutOfRange, InvariantError, ShapeMismatch
from .linalg import RationalMatrix, Rational
from .order import adjoin_max, moebius, moebius_table
from .poset import Poset


@dataclass(frozen=True)
class Hyperplane:
    """The affine hyperplane {x : normal . x + constant = 0}."""

    normal: tuple[Fraction, ...]
    constant: Fraction

    def __post_init__(self):
        if not any(self.normal):
            raise ValueError("hyperplane normal must be nonzero")

    @classmethod
    def from_coefficients(cls, coefficients: Sequence) -> "Hyperplane":
        """Build from n+1 rationals a1 .. an c meaning a.x + c = 0."""
        values = [v if isinstance(v, Fraction) else Fraction(v) for v in coefficients]
        if len(values) < 2:
            raise ShapeMismatch("need at least one normal coordinate and a constant")
        return cls(tuple(values[:-1]), values[-1])

    def coefficients(self) -> tuple[Fraction, ...]:
        return self.normal + (self.constant,)

    def _scaled_key(self) -> tuple[Fraction, ...]:
        coeffs = self.coefficients()
        lead = next(v for v in coeffs if v)
        return tuple(v / lead for v in coeffs)


@dataclass(frozen=True)
class Arrangement:
    """A finite list of pairwise distinct affine hyperplanes."""

    ambient_dim: int
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self):
        seen = {}
        for i, h in enumerate(self.hyperplanes):
            if len(h.normal) != self.ambient_dim:
                raise ShapeMismatch(
                    f"hyperplane {i} lives in dimension {len(h.normal)}, not {self.ambient_dim}"
                )
            key = h._scaled_key()
            if key in seen:
                raise DuplicateHyperplane(
                    f"hyperplanes {seen[key]} and {i} are proportional"
                )
            seen[key] = i


@dataclass(frozen=True)
class Flat:
    """A nonempty intersection of hyperplanes, canonicalized by RREF."""

    system: RationalMatrix
    codim: int
    label: str


def _flat_from_system(system: RationalMatrix, ambient_dim: int) -> Flat | None:
    reduced, rank, pivots = system.rref()
    if ambient_dim in pivots:
        return None  # a row reduced to "0 = nonzero": empty intersection
    rows = reduced.rows[:rank]
    canonical = RationalMatrix(rows, ncols=ambient_dim + 1)
    return Flat(canonical, rank, f"{rank}:{canonical}")


def flat_of(arrangement: Arrangement, indices: Iterable[int]) -> Flat | None:
    """The flat cut out by the given hyperplanes, or None if empty.

    The empty index set yields the ambient-space flat of codimension 0.
    """
    chosen = sorted(set(indices))
    for i in chosen:
        if not 0 <= i < len(arrangement.hyperplanes):
            raise IndexOutOfRange(f"hyperplane index {i}")
    rows = [arrangement.hyperplanes[i].coefficients() for i in chosen]
    system = RationalMatrix(rows, ncols=arrangement.ambient_dim + 1)
    return _flat_from_system(system, arrangement.ambient_dim)


def flat_leq(f: Flat, g: Flat) -> bool:
    """Reverse-inclusion order: f <= g iff g's point set is inside f's."""
    if f.system.ncols != g.system.ncols:
        raise ShapeMismatch("flats of different ambient dimension")
    return f.system.stack(g.system).rank() == g.codim


def _flats(arrangement: Arrangement) -> dict[str, Flat]:
    """All flats, found by intersecting known flats with one more hyperplane."""
    n = arrangement.ambient_dim
    ambient = _flat_from_system(RationalMatrix((), ncols=n + 1), n)
    assert ambient is not None
    flats = {ambient.label: ambient}
    frontier = [ambient]
    while frontier:
        fresh = []
        for flat in frontier:
            for h in arrangement.hyperplanes:
                extended = RationalMatrix(
                    flat.system.rows + (h.coefficients(),), ncols=n + 1
                )
                candidate = _flat_from_system(extended, n)
                if candidate is not None and candidate.label not in flats:
                    flats[candidate.label] = candidate
                    fresh.append(candidate)
        frontier = fresh
    return flats


def intersection_lattice(arrangement: Arrangement) -> Poset:
    """Poset of flats under reverse inclusion, labelled by flat fingerprint.

    The minimal element is the ambient flat "0:"; element heights agree
    with flat codimension.
    """
    flats = _flats(arrangement)
    return Poset.from_order(flats, lambda s, t: flat_leq(flats[s], flats[t]))


def is_central(arrangement: Arrangement) -> bool:
    """True iff all hyperplanes share a common point."""
    return flat_of(arrangement, range(len(arrangement.hyperplanes))) is not None


def _bottom_label(lattice: Poset) -> str:
    bottoms = lattice.minimal_elements()
    if bottoms != {"0:"}:
        raise InvariantError("intersection lattice lost its ambient flat")
    return "0:"


def real_regions(arrangement: Arrangement) -> int:
    """Number of connected regions the arrangement cuts real space into.

    Zaslavsky: the sum of |mu(ambient, x)| over all flats x.
    """
    lattice = intersection_lattice(arrangement)
    bottom = _bottom_label(lattice)
    table = moebius_table(lattice)
    return sum(abs(table[(bottom, x)]) for x in lattice)


def bounded_regions(arrangement: Arrangement) -> int:
    """Number of bounded regions: |mu(ambient, top)| after adjoining a top.

    For non-essential arrangements this counts the relatively bounded
    regions, exactly as the Moebius formula states.
    """
    lattice = intersection_lattice(arrangement)
    bottom = _bottom_label(lattice)
    with_top = adjoin_max(lattice, label="top")
    return abs(moebius(with_top, bottom, "top"))


def complement_betti(arrangement: Arrangement) -> list[int]:
    """Betti numbers of the complex complement, by codimension.

    Entry i sums |mu(ambient, x)| over flats x of codimension i; the
    vector length is the arrangement's rank plus one.
    """
    flats = _flats(arrangement)
    lattice = Poset.from_order(flats, lambda s, t: flat_leq(flats[s], flats[t]))
    bottom = _bottom_label(lattice)
    table = moebius_table(lattice)
    betti = [0] * (max(f.codim for f in flats.values()) + 1)
    for label, flat in flats.items():
        betti[flat.codim] += abs(table[(bottom, label)])
    return betti
