"""Monomials, monomial ideals, lcm-lattices and Hibi ideals.

Betti numbers of a monomial quotient R/M are read off the lcm-lattice:
the multidegree-b Betti number in homological position i is the
dimension of reduced homology in degree i - 2 of the order complex of
the open interval below b.  Summing over the lattice gives the total
Betti numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NotComparable, NotInLattice, VariableMismatch
from .homology import all_reduced_betti, order_complex, reduced_betti
from .poset import Poset


@dataclass(frozen=True)
class Monomial:
    """A monomial as an exponent vector over a fixed variable list."""

    variables: tuple[str, ...]
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.variables) != len(self.exponents):
            raise VariableMismatch("one exponent per variable required")
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")

    def __str__(self) -> str:
        parts = []
        for name, e in zip(self.variables, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def degree(self) -> int:
        return sum(self.exponents)

    def is_one(self) -> bool:
        return not any(self.exponents)


def monomial(variables: Iterable[str], exponents: Iterable[int]) -> Monomial:
    return Monomial(tuple(variables), tuple(exponents))


def _require_same_variables(a: Monomial, b: Monomial) -> None:
    if a.variables != b.variables:
        raise VariableMismatch(f"{a.variables} vs {b.variables}")


def lcm(a: Monomial, b: Monomial) -> Monomial:
    """Least common multiple: the coordinatewise exponent maximum."""
    _require_same_variables(a, b)
    return Monomial(a.variables, tuple(map(max, a.exponents, b.exponents)))


def divides(a: Monomial, b: Monomial) -> bool:
    _require_same_variables(a, b)
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Construct through :func:`minimalize` unless the generators are known
    to be pairwise non-dividing.
    """

    variables: tuple[str, ...]
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.variables != self.variables:
                raise VariableMismatch("generator over a different variable list")
        gens = self.generators
        for i, a in enumerate(gens):
            for j, b in enumerate(gens):
                if i != j and divides(a, b):
                    raise ValueError(f"generator {a} divides {b}")


def minimalize(gens: Iterable[Monomial], variables: Iterable[str] | None = None) -> MonomialIdeal:
    """Ideal generated by ``gens``, reduced to minimal generators."""
    pool = list(gens)
    if variables is None:
        if not pool:
            raise ValueError("cannot infer variables from an empty generator set")
        variables = pool[0].variables
    variables = tuple(variables)
    for g in pool:
        if g.variables != variables:
            raise VariableMismatch("mixed variable lists in generator set")
    pool = sorted(set(pool), key=lambda m: m.exponents)
    minimal = [
        g
        for g in pool
        if not any(h != g and divides(h, g) for h in pool)
    ]
    return MonomialIdeal(variables, tuple(minimal))


@dataclass(frozen=True)
class LcmLattice:
    """All lcms of generator subsets, ordered by divisibility.

    ``poset`` is labelled by canonical monomial strings; ``bottom`` is
    the constant monomial 1 (the empty lcm); ``monomials`` maps each
    label back to its monomial.
    """

    poset: Poset
    bottom: Monomial
    monomials: dict[str, Monomial]

    @property
    def top(self) -> Monomial:
        return self.monomials[max(self.poset, key=lambda x: self.monomials[x].degree())]

    def atoms(self) -> set[str]:
        """Labels covering the bottom; equal to the minimal generators."""
        bottom = str(self.bottom)
        return {u for l, u in self.poset.covering_relations() if l == bottom}


def lcm_lattice(ideal: MonomialIdeal) -> LcmLattice:
    """Closure of the generators under pairwise lcm, plus the bottom 1.

    Pairwise saturation reaches every subset lcm because lcm is
    associative, commutative and idempotent.
    """
    if not ideal.generators:
        raise ValueError("lcm-lattice needs at least one generator")
    one = Monomial(ideal.variables, (0,) * len(ideal.variables))
    found = {str(m): m for m in (one, *ideal.generators)}
    frontier = list(ideal.generators)
    while frontier:
        fresh = []
        for a in frontier:
            for b in ideal.generators:
                m = lcm(a, b)
                key = str(m)
                if key not in found:
                    found[key] = m
                    fresh.append(m)
        frontier = fresh
    poset = Poset.from_order(found, lambda s, t: divides(found[s], found[t]))
    return LcmLattice(poset, one, found)


def divisor_poset(n: int) -> Poset:
    """Divisors of ``n`` ordered by divisibility; labels are decimal strings."""
    if n < 1:
        raise ValueError("divisor poset defined for positive integers")
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    value = {str(d): d for d in divisors}
    return Poset.from_order(
        (str(d) for d in divisors), lambda s, t: value[t] % value[s] == 0
    )


def hibi_ideal(p: Poset) -> MonomialIdeal:
    """The squarefree ideal with one generator per order ideal of ``p``.

    In variables x1..xn, y1..yn (element order of ``p``), the generator
    of an order ideal takes x on its members and y elsewhere, so every
    generator is squarefree of total degree n.
    """
    from .order import order_ideals

    n = len(p)
    variables = tuple(f"x{i + 1}" for i in range(n)) + tuple(f"y{i + 1}" for i in range(n))
    position = {x: i for i, x in enumerate(p.elements)}
    gens = []
    for ideal in order_ideals(p):
        exps = [0] * (2 * n)
        for x in p.elements:
            i = position[x]
            exps[i if x in ideal.members else n + i] = 1
        gens.append(Monomial(variables, tuple(exps)))
    return MonomialIdeal(variables, tuple(sorted(gens, key=lambda m: m.exponents)))


def multigraded_betti(ideal: MonomialIdeal, b: Monomial, i: int) -> int:
    """Betti number of R/M in multidegree ``b`` and homological position i.

    Equals the reduced homology dimension in degree i - 2 of the order
    complex of the open interval between 1 and ``b`` in the lcm-lattice.
    """
    if i < 1:
        raise ValueError("homological position must be at least 1")
    lattice = lcm_lattice(ideal)
    label = str(b)
    if label not in lattice.poset:
        raise NotInLattice(f"{label} is not an lcm of generators")
    if label == str(lattice.bottom):
        raise NotComparable("multidegree 1 has no open interval below it")
    interval = lattice.poset.open_interval(str(lattice.bottom), label)
    return reduced_betti(order_complex(interval), i - 2)


def total_betti(ideal: MonomialIdeal, i: int) -> int:
    """i-th total Betti number of R/M: the multigraded sum over the lattice."""
    if i < 1:
        raise ValueError("homological position must be at least 1")
    lattice = lcm_lattice(ideal)
    bottom = str(lattice.bottom)
    total = 0
    for label in lattice.poset:
        if label == bottom:
            continue
        interval = lattice.poset.open_interval(bottom, label)
        total += reduced_betti(order_complex(interval), i - 2)
    return total


def betti_numbers(ideal: MonomialIdeal) -> list[int]:
    """The total Betti row [1, b_1, b_2, ...] of R/M, trailing zeros trimmed.

    Computes each interval's homology once and accumulates all
    homological positions together.
    """
    lattice = lcm_lattice(ideal)
    bottom = str(lattice.bottom)
    row = [1]
    for label in lattice.poset:
        if label == bottom:
            continue
        interval = lattice.poset.open_interval(bottom, label)
        for degree, dim in enumerate(all_reduced_betti(order_complex(interval)), start=-1):
            if dim:
                position = degree + 2
                while len(row) <= position:
                    row.append(0)
                row[position] += dim
    return row
