"""Exception types shared across the library.

Everything raised on bad caller input derives from :class:`Error`;
:class:`InvariantError` is reserved for broken internal contracts (a bug in
this library or a corrupt value passed where a checked one was expected).
"""


class Error(Exception):
    """Base class for all finposets errors."""


class UnknownElement(Error):
    """A label that is not an element of the poset."""


class CycleError(Error):
    """Generating relations close to a directed cycle on distinct elements."""


class LabelClash(Error):
    """Two elements share a label, or an adjoined label already exists."""


class NotComparable(Error):
    """An interval endpoint pair is not ordered the way the operation needs."""


class EmptyPoset(Error):
    """Operation undefined on the empty poset."""


class NoBottom(Error):
    """The poset does not have a unique minimal element."""


class VariableMismatch(Error):
    """Monomials over different ambient variable lists were combined."""


class NotInLattice(Error):
    """A monomial that is not an element of the lcm-lattice."""


class VoidComplex(Error):
    """The void complex (no faces at all) has no chain complex."""


class ShapeMismatch(Error):
    """Matrix or vector dimensions are incompatible."""


class IndexOutOfRange(Error):
    """A hyperplane index outside the arrangement."""


class DuplicateHyperplane(Error):
    """Two hyperplanes of an arrangement have proportional coefficients."""


class ParseError(Error):
    """Malformed input file."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class InvariantError(Error):
    """An internal invariant failed; indicates a bug, not bad input."""
