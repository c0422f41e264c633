"""Exception hierarchy shared by all modules.

Every domain error derives from SkewLabError so the CLI can map failures
to exit code 1 with a machine-readable name.
"""


class SkewLabError(Exception):
    """Base class for all domain errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


class NotSkew(SkewLabError):
    """Cell set is not a translated skew diagram."""


class NotRibbon(SkewLabError):
    """Diagram is disconnected or contains a 2x2 block."""


class Disconnected(SkewLabError):
    """Operation requires a connected diagram."""


class ProtrusionFailure(SkewLabError):
    """Ribbon does not protrude from the required end."""


class NotDefined(SkewLabError):
    """Neither projection of an amalgamated product is a skew diagram."""


class IntersectionUndefined(SkewLabError):
    """The m-intersection of two ribbons does not exist."""


class TrivialIntersection(SkewLabError):
    """The m-intersection or m-union degenerates to one of its factors."""


class InvalidNesting(SkewLabError):
    """Nesting word is malformed or inconsistent with a staircase."""


class InvalidDecomposition(SkewLabError):
    """Ribbon family is not an outside decomposition of the diagram."""


class WeightMismatch(SkewLabError):
    """Partition weight does not match the cell count."""


class FixtureMismatch(SkewLabError):
    """A bundled equivalence fixture failed verification."""
