"""Exception hierarchy for domain errors.

Every error raised on a violated operation contract derives from
``TropicalError``; the class name doubles as the machine-readable error
code emitted by the CLI.
"""


class TropicalError(Exception):
    """Base class for all domain errors raised by tropkit."""

    @property
    def code(self) -> str:
        return type(self).__name__


class DimensionMismatch(TropicalError):
    """Operands have incompatible dimensions."""


class BottomNotInvertible(TropicalError):
    """The bottom scalar has no multiplicative inverse."""


class BottomScaling(TropicalError):
    """Scaling a finite vector by bottom would leave the space."""


class RadiusNotAboveUnit(TropicalError):
    """Ball radii must be strictly positive."""


class CoefficientsNotNormalized(TropicalError):
    """Combination coefficients must have maximum exactly 0."""


class EmptyCombination(TropicalError):
    """A combination needs at least one finite coefficient."""


class NotAMember(TropicalError):
    """A vector required to lie in the polytope does not."""


class EmptySublevel(TropicalError):
    """No hull point lies below the requested functional values."""


class NoCycle(TropicalError):
    """The matrix digraph is acyclic, so no cycle mean exists."""


class ProblemTooLarge(TropicalError):
    """Brute-force oracle guard: the requested grid is too big."""
