"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class TropcritError(Exception):
    """Base class for all errors raised by tropcrit."""


class InputError(TropcritError, ValueError):
    """The caller supplied something malformed."""


class ResourceCapExceeded(TropcritError):
    """An exhaustive routine was asked to run on a ground set that is too big."""


# matroid construction ------------------------------------------------------

class EmptyBases(InputError):
    pass


class UnequalCardinality(InputError):
    pass


class ExchangeAxiomViolated(InputError):
    def __init__(self, first, second, element):
        self.first = first
        self.second = second
        self.element = element
        super().__init__(
            f"basis exchange fails for A={sorted(first)}, B={sorted(second)}, "
            f"a={element}: no b in B-A makes (A-a)+b a basis"
        )


class InvalidRank(InputError):
    pass


class InvalidVertexIndex(InputError):
    pass


class InvalidElement(InputError):
    pass


class NotABasis(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class LoopOrColoopSpecialElement(InputError):
    pass


# partitions ----------------------------------------------------------------

class GroundMismatch(InputError):
    pass


class NotATree(InputError):
    pass


class NotCyclic(InputError):
    pass


class NotRapidlyIncreasing(InputError):
    pass


# size caps -----------------------------------------------------------------

class GroundTooLarge(ResourceCapExceeded):
    pass


class FlagEnumerationTooLarge(ResourceCapExceeded):
    pass


# critical points -----------------------------------------------------------

class DegenerateWeights(TropcritError):
    """The weight vector is not generic for this affine matroid.

    Raised by the brute-force intersection oracle instead of returning a
    count; callers that want a degree resample.
    """

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class AllTrialsDegenerate(TropcritError):
    pass


class InternalAssertionFailed(TropcritError, AssertionError):
    """A postcondition that the theory guarantees did not hold. Always a bug."""


class TheoremViolation(InternalAssertionFailed):
    """Independent counts disagreed."""


class ParseError(InputError):
    pass
