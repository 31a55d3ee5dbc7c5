"""Exception types shared across the toolkit.

Every raised condition that a caller can act on gets its own class; all
inherit from BlocktoolError so CLI entry points can catch one base type.
"""


class BlocktoolError(Exception):
    """Base class for all toolkit errors."""

    code = "error"


class GroupTooLarge(BlocktoolError):
    """Group order exceeds the configured enumeration bound."""

    code = "group-too-large"


class NotAMember(BlocktoolError):
    code = "not-a-member"


class NotASubgroup(BlocktoolError):
    code = "not-a-subgroup"


class InvalidGaloisParameter(BlocktoolError):
    code = "invalid-galois-parameter"


class NotAnAlgebraicInteger(BlocktoolError):
    code = "not-an-algebraic-integer"


class IntegralityFailure(BlocktoolError):
    """A central-character value failed the algebraic-integer check."""

    code = "integrality-failure"


class InternalInconsistency(BlocktoolError):
    """Two independent computations of the same quantity disagree."""

    code = "internal-inconsistency"


class NoDominatedBlock(BlocktoolError):
    code = "no-dominated-block"


class NotCyclicDefect(BlocktoolError):
    code = "not-cyclic-defect"


class CentralDefect(BlocktoolError):
    """The defect group is central; the cyclic-block machinery does not apply."""

    code = "central-defect"


class InconsistentCount(BlocktoolError):
    """|Irr(B)| != e + (|D|-1)/e for a supposedly cyclic block."""

    code = "inconsistent-count"


class NotATree(BlocktoolError):
    code = "not-a-tree"


class NegativeDegree(BlocktoolError):
    """A derived Brauer character came out with non-positive degree."""

    code = "negative-degree"


class NotSupported(BlocktoolError):
    code = "not-supported"


class CorrespondentNotFound(BlocktoolError):
    code = "correspondent-not-found"


class NotAnAutomorphism(BlocktoolError):
    code = "not-an-automorphism"


class UnsupportedSeries(BlocktoolError):
    code = "unsupported-series"


class NotCoprime(BlocktoolError):
    code = "not-coprime"


class RealizationMismatch(BlocktoolError):
    code = "realization-mismatch"


class InvalidInput(BlocktoolError):
    """Malformed file or argument."""

    code = "invalid-input"
