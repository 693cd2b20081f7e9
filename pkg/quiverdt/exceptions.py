from typing import Optional

from quiverdt.typings import Witness


class QuiverDTError(Exception):
    """Base class for all exceptions in quiverdt."""


class QuiverInputError(QuiverDTError):
    """Base class for errors caused by caller input.

    :param msg: Error message.
    :type msg: str

    :cvar source: Source of the error (always set to "input").
    :vartype source: str
    :ivar message: Error message.
    :vartype message: str
    """

    source = "input"

    def __init__(self, msg: str) -> None:
        super().__init__(msg)
        self.message = msg


class QuiverComputeError(QuiverDTError):
    """Base class for errors detected while computing.

    :param msg: Error message.
    :type msg: str
    :param witness: Offending dimension vector or degree, if any.
    :type witness: object

    :cvar source: Source of the error (always set to "compute").
    :vartype source: str
    :ivar message: Error message.
    :vartype message: str
    :ivar witness: Offending dimension vector or degree.
    :vartype witness: object
    """

    source = "compute"

    def __init__(self, msg: str, witness: Optional[Witness] = None) -> None:
        if witness is not None:
            msg = f"[{witness}] {msg}"
        super().__init__(msg)
        self.message = msg
        self.witness = witness


####################
# Input Exceptions #
####################


class QuiverParseError(QuiverInputError):
    """Quiver description is malformed."""


class QuiverValidationError(QuiverInputError):
    """Quiver matrix is not square, not symmetric or has negative entries."""


class DimensionMismatchError(QuiverInputError):
    """Dimension vector length does not match the number of vertices."""


class RunConfigError(QuiverInputError):
    """Command-line configuration is invalid."""


#####################
# Series Exceptions #
#####################


class SeriesPreconditionError(QuiverInputError):
    """Series operation called outside its domain."""


class SeriesInvertError(QuiverComputeError):
    """Series has zero constant term and cannot be inverted."""


class LaurentExpansionError(QuiverComputeError):
    """Rational function cannot be expanded as a Laurent series in u."""


########################
# Integrity Exceptions #
########################


class DTIntegrityError(QuiverComputeError):
    """DT invariant is not a Laurent polynomial with non-negative coefficients."""


class CharacterIntegrityError(QuiverComputeError):
    """Lie algebra character violates a polynomiality or freeness property."""
