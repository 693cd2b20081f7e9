import pytest

from quiverdt.exceptions import (
    CharacterIntegrityError,
    DimensionMismatchError,
    DTIntegrityError,
    LaurentExpansionError,
    QuiverComputeError,
    QuiverDTError,
    QuiverInputError,
    QuiverParseError,
    QuiverValidationError,
    RunConfigError,
    SeriesInvertError,
    SeriesPreconditionError,
)
from quiverdt.qseries import MSeries, series_invert
from quiverdt.quiver import Quiver


def test_input_error():
    with pytest.raises(QuiverValidationError) as err:
        Quiver([[0, 2], [1, 0]])
    exc = err.value

    assert isinstance(exc, QuiverInputError)
    assert isinstance(exc, QuiverDTError)
    assert exc.source == "input"
    assert exc.message == str(exc)
    assert exc.message.startswith("matrix is not symmetric")


def test_compute_error():
    with pytest.raises(SeriesInvertError) as err:
        series_invert(MSeries(2, 2))
    exc = err.value

    assert isinstance(exc, QuiverComputeError)
    assert exc.source == "compute"
    assert exc.witness is None
    assert exc.message == str(exc)


def test_compute_error_witness():
    exc = DTIntegrityError("coefficient -1 of u^0", (1, 2))
    assert exc.witness == (1, 2)
    assert exc.message == "[(1, 2)] coefficient -1 of u^0"
    assert str(exc) == exc.message


def test_hierarchy():
    for cls in (
        QuiverParseError,
        QuiverValidationError,
        DimensionMismatchError,
        RunConfigError,
        SeriesPreconditionError,
    ):
        assert issubclass(cls, QuiverInputError)
    for cls in (
        SeriesInvertError,
        LaurentExpansionError,
        DTIntegrityError,
        CharacterIntegrityError,
    ):
        assert issubclass(cls, QuiverComputeError)
