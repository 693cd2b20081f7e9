from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Sequence

from quiverdt.exceptions import QuiverParseError
from quiverdt.motivic import DTResult
from quiverdt.qseries import MSeries, QRat
from quiverdt.result import Verdict
from quiverdt.typings import DimVec, Json


def _power_of_q(exponent: int) -> str:
    if exponent % 2:
        return f"q^{exponent}/2"
    half = exponent // 2
    return "q" if half == 1 else f"q^{half}"


def _laurent_text(terms: Mapping[int, Fraction]) -> str:
    parts: List[str] = []
    for exponent, coeff in sorted(terms.items()):
        sign = "-" if coeff < 0 else "+"
        size = abs(coeff)
        if exponent == 0:
            body = str(size)
        elif size == 1:
            body = _power_of_q(exponent)
        else:
            body = f"{size}*{_power_of_q(exponent)}"
        parts.append(f"{sign} {body}")
    if not parts:
        return "0"
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def format_laurent_text(value: QRat) -> str:
    """Render a value in q^(1/2) notation, e.g. ``q^-1/2 + 2 + q^1/2``.

    Values that are not Laurent polynomials are rendered as a quotient of two
    such expressions.

    :param value: Scalar.
    :type value: quiverdt.qseries.QRat
    :return: Text.
    :rtype: str
    """
    if value.is_laurent_polynomial():
        return _laurent_text(value.laurent_terms())
    num_coeffs, num_offset = value.numerator_coefficients()
    den_coeffs, den_offset = value.denominator_coefficients()
    num = {num_offset + i: Fraction(c) for i, c in enumerate(num_coeffs) if c}
    den = {den_offset + i: Fraction(c) for i, c in enumerate(den_coeffs) if c}
    return f"({_laurent_text(num)}) / ({_laurent_text(den)})"


def format_qrat(value: QRat) -> Json:
    """Format a scalar as ascending u-coefficient arrays with offsets.

    :param value: Scalar.
    :type value: quiverdt.qseries.QRat
    :return: ``{"num": [coeffs, offset], "den": [coeffs, offset]}``.
    :rtype: dict
    """
    num_coeffs, num_offset = value.numerator_coefficients()
    den_coeffs, den_offset = value.denominator_coefficients()
    return {"num": [num_coeffs, num_offset], "den": [den_coeffs, den_offset]}


def parse_qrat(body: Any) -> QRat:
    """Parse the output of :func:`format_qrat`.

    :param body: Formatted scalar.
    :type body: dict
    :return: Scalar.
    :rtype: quiverdt.qseries.QRat
    :raise quiverdt.exceptions.QuiverParseError: If the body is malformed.
    """
    try:
        (num_coeffs, num_offset) = body["num"]
        (den_coeffs, den_offset) = body["den"]
        return QRat.from_coefficients(
            ([int(c) for c in num_coeffs], int(num_offset)),
            ([int(c) for c in den_coeffs], int(den_offset)),
        )
    except (KeyError, TypeError, ValueError) as err:
        raise QuiverParseError(f"malformed scalar {body!r}: {err}")
    except ZeroDivisionError:
        raise QuiverParseError(f"scalar {body!r} has a zero denominator")


def format_dim_vector(d: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in d) + ")"


def format_dt_table(table: Mapping[DimVec, DTResult]) -> Json:
    """Format a DT table for JSON output.

    :param table: Output of :func:`quiverdt.motivic.dt_invariants`.
    :type table: dict
    :return: Entries in lexicographic dimension-vector order.
    :rtype: dict
    """
    entries = []
    for d in sorted(table):
        result = table[d]
        entry = result.to_json()
        entry["dt"] = format_qrat(result.dt)
        entry["dt_text"] = format_laurent_text(result.dt)
        entry["numerical"] = result.numerical
        entries.append(entry)
    return {"invariants": entries}


def format_dt_text(table: Mapping[DimVec, DTResult]) -> List[str]:
    """Format a DT table as one line per dimension vector."""
    return [
        f"DT{format_dim_vector(d)} = {format_laurent_text(table[d].dt)}"
        for d in sorted(table)
    ]


def format_series(series: MSeries) -> Json:
    """Format the nonzero coefficients of a series for JSON output."""
    return {
        "nvars": series.nvars,
        "order": series.order,
        "coefficients": [
            {"d": list(d), "value": format_qrat(c)} for d, c in series.items()
        ],
    }


def format_series_text(series: MSeries) -> List[str]:
    return [
        f"{format_dim_vector(d)}: {format_laurent_text(c)}" for d, c in series.items()
    ]


def format_verdict(verdict: Verdict) -> Json:
    return verdict.to_json()


def format_verdict_text(verdict: Verdict) -> str:
    """Format a verdict as ``name: pass`` or ``name: FAIL at witness (detail)``."""
    if verdict:
        suffix = f" ({verdict.detail})" if verdict.detail else ""
        return f"{verdict.name}: pass{suffix}"
    return f"{verdict.name}: FAIL at {verdict.witness!r} ({verdict.detail})"


def format_words(words: Iterable[Any]) -> List[Dict[str, Any]]:
    """Format basis words by label, multidegree and homological degree."""
    return [
        {"word": repr(w), "multidegree": list(w.multidegree), "degree": w.degree}
        for w in sorted(words)
    ]
