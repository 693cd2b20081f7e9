from quiverdt.qseries import ONE, QRat


def u(exponent=1, coeff=1):
    """Return coeff * q^(exponent/2).

    :param exponent: Power of q^(1/2).
    :type exponent: int
    :param coeff: Coefficient.
    :type coeff: int | fractions.Fraction
    :return: Scalar.
    :rtype: quiverdt.qseries.QRat
    """
    return QRat.u(exponent, coeff)


def laurent(*pairs):
    """Build a Laurent polynomial from (exponent, coefficient) pairs."""
    return QRat.from_laurent(dict(pairs))


def geometric(start, step=2):
    """Return u^start / (1 - u^step)."""
    return u(start) / (ONE - u(step))
