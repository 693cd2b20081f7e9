"""Exact scalars in Q(q^(1/2)) and truncated multivariate power series over them.

The formal variable is ``u = q^(1/2)``. Scalars are reduced rational functions
in ``u`` with integer coefficients; series are finite maps from dimension
vectors to scalars, truncated at a total degree.
"""
import logging
from fractions import Fraction
from typing import (
    Callable,
    Dict,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from sympy import mobius
from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement, ring

from quiverdt.exceptions import (
    LaurentExpansionError,
    SeriesInvertError,
    SeriesPreconditionError,
)
from quiverdt.typings import DimVec
from quiverdt.utils import dim_vectors, subtract

logger = logging.getLogger(__name__)

U_RING, _U = ring("u", ZZ)

Scalar = Union[int, Fraction, "QRat"]


def _to_poly(value: Union[int, Fraction, PolyElement]) -> Tuple[PolyElement, int]:
    if isinstance(value, PolyElement):
        return value, 1
    if isinstance(value, Fraction):
        return U_RING(value.numerator), value.denominator
    if isinstance(value, int):
        return U_RING(value), 1
    raise TypeError(f"cannot build a polynomial in u from {value!r}")


def _dense(poly: PolyElement) -> Tuple[int, List[int]]:
    """Return (lowest exponent, ascending coefficients) of a nonzero polynomial."""
    terms = {monom[0]: int(coeff) for monom, coeff in poly.items()}
    low, high = min(terms), max(terms)
    return low, [terms.get(e, 0) for e in range(low, high + 1)]


def _from_dense(offset: int, coeffs: Sequence[int]) -> PolyElement:
    return U_RING.from_dict(
        {(offset + i,): int(c) for i, c in enumerate(coeffs) if c}
    )


def _substitute_power(poly: PolyElement, n: int) -> PolyElement:
    return U_RING.from_dict({(monom[0] * n,): coeff for monom, coeff in poly.items()})


def _reflect(poly: PolyElement, top: int) -> PolyElement:
    """Return u^top * poly(1/u)."""
    return U_RING.from_dict({(top - monom[0],): coeff for monom, coeff in poly.items()})


class QRat:
    """Reduced rational function in u = q^(1/2) with integer coefficients.

    The numerator and denominator are coprime in Z[u] and the denominator has a
    positive leading coefficient, so two values are equal iff their stored
    polynomials are equal.

    :param num: Numerator.
    :type num: int | fractions.Fraction | sympy.polys.rings.PolyElement
    :param den: Denominator.
    :type den: int | fractions.Fraction | sympy.polys.rings.PolyElement
    :raise ZeroDivisionError: If the denominator is zero.
    """

    __slots__ = ("_num", "_den")

    def __init__(
        self,
        num: Union[int, Fraction, PolyElement] = 0,
        den: Union[int, Fraction, PolyElement] = 1,
    ) -> None:
        num_poly, num_scale = _to_poly(num)
        den_poly, den_scale = _to_poly(den)
        if not den_poly:
            raise ZeroDivisionError("QRat with zero denominator")
        p, q = (num_poly * den_scale).cancel(den_poly * num_scale)
        if q.LC < 0:
            p, q = -p, -q
        self._num: PolyElement = p
        self._den: PolyElement = q

    @classmethod
    def _make(cls, num: PolyElement, den: PolyElement) -> "QRat":
        obj = cls.__new__(cls)
        obj._num = num
        obj._den = den
        return obj

    @classmethod
    def coerce(cls, value: Scalar) -> "QRat":
        """Return value as a QRat.

        :param value: Integer, fraction or QRat.
        :type value: int | fractions.Fraction | quiverdt.qseries.QRat
        :return: Scalar.
        :rtype: quiverdt.qseries.QRat
        """
        if isinstance(value, QRat):
            return value
        return cls(value)

    @classmethod
    def u(cls, exponent: int = 1, coeff: Union[int, Fraction] = 1) -> "QRat":
        """Return coeff * u^exponent; the exponent may be negative.

        :param exponent: Power of u.
        :type exponent: int
        :param coeff: Rational coefficient.
        :type coeff: int | fractions.Fraction
        :return: Monomial.
        :rtype: quiverdt.qseries.QRat
        """
        scalar = Fraction(coeff)
        power = U_RING.from_dict({(abs(exponent),): 1})
        if exponent >= 0:
            return cls(power * scalar.numerator, scalar.denominator)
        return cls(scalar.numerator, power * scalar.denominator)

    @classmethod
    def from_laurent(cls, terms: Mapping[int, Union[int, Fraction]]) -> "QRat":
        """Build a Laurent polynomial from exponent -> coefficient pairs.

        :param terms: Coefficients keyed by u-exponent.
        :type terms: dict
        :return: Laurent polynomial.
        :rtype: quiverdt.qseries.QRat
        """
        result = ZERO
        for exponent, coeff in terms.items():
            if coeff:
                result = result + cls.u(exponent, coeff)
        return result

    @classmethod
    def from_coefficients(
        cls,
        num: Tuple[Sequence[int], int],
        den: Tuple[Sequence[int], int],
    ) -> "QRat":
        """Build a value from ascending coefficient lists with offsets.

        :param num: Numerator coefficients and the exponent of the first one.
        :type num: ([int], int)
        :param den: Denominator coefficients and the exponent of the first one.
        :type den: ([int], int)
        :return: Scalar.
        :rtype: quiverdt.qseries.QRat
        """
        (num_coeffs, num_offset), (den_coeffs, den_offset) = num, den
        top = min(num_offset, den_offset)
        return cls(
            _from_dense(num_offset - top, num_coeffs),
            _from_dense(den_offset - top, den_coeffs),
        )

    @property
    def numerator(self) -> PolyElement:
        return self._num

    @property
    def denominator(self) -> PolyElement:
        return self._den

    def numerator_coefficients(self) -> Tuple[List[int], int]:
        """Return ascending numerator coefficients and the lowest exponent."""
        if not self._num:
            return [], 0
        offset, coeffs = _dense(self._num)
        return coeffs, offset

    def denominator_coefficients(self) -> Tuple[List[int], int]:
        """Return ascending denominator coefficients and the lowest exponent."""
        offset, coeffs = _dense(self._den)
        return coeffs, offset

    ##############
    # Arithmetic #
    ##############

    def __add__(self, other: Scalar) -> "QRat":
        if not isinstance(other, (QRat, int, Fraction)):
            return NotImplemented
        other = QRat.coerce(other)
        if self._den == other._den:
            return QRat(self._num + other._num, self._den)
        return QRat(
            self._num * other._den + other._num * self._den, self._den * other._den
        )

    __radd__ = __add__

    def __neg__(self) -> "QRat":
        return QRat._make(-self._num, self._den)

    def __sub__(self, other: Scalar) -> "QRat":
        if not isinstance(other, (QRat, int, Fraction)):
            return NotImplemented
        return self + (-QRat.coerce(other))

    def __rsub__(self, other: Scalar) -> "QRat":
        return QRat.coerce(other) - self

    def __mul__(self, other: Scalar) -> "QRat":
        if not isinstance(other, (QRat, int, Fraction)):
            return NotImplemented
        other = QRat.coerce(other)
        return QRat(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "QRat":
        if not isinstance(other, (QRat, int, Fraction)):
            return NotImplemented
        other = QRat.coerce(other)
        if not other._num:
            raise ZeroDivisionError("division by zero QRat")
        return QRat(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other: Scalar) -> "QRat":
        return QRat.coerce(other) / self

    def __pow__(self, exponent: int) -> "QRat":
        if exponent >= 0:
            return QRat._make(self._num**exponent, self._den**exponent)
        return (ONE / self) ** (-exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QRat(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash(
            (
                tuple(sorted((m[0], int(c)) for m, c in self._num.items())),
                tuple(sorted((m[0], int(c)) for m, c in self._den.items())),
            )
        )

    def __bool__(self) -> bool:
        return bool(self._num)

    def __repr__(self) -> str:
        return f"QRat(({self._num}) / ({self._den}))"

    ##################
    # Substitutions  #
    ##################

    def adams(self, n: int) -> "QRat":
        """Substitute u -> u^n.

        :param n: Positive integer.
        :type n: int
        :return: Substituted value.
        :rtype: quiverdt.qseries.QRat
        """
        if n == 1:
            return self
        return QRat(_substitute_power(self._num, n), _substitute_power(self._den, n))

    def invert_q(self) -> "QRat":
        """Substitute u -> 1/u (that is, q -> 1/q) and renormalize.

        :return: Substituted value.
        :rtype: quiverdt.qseries.QRat
        """
        if not self._num:
            return self
        top = max(self._num.degree(), self._den.degree())
        return QRat(_reflect(self._num, top), _reflect(self._den, top))

    ###################
    # Laurent views   #
    ###################

    def valuation(self) -> int:
        """Return the order of vanishing at u = 0 (negative for poles).

        :return: Valuation.
        :rtype: int
        :raise quiverdt.exceptions.LaurentExpansionError: If the value is zero.
        """
        if not self._num:
            raise LaurentExpansionError("zero has no valuation")
        return _dense(self._num)[0] - _dense(self._den)[0]

    def is_laurent_polynomial(self) -> bool:
        """Return True if the denominator is a single monomial c * u^k."""
        return len(self._den) == 1

    def laurent_terms(self) -> Dict[int, Fraction]:
        """Return the nonzero coefficients of a Laurent polynomial.

        :return: Coefficients keyed by u-exponent, ascending.
        :rtype: dict
        :raise quiverdt.exceptions.LaurentExpansionError: If the value is not a
            Laurent polynomial.
        """
        if not self.is_laurent_polynomial():
            raise LaurentExpansionError(f"{self!r} is not a Laurent polynomial")
        ((shift,), scale), = self._den.items()
        terms = {
            monom[0] - shift: Fraction(int(coeff), int(scale))
            for monom, coeff in self._num.items()
        }
        return dict(sorted(terms.items()))

    def evaluate_at_one(self) -> Fraction:
        """Return the value at u = 1.

        :raise ZeroDivisionError: If the denominator vanishes at u = 1.
        """
        den = sum(int(c) for c in self._den.values())
        if den == 0:
            raise ZeroDivisionError(f"{self!r} has a pole at u = 1")
        return Fraction(sum(int(c) for c in self._num.values()), den)


ZERO = QRat(0)
ONE = QRat(1)


class LaurentExpansion(NamedTuple):
    """Coefficients of u^valuation, ..., u^cap in a Laurent expansion."""

    valuation: int
    coefficients: List[Fraction]

    def coefficient(self, exponent: int) -> Fraction:
        index = exponent - self.valuation
        if 0 <= index < len(self.coefficients):
            return self.coefficients[index]
        if index < 0:
            return Fraction(0)
        raise LaurentExpansionError(f"exponent {exponent} lies beyond the cap")


def invert_q(r: QRat) -> QRat:
    """Substitute u -> 1/u. See :meth:`QRat.invert_q`."""
    return r.invert_q()


def laurent_coefficients(r: QRat, cap: int) -> LaurentExpansion:
    """Expand r as a Laurent series at u = 0 up to u^cap.

    :param r: Rational function.
    :type r: quiverdt.qseries.QRat
    :param cap: Largest exponent to produce.
    :type cap: int
    :return: Valuation and the coefficients from u^valuation to u^cap.
    :rtype: quiverdt.qseries.LaurentExpansion
    """
    if not r:
        return LaurentExpansion(0, [Fraction(0)] * max(cap + 1, 0))
    num_low, num = _dense(r.numerator)
    den_low, den = _dense(r.denominator)
    valuation = num_low - den_low
    if cap < valuation:
        return LaurentExpansion(valuation, [])
    lead = den[0]
    out: List[Fraction] = []
    for n in range(cap - valuation + 1):
        acc = Fraction(num[n]) if n < len(num) else Fraction(0)
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * out[n - k]
        out.append(acc / lead)
    return LaurentExpansion(valuation, out)


def q_pochhammer(n: int, step: int = 2) -> QRat:
    """Return prod_{j=1..n} (1 - u^(step*j)).

    step=2 gives (q)_n and step=-2 gives (q^-1)_n.

    :param n: Number of factors.
    :type n: int
    :param step: u-exponent increment.
    :type step: int
    :return: Product.
    :rtype: quiverdt.qseries.QRat
    """
    result = ONE
    for j in range(1, n + 1):
        result = result * (ONE - QRat.u(step * j))
    return result


class MSeries:
    """Power series in vertex variables x_0..x_{n-1} with QRat coefficients.

    Coefficients are stored for dimension vectors of total degree at most
    ``order``; absent keys mean zero. Values are immutable.

    :param nvars: Number of variables.
    :type nvars: int
    :param order: Truncation bound on the total degree.
    :type order: int
    :param coeffs: Coefficients keyed by dimension vector. Keys beyond the
        order are dropped.
    :type coeffs: dict | None
    """

    __slots__ = ("_nvars", "_order", "_coeffs")

    def __init__(
        self,
        nvars: int,
        order: int,
        coeffs: Optional[Mapping[DimVec, Scalar]] = None,
    ) -> None:
        if nvars < 1:
            raise SeriesPreconditionError("series needs at least one variable")
        if order < 0:
            raise SeriesPreconditionError(f"negative truncation order {order}")
        self._nvars = nvars
        self._order = order
        store: Dict[DimVec, QRat] = {}
        for key, value in (coeffs or {}).items():
            d = tuple(key)
            if len(d) != nvars:
                raise SeriesPreconditionError(
                    f"key {d} does not have {nvars} entries"
                )
            if sum(d) > order:
                continue
            scalar = QRat.coerce(value)
            if scalar:
                store[d] = scalar
        self._coeffs = store

    @classmethod
    def one(cls, nvars: int, order: int) -> "MSeries":
        return cls(nvars, order, {(0,) * nvars: ONE})

    @classmethod
    def monomial(
        cls, d: Sequence[int], coeff: Scalar, order: int
    ) -> "MSeries":
        """Return coeff * x^d truncated at order."""
        return cls(len(d), order, {tuple(d): coeff})

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def order(self) -> int:
        return self._order

    def __getitem__(self, d: Sequence[int]) -> QRat:
        return self._coeffs.get(tuple(d), ZERO)

    def __iter__(self) -> Iterator[DimVec]:
        return iter(sorted(self._coeffs))

    def __len__(self) -> int:
        return len(self._coeffs)

    def items(self) -> List[Tuple[DimVec, QRat]]:
        """Return the nonzero coefficients in lexicographic key order."""
        return sorted(self._coeffs.items())

    @property
    def constant_term(self) -> QRat:
        return self[(0,) * self._nvars]

    def in_maximal_ideal(self) -> bool:
        """Return True if the constant term vanishes."""
        return not self.constant_term

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MSeries):
            return NotImplemented
        return (
            self._nvars == other._nvars
            and self._order == other._order
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self._nvars, self._order, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{d}: {c!r}" for d, c in self.items())
        return f"MSeries(nvars={self._nvars}, order={self._order}, {{{body}}})"

    def truncate(self, order: int) -> "MSeries":
        return MSeries(self._nvars, min(order, self._order), self._coeffs)

    def map_coefficients(self, func: Callable[[QRat], QRat]) -> "MSeries":
        """Apply func to every stored coefficient."""
        return MSeries(
            self._nvars, self._order, {d: func(c) for d, c in self._coeffs.items()}
        )

    def map_items(self, func: Callable[[DimVec, QRat], QRat]) -> "MSeries":
        """Apply func(d, coefficient) to every stored coefficient."""
        return MSeries(
            self._nvars, self._order, {d: func(d, c) for d, c in self._coeffs.items()}
        )

    def rescale(self, power: int) -> "MSeries":
        """Substitute x_i -> u^power * x_i."""
        return self.map_items(lambda d, c: c * QRat.u(power * sum(d)))

    def _check_compatible(self, other: "MSeries") -> None:
        if self._nvars != other._nvars:
            raise SeriesPreconditionError(
                f"series in {self._nvars} and {other._nvars} variables"
            )

    def __add__(self, other: Union["MSeries", Scalar]) -> "MSeries":
        if not isinstance(other, MSeries):
            other = MSeries(self._nvars, self._order, {(0,) * self._nvars: other})
        self._check_compatible(other)
        coeffs = dict(self._coeffs)
        for d, c in other._coeffs.items():
            coeffs[d] = coeffs.get(d, ZERO) + c
        return MSeries(self._nvars, min(self._order, other._order), coeffs)

    __radd__ = __add__

    def __neg__(self) -> "MSeries":
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other: Union["MSeries", Scalar]) -> "MSeries":
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "MSeries":
        return (-self) + other

    def __mul__(self, other: Union["MSeries", Scalar]) -> "MSeries":
        if not isinstance(other, MSeries):
            scalar = QRat.coerce(other)
            return self.map_coefficients(lambda c: c * scalar)
        self._check_compatible(other)
        order = min(self._order, other._order)
        coeffs: Dict[DimVec, QRat] = {}
        for a, ca in self._coeffs.items():
            for b, cb in other._coeffs.items():
                if sum(a) + sum(b) > order:
                    continue
                key = tuple(x + y for x, y in zip(a, b))
                coeffs[key] = coeffs.get(key, ZERO) + ca * cb
        return MSeries(self._nvars, order, coeffs)

    __rmul__ = __mul__


##########################
# Plethystic operations  #
##########################


def adams(f: MSeries, n: int) -> MSeries:
    """Apply the n-th Adams operation x_i -> x_i^n, u -> u^n.

    :param f: Series.
    :type f: quiverdt.qseries.MSeries
    :param n: Positive integer.
    :type n: int
    :return: Substituted series, truncated at the order of f.
    :rtype: quiverdt.qseries.MSeries
    :raise quiverdt.exceptions.SeriesPreconditionError: If n < 1.
    """
    if n < 1:
        raise SeriesPreconditionError(f"Adams operation needs n >= 1, got {n}")
    coeffs = {
        tuple(n * x for x in d): c.adams(n)
        for d, c in f.items()
        if n * sum(d) <= f.order
    }
    return MSeries(f.nvars, f.order, coeffs)


def _exp(h: MSeries) -> MSeries:
    # Euler-operator recursion: |d| g_d = sum_{0 < e <= d} |e| h_e g_{d-e}.
    zero = (0,) * h.nvars
    weighted = [(e, c * sum(e)) for e, c in h.items()]
    g: Dict[DimVec, QRat] = {zero: ONE}
    for d in dim_vectors(h.nvars, h.order, min_total=1):
        acc = ZERO
        for e, he in weighted:
            rest = subtract(d, e)
            if rest is None:
                continue
            tail = g.get(rest)
            if tail is not None:
                acc = acc + he * tail
        if acc:
            g[d] = acc / sum(d)
    return MSeries(h.nvars, h.order, g)


def _log(g: MSeries) -> MSeries:
    # Inverse of _exp for a series with constant term 1.
    weighted: Dict[DimVec, QRat] = {}
    for d in dim_vectors(g.nvars, g.order, min_total=1):
        acc = g[d] * sum(d)
        for e, he in weighted.items():
            rest = subtract(d, e)
            if rest is None:
                continue
            tail = g[rest]
            if tail:
                acc = acc - he * tail
        if acc:
            weighted[d] = acc
    return MSeries(g.nvars, g.order, {d: c / sum(d) for d, c in weighted.items()})


def pleth_exp(f: MSeries) -> MSeries:
    """Return the plethystic exponential exp(sum_n adams(f, n) / n).

    :param f: Series with zero constant term.
    :type f: quiverdt.qseries.MSeries
    :return: Series with constant term 1.
    :rtype: quiverdt.qseries.MSeries
    :raise quiverdt.exceptions.SeriesPreconditionError: If the constant term
        of f is nonzero.
    """
    if not f.in_maximal_ideal():
        raise SeriesPreconditionError("plethystic exponential needs zero constant term")
    power_sum = MSeries(f.nvars, f.order)
    for n in range(1, f.order + 1):
        power_sum = power_sum + adams(f, n) * Fraction(1, n)
    return _exp(power_sum)


def pleth_log(g: MSeries) -> MSeries:
    """Return the plethystic logarithm, the inverse of :func:`pleth_exp`.

    Computed as sum_n mobius(n)/n * adams(log g, n).

    :param g: Series with constant term 1.
    :type g: quiverdt.qseries.MSeries
    :return: Series with zero constant term.
    :rtype: quiverdt.qseries.MSeries
    :raise quiverdt.exceptions.SeriesPreconditionError: If the constant term
        of g is not 1.
    """
    if g.constant_term != ONE:
        raise SeriesPreconditionError("plethystic logarithm needs constant term 1")
    log_g = _log(g)
    logger.debug("log taken: %d nonzero coefficients", len(log_g))
    result = MSeries(g.nvars, g.order)
    for n in range(1, g.order + 1):
        mu = int(mobius(n))
        if mu:
            result = result + adams(log_g, n) * Fraction(mu, n)
    return result


def series_invert(f: MSeries) -> MSeries:
    """Return the multiplicative inverse of f.

    :param f: Series with nonzero constant term.
    :type f: quiverdt.qseries.MSeries
    :return: Series g with f * g = 1 at the order of f.
    :rtype: quiverdt.qseries.MSeries
    :raise quiverdt.exceptions.SeriesInvertError: If the constant term is zero.
    """
    head = f.constant_term
    if not head:
        raise SeriesInvertError("series with zero constant term is not invertible")
    inv_head = ONE / head
    tail = [(e, c) for e, c in f.items() if any(e)]
    g: Dict[DimVec, QRat] = {(0,) * f.nvars: inv_head}
    for d in dim_vectors(f.nvars, f.order, min_total=1):
        acc = ZERO
        for e, c in tail:
            rest = subtract(d, e)
            if rest is None:
                continue
            prev = g.get(rest)
            if prev is not None:
                acc = acc + c * prev
        if acc:
            g[d] = -(acc * inv_head)
    return MSeries(f.nvars, f.order, g)
