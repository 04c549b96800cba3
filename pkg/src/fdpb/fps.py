"""Truncated formal power series in t over Q[L, x].

A :class:`Series` stores exact coefficients of t^0 .. t^N (ordinary
convention, f = sum a_n t^n); everything beyond the truncation order N is
unknown, not zero.  Arithmetic results carry the minimum order of the
operands; division and composition reduce the order according to the
valuation rules documented on each operation.

All the generating functions in this library are built here.  The one
delicate point is that exponents and logarithms of the form
(1 + L t)^(mu/L) and (1/L) log(1 + L t) are produced by closed-form
coefficient builders (:func:`degenerate_pow`, :func:`lambda_log`) so that
no coefficient ever leaves Q[L, x]; dividing literally by the scalar L
would force a rational-function ring.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .ring import ONE, ZERO, BiPoly, RatLike


class SeriesError(Exception):
    pass


class NonUnitLeadingCoefficient(SeriesError):
    """Divisor's leading coefficient is not a nonzero rational constant."""


class ValuationMismatch(SeriesError):
    """Dividend vanishes to lower order than the divisor."""


class NonzeroConstantTerm(SeriesError):
    """Inner series of a composition must have zero constant term."""


class BadConstantTerm(SeriesError):
    """log needs constant term 1; exp needs constant term 0."""


class OrderExceeded(SeriesError):
    """Requested a coefficient beyond the truncation order."""


def _coerce_poly(value: BiPoly | RatLike) -> BiPoly:
    if isinstance(value, BiPoly):
        return value
    return BiPoly.const(value)


class Series:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: list[BiPoly | RatLike] | tuple):
        if not coeffs:
            raise ValueError("a series needs at least the t^0 coefficient")
        self._coeffs = tuple(_coerce_poly(c) for c in coeffs)

    @classmethod
    def constant(cls, value: BiPoly | RatLike, order: int) -> Series:
        return cls([value] + [ZERO] * order)

    @classmethod
    def t(cls, order: int) -> Series:
        return cls([ZERO, ONE] + [ZERO] * (order - 1))

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[BiPoly, ...]:
        return self._coeffs

    def coeff(self, n: int) -> BiPoly:
        if n > self.order:
            raise OrderExceeded(f"coefficient {n} beyond truncation order {self.order}")
        return self._coeffs[n]

    def valuation(self) -> int:
        """Index of the first nonzero coefficient; order+1 if all vanish."""
        for n, c in enumerate(self._coeffs):
            if not c.is_zero():
                return n
        return self.order + 1

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise OrderExceeded(f"cannot extend order {self.order} to {order}")
        return Series(self._coeffs[: order + 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: Series) -> Series:
        n = min(self.order, other.order)
        return Series([self._coeffs[i] + other._coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: Series) -> Series:
        n = min(self.order, other.order)
        return Series([self._coeffs[i] - other._coeffs[i] for i in range(n + 1)])

    def __neg__(self) -> Series:
        return Series([-c for c in self._coeffs])

    def __mul__(self, other: Series | BiPoly | RatLike) -> Series:
        if not isinstance(other, Series):
            c = _coerce_poly(other)
            return Series([a * c for a in self._coeffs])
        n = min(self.order, other.order)
        out = []
        for m in range(n + 1):
            acc = ZERO
            for i in range(m + 1):
                a, b = self._coeffs[i], other._coeffs[m - i]
                if not (a.is_zero() or b.is_zero()):
                    acc = acc + a * b
            out.append(acc)
        return Series(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Series) -> Series:
        return series_div(self, other)

    def __repr__(self) -> str:
        return f"Series({[str(c) for c in self._coeffs]})"


def series_div(f: Series, g: Series) -> Series:
    """Exact quotient q with q * g = f up to order N - valuation(g).

    The divisor must begin with an invertible scalar: its first nonzero
    coefficient has to be a nonzero rational constant.
    """
    v = g.valuation()
    if v > g.order:
        raise NonUnitLeadingCoefficient("division by the zero series")
    lead = g.coeff(v)
    if not lead.is_constant():
        raise NonUnitLeadingCoefficient(f"leading coefficient {lead} is not a scalar")
    if f.valuation() < v:
        raise ValuationMismatch(
            f"dividend valuation {f.valuation()} < divisor valuation {v}"
        )
    n = min(f.order, g.order) - v
    lead_inv = Fraction(1) / lead.constant()
    fs = f.coeffs[v:]
    gs = g.coeffs[v:]
    q: list[BiPoly] = []
    for m in range(n + 1):
        acc = fs[m]
        for i in range(m):
            if not (q[i].is_zero() or gs[m - i].is_zero()):
                acc = acc - q[i] * gs[m - i]
        q.append(acc * lead_inv)
    return Series(q)


def series_compose(outer: Series, inner: Series) -> Series:
    """Substitute inner(t) into outer, exact up to the shared order."""
    if not inner.coeff(0).is_zero():
        raise NonzeroConstantTerm("inner series must have zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    out = Series.constant(outer.coeff(0), n)
    power = Series.constant(ONE, n)
    for m in range(1, n + 1):
        power = power * inner
        out = out + power * outer.coeff(m)
    return out


def series_log(f: Series) -> Series:
    if f.coeff(0) != ONE:
        raise BadConstantTerm("log needs constant term 1")
    n = f.order
    u = f - Series.constant(ONE, n)
    out = Series.constant(ZERO, n)
    power = Series.constant(ONE, n)
    for m in range(1, n + 1):
        power = power * u
        out = out + power * Fraction((-1) ** (m - 1), m)
    return out


def series_exp(f: Series) -> Series:
    if not f.coeff(0).is_zero():
        raise BadConstantTerm("exp needs constant term 0")
    n = f.order
    out = Series.constant(ONE, n)
    power = Series.constant(ONE, n)
    for m in range(1, n + 1):
        power = power * f
        out = out + power * Fraction(1, factorial(m))
    return out


def series_integrate(f: Series) -> Series:
    """Formal antiderivative from 0; the order grows by one (it is exact)."""
    return Series([ZERO] + [c / (n + 1) for n, c in enumerate(f.coeffs)])


def series_derivative(f: Series) -> Series:
    """Termwise d/dt; the order drops by one."""
    if f.order == 0:
        return Series([ZERO])
    return Series([c * (n + 1) for n, c in enumerate(f.coeffs[1:])])


def degenerate_pow(mu: BiPoly | RatLike, order: int) -> Series:
    """The series (1 + L t)^(mu/L), built without dividing by L.

    Its EGF coefficient n is the generalized falling factorial
    mu (mu - L) ... (mu - (n-1) L); at L = 0 the series is exp(mu t).
    """
    mu = _coerce_poly(mu)
    coeffs = []
    acc = ONE
    for n in range(order + 1):
        coeffs.append(acc / factorial(n))
        acc = acc * (mu - BiPoly({(1, 0): n}))
    return Series(coeffs)


def lambda_log(order: int) -> Series:
    """The series (1/L) log(1 + L t) = sum (-1)^(n-1) L^(n-1) t^n / n."""
    coeffs: list[BiPoly] = [ZERO]
    for n in range(1, order + 1):
        coeffs.append(BiPoly({(n - 1, 0): Fraction((-1) ** (n - 1), n)}))
    return Series(coeffs)


def exp_t(mu: BiPoly | RatLike, order: int) -> Series:
    """The series exp(mu t) with polynomial mu."""
    mu = _coerce_poly(mu)
    coeffs = []
    acc = ONE
    for n in range(order + 1):
        coeffs.append(acc / factorial(n))
        acc = acc * mu
    return Series(coeffs)


def egf_coeff(f: Series, n: int) -> BiPoly:
    """EGF-normalized coefficient n, i.e. n! times the ordinary one."""
    return f.coeff(n) * factorial(n)


def egf_series(coeffs: list[BiPoly | RatLike]) -> Series:
    """Build a series from EGF coefficients (a_n stored as a_n / n!)."""
    return Series([_coerce_poly(c) / factorial(n) for n, c in enumerate(coeffs)])
