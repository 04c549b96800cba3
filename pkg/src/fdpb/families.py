"""Constructors for the number and polynomial families.

Five families are covered, each reachable by at least two independent
routes so the test suite can cross-check them:

* Bernoulli polynomials           t/(e^t - 1) e^{xt}
* Carlitz degenerate Bernoulli    t/((1+Lt)^{1/L} - 1) (1+Lt)^{x/L}
* Daehee-type degenerate          (1/L)log(1+Lt)/((1+Lt)^{1/L} - 1) (1+Lt)^{x/L}
* classical poly-Bernoulli        Li_k(1-e^{-t})/(1-e^{-t}) e^{xt}
* fully degenerate poly-Bernoulli Li_k(1-(1+Lt)^{-1/L})/(1-(1+Lt)^{-1/L}) (1+Lt)^{x/L}

Number values are the x = 0 case.  Polynomial values (symbolic x) for the
fully degenerate family default to the binomial expansion over the
generalized falling factorials, which is much cheaper than the bivariate
generating function; the generating-function route stays available as the
oracle.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import fps
from .ring import LAM, ONE, X, ZERO, BiPoly, RatLike, falling_product
from .sequences import bernoulli_second_kind, stirling1, stirling2

ArgLike = BiPoly | RatLike


class RouteMismatch(Exception):
    """Two supposedly equivalent computation routes disagreed."""

    def __init__(self, message: str, lhs: BiPoly, rhs: BiPoly):
        super().__init__(f"{message}: {lhs} != {rhs}")
        self.lhs = lhs
        self.rhs = rhs


def _as_arg(arg: ArgLike) -> BiPoly:
    if isinstance(arg, BiPoly):
        return arg
    return BiPoly.const(arg)


def _work_order(n: int) -> int:
    # n + 2 guard coefficients, rounded up so series caches are shared
    return ((n + 2 + 7) // 8) * 8


@lru_cache(maxsize=None)
def _bernoulli_series(order: int, arg: BiPoly) -> fps.Series:
    t = fps.Series.t(order)
    denom = fps.series_exp(t) - fps.Series.constant(ONE, order)
    return fps.series_div(t, denom) * fps.exp_t(arg, order)


def bernoulli_poly(n: int, arg: ArgLike = X) -> BiPoly:
    """Bernoulli polynomial B_n, or its value at a rational argument."""
    return fps.egf_coeff(_bernoulli_series(_work_order(n), _as_arg(arg)), n)


@lru_cache(maxsize=None)
def _carlitz_series(order: int, arg: BiPoly) -> fps.Series:
    denom = fps.degenerate_pow(ONE, order) - fps.Series.constant(ONE, order)
    quot = fps.series_div(fps.Series.t(order), denom)
    return quot * fps.degenerate_pow(arg, order)


def carlitz_beta(n: int, arg: ArgLike = 0) -> BiPoly:
    """Carlitz degenerate Bernoulli number/polynomial of index n."""
    return fps.egf_coeff(_carlitz_series(_work_order(n), _as_arg(arg)), n)


@lru_cache(maxsize=None)
def _daehee_series(order: int, arg: BiPoly) -> fps.Series:
    denom = fps.degenerate_pow(ONE, order) - fps.Series.constant(ONE, order)
    quot = fps.series_div(fps.lambda_log(order), denom)
    return quot * fps.degenerate_pow(arg, order)


def daehee_type_b(n: int, arg: ArgLike = 0) -> BiPoly:
    """Degenerate Bernoulli number/polynomial with the log numerator."""
    return fps.egf_coeff(_daehee_series(_work_order(n), _as_arg(arg)), n)


def _polylog_over_z(k: int, z: fps.Series) -> fps.Series:
    # Li_k(z)/z = sum_{m>=0} z^m / (m+1)^k, which avoids a division
    order = z.order
    out = fps.Series.constant(ZERO, order)
    power = fps.Series.constant(ONE, order)
    for m in range(order + 1):
        out = out + power * (Fraction(m + 1) ** (-k))
        power = power * z
    return out


@lru_cache(maxsize=None)
def _poly_bernoulli_series(k: int, order: int, arg: BiPoly) -> fps.Series:
    z = fps.Series.constant(ONE, order) - fps.exp_t(-1, order)
    return _polylog_over_z(k, z) * fps.exp_t(arg, order)


def classical_poly_bernoulli(n: int, k: int, arg: ArgLike = 0) -> BiPoly:
    """Classical poly-Bernoulli number/polynomial (no L involved)."""
    return fps.egf_coeff(_poly_bernoulli_series(k, _work_order(n), _as_arg(arg)), n)


@lru_cache(maxsize=None)
def _fdpb_series(k: int, order: int, arg: BiPoly) -> fps.Series:
    z = fps.Series.constant(ONE, order) - fps.degenerate_pow(-1, order)
    return _polylog_over_z(k, z) * fps.degenerate_pow(arg, order)


def fdpb_gf(n: int, k: int, arg: ArgLike = 0) -> BiPoly:
    """Fully degenerate poly-Bernoulli value via the generating function."""
    return fps.egf_coeff(_fdpb_series(k, _work_order(n), _as_arg(arg)), n)


@lru_cache(maxsize=None)
def fdpb_closed(n: int, k: int) -> BiPoly:
    """Fully degenerate poly-Bernoulli number as the double Stirling sum."""
    out = ZERO
    for l in range(n + 1):
        s1 = stirling1(n, l)
        if s1 == 0:
            continue
        acc = Fraction(0)
        for m in range(l + 1):
            acc += (
                Fraction((-1) ** (m + l) * factorial(m) * stirling2(l, m))
                * Fraction(m + 1) ** (-k)
            )
        out = out + BiPoly({(n - l, 0): acc * s1})
    return out


def fdpb_negative_closed(n: int, k: int) -> BiPoly:
    """The negative-index double sum; equals fdpb_closed(n, -k)."""
    out = ZERO
    for m in range(n + 1):
        s1 = stirling1(n, m)
        if s1 == 0:
            continue
        acc = Fraction(0)
        for j in range(m + 1):
            acc += (
                Fraction((-1) ** (j + m) * factorial(j) * stirling2(m, j))
                * Fraction(j + 1) ** k
            )
        out = out + BiPoly({(n - m, 0): acc * s1})
    return out


@lru_cache(maxsize=None)
def fdpb_poly(n: int, k: int) -> BiPoly:
    """The degree-n polynomial, via the binomial/falling-factorial expansion."""
    out = ZERO
    for l in range(n + 1):
        out = out + comb(n, l) * falling_product(X, n - l) * fdpb_closed(l, k)
    return out


def fdpb_value(n: int, k: int, arg: ArgLike = 0) -> BiPoly:
    """Number, polynomial, or evaluated value, by the cheap expansion route."""
    arg = _as_arg(arg)
    if arg.is_zero():
        return fdpb_closed(n, k)
    if arg == X:
        return fdpb_poly(n, k)
    return fdpb_poly(n, k).subst_x(arg)


def fdpb_iterated_integral(k: int, n_max: int) -> fps.Series:
    """Generating function of the numbers via nested formal integrals.

    Starting from (1/L)log(1+Lt) / (((1+Lt)^{1/L}-1)(1+Lt)), integrate and
    divide by ((1+Lt)^{1/L}-1)(1+Lt) alternately (k-1 integrals in all),
    then multiply by (1+Lt)^{1/L} and divide by (1+Lt)^{1/L}-1.
    """
    if k < 2:
        raise ValueError("iterated-integral route needs k >= 2")
    order = n_max + 2
    pw = fps.degenerate_pow(ONE, order)
    pm1 = pw - fps.Series.constant(ONE, order)
    one_plus = fps.Series([ONE, LAM] + [ZERO] * (order - 1))
    kernel = pm1 * one_plus
    g = fps.series_div(fps.lambda_log(order), kernel)
    for i in range(k - 1):
        g = fps.series_integrate(g)
        if i < k - 2:
            g = fps.series_div(g, kernel)
    return fps.series_div(g * pw, pm1)


def fdpb_x_derivative(n: int, k: int) -> BiPoly:
    """d/dx of the degree-n polynomial, by omit-one-factor products."""
    out = ZERO
    for l in range(n + 1):
        d = n - l
        if d == 0:
            continue
        inner = ZERO
        for j in range(d):
            prod = ONE
            for i in range(d):
                if i != j:
                    prod = prod * (X - LAM * i)
            inner = inner + prod
        out = out + comb(n, l) * fdpb_closed(l, k) * inner
    return out


def _lambda_pow(c: Fraction | int, deg: int) -> BiPoly:
    return BiPoly({(deg, 0): c})


def integral_unit_interval(n: int, k: int, reading: str = "theorem") -> BiPoly:
    """Integral of the degree-n polynomial over x in [0, 1].

    Computed by direct termwise integration and by the double-sum identity
    in terms of Bernoulli numbers of the second kind; the two must agree.
    The ``reading`` switch selects which indexing of the double sum is
    assembled ("theorem" or "expansion"); they are related by reversing
    the outer summation index and agree identically.
    """
    direct = fdpb_poly(n, k).integrate_x_unit()
    total = ZERO
    if reading == "theorem":
        for l in range(n + 1):
            beta = fdpb_closed(n - l, k)
            for m in range(l + 1):
                term = (
                    comb(l, m)
                    * comb(n, l)
                    * _lambda_pow(bernoulli_second_kind(l - m), l - m)
                    * falling_product(ONE, m + 1)
                    / (m + 1)
                )
                total = total + term * beta
    elif reading == "expansion":
        for l in range(n + 1):
            beta = fdpb_closed(l, k)
            d = n - l
            for m in range(d + 1):
                term = (
                    comb(d, m)
                    * comb(n, l)
                    * _lambda_pow(bernoulli_second_kind(d - m), d - m)
                    * falling_product(ONE, m + 1)
                    / (m + 1)
                )
                total = total + term * beta
    else:
        raise ValueError(f"unknown reading {reading!r}")
    if direct != total:
        raise RouteMismatch(
            f"unit-interval integral routes disagree at n={n}, k={k}", direct, total
        )
    return direct
