"""Executable identity checks with counterexample reporting.

Every identity is verified as an exact equality of bivariate polynomials
(simultaneously in L and x), never at sampled numeric points; the one
exception is the addition formula, whose second shift variable is probed
at enough rational points (degree + 2 of them per index) to pin the
polynomial identity down completely.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Optional

from . import families as fam
from . import fps, umbral
from .ring import LAM, ONE, X, ZERO, BiPoly, canonical_string, falling_product
from .sequences import bernoulli_second_kind, gen_falling, stirling1, stirling2


class UnknownIdentity(Exception):
    pass


class IdentityId(Enum):
    THM1_ADDITION = "THM1_ADDITION"
    THM1_LIMIT = "THM1_LIMIT"
    THM2_DIFFERENCE = "THM2_DIFFERENCE"
    THM3_K2 = "THM3_K2"
    THM4_CLOSED = "THM4_CLOSED"
    THM5_RECURRENCE = "THM5_RECURRENCE"
    THM6_NEGATIVE = "THM6_NEGATIVE"
    THM7_DIFFERENCE_QUOTIENT = "THM7_DIFFERENCE_QUOTIENT"
    THM8_INTEGRAL = "THM8_INTEGRAL"
    EQ9_DELTA = "EQ9_DELTA"
    EQ14_SHIFT = "EQ14_SHIFT"
    EQ38_FALLING_INTEGRAL = "EQ38_FALLING_INTEGRAL"
    DERIV_FORMULA = "DERIV_FORMULA"
    EQ60_BASIS = "EQ60_BASIS"
    ITERATED_INTEGRAL = "ITERATED_INTEGRAL"


@dataclass(frozen=True)
class Counterexample:
    n: int
    k: Optional[int]
    lhs: BiPoly
    rhs: BiPoly

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "lhs": canonical_string(self.lhs),
            "rhs": canonical_string(self.rhs),
        }


@dataclass(frozen=True)
class Report:
    identity: IdentityId
    n_max: int
    k_min: int
    k_max: int
    status: str
    counterexample: Optional[Counterexample] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "identity": self.identity.value,
            "params": {"n_max": self.n_max, "k_min": self.k_min, "k_max": self.k_max},
            "status": self.status,
            "counterexample": (
                self.counterexample.to_dict() if self.counterexample else None
            ),
        }


Cell = tuple[int, Optional[int], BiPoly, BiPoly]


def _probe_values(count: int) -> list[BiPoly]:
    probes: list[BiPoly] = [
        ONE,
        BiPoly.const(-1),
        LAM,
        BiPoly.const(Fraction(1, 2)),
    ]
    value = 2
    while len(probes) < count:
        probes.append(BiPoly.const(value))
        value += 1
    return probes[:count]


@lru_cache(maxsize=None)
def _shift_power(y: BiPoly, b: int) -> BiPoly:
    if b == 0:
        return ONE
    return _shift_power(y, b - 1) * (X + y)


def _shifted(p: BiPoly, y: BiPoly) -> BiPoly:
    """p(x + y), with the powers of (x + y) cached across calls."""
    acc: dict[tuple[int, int], Fraction] = {}
    for (ld, xd), c in p.items():
        for (l2, x2), c2 in _shift_power(y, xd).items():
            key = (ld + l2, x2)
            prev = acc.get(key)
            prod = c * c2
            acc[key] = prod if prev is None else prev + prod
    return BiPoly(acc)


@lru_cache(maxsize=None)
def _binomial_convolution(d: int, y: BiPoly) -> BiPoly:
    """sum_j C(d, j) (y|L)_j (x|L)_{d-j}, shared by every k at a fixed probe."""
    out = ZERO
    for j in range(d + 1):
        out = out + comb(d, j) * falling_product(y, j) * gen_falling(X, d - j)
    return out


def _cells_thm1_addition(n_max: int, ks: range) -> Iterator[Cell]:
    for k in ks:
        betas = [fam.fdpb_closed(m, k) for m in range(n_max + 1)]
        for n in range(n_max + 1):
            poly = fam.fdpb_poly(n, k)
            # degree in the shift variable is at most n, so n + 2 probe
            # points prove the identity for symbolic y
            for y in _probe_values(n + 2):
                lhs = _shifted(poly, y)
                # the theorem's right side, with each basis polynomial
                # expanded through its own falling-factorial form so the
                # k-independent double sums can be cached across k
                acc: dict[tuple[int, int], Fraction] = {}
                for m in range(n + 1):
                    weighted = betas[m] * comb(n, m)
                    conv = _binomial_convolution(n - m, y)
                    for (la, _), ca in weighted.items():
                        for (lb, xb), cb in conv.items():
                            key = (la + lb, xb)
                            prev = acc.get(key)
                            prod = ca * cb
                            acc[key] = prod if prev is None else prev + prod
                yield n, k, lhs, BiPoly(acc)


def _cells_thm1_limit(n_max: int, ks: range) -> Iterator[Cell]:
    for k in ks:
        for n in range(n_max + 1):
            yield (
                n,
                k,
                fam.fdpb_poly(n, k).eval_at(lam=0),
                fam.classical_poly_bernoulli(n, k, X),
            )
    for n in range(n_max + 1):
        target = fam.bernoulli_poly(n)
        yield n, None, fam.carlitz_beta(n, X).eval_at(lam=0), target
        yield n, None, fam.daehee_type_b(n, X).eval_at(lam=0), target


def _cells_thm2(n_max: int, ks: range) -> Iterator[Cell]:
    for k in ks:
        for n in range(1, n_max + 1):
            lhs = fam.fdpb_closed(n, k) - fam.fdpb_value(n, k, -1)
            rhs = ZERO
            alt = ZERO
            for l in range(1, n + 1):
                s1 = stirling1(n, l)
                if s1 == 0:
                    continue
                for m in range(l):
                    base = (
                        factorial(m)
                        * (-1) ** (l - m - 1)
                        * stirling2(l, m + 1)
                        * s1
                    )
                    rhs = rhs + BiPoly(
                        {(n - l, 0): base * Fraction(m + 1) ** (-(k - 1))}
                    )
                    # pre-simplification weight m!(m+1)/(m+1)^k
                    alt = alt + BiPoly(
                        {(n - l, 0): base * (m + 1) * Fraction(m + 1) ** (-k)}
                    )
            yield n, k, rhs, alt
            yield n, k, lhs, rhs


def _cells_thm3(n_max: int, ks: range) -> Iterator[Cell]:
    for n in range(n_max + 1):
        rhs = ZERO
        for l in range(n + 1):
            rhs = rhs + (
                comb(n, l)
                * fam.carlitz_beta(l, 1)
                * fam.daehee_type_b(n - l, -LAM)
                / (n - l + 1)
            )
        yield n, 2, fam.fdpb_closed(n, 2), rhs


def _cells_thm4(n_max: int, ks: range) -> Iterator[Cell]:
    for k in ks:
        for n in range(n_max + 1):
            yield n, k, fam.fdpb_gf(n, k), fam.fdpb_closed(n, k)


def _cells_thm5(n_max: int, ks: range) -> Iterator[Cell]:
    for k in ks:
        for n in range(1, n_max + 1):
            rhs = fam.fdpb_closed(n, k - 1)
            for m in range(1, n):
                rhs = rhs - (
                    comb(n, m - 1)
                    * fam.fdpb_closed(m, k)
                    * gen_falling(ONE, n - m + 1)
                )
            for m in range(n):
                rhs = rhs - (
                    LAM * comb(n, m) * m * fam.fdpb_closed(m, k) * gen_falling(ONE, n - m)
                )
            yield n, k, fam.fdpb_closed(n, k), rhs / (n + 1)


def _cells_thm6(n_max: int, ks: range) -> Iterator[Cell]:
    for k in ks:
        for n in range(n_max + 1):
            yield n, k, fam.fdpb_negative_closed(n, k), fam.fdpb_closed(n, -k)


def _cells_thm7(n_max: int, ks: range) -> Iterator[Cell]:
    for k in ks:
        for n in range(1, n_max + 1):
            poly = fam.fdpb_poly(n, k)
            lhs = LAM * fam.fdpb_poly(n - 1, k)
            rhs = (poly.subst_x(X + LAM) - poly) / n
            yield n, k, lhs, rhs


def _cells_thm8(n_max: int, ks: range) -> Iterator[Cell]:
    for k in ks:
        for n in range(n_max + 1):
            direct = fam.fdpb_poly(n, k).integrate_x_unit()
            for reading in ("theorem", "expansion"):
                try:
                    value = fam.integral_unit_interval(n, k, reading=reading)
                except fam.RouteMismatch as exc:
                    value = exc.rhs
                yield n, k, direct, value
            functional = _integration_functional(n + 1)
            yield n, k, direct, umbral.pair(functional, fam.fdpb_poly(n, k))


@lru_cache(maxsize=None)
def _integration_functional(order: int) -> fps.Series:
    # (e^t - 1)/t, the functional computing the integral over [0, 1]
    t = fps.Series.t(order + 1)
    num = fps.series_exp(t) - fps.Series.constant(ONE, order + 1)
    return fps.series_div(num, t)


def _cells_eq9(n_max: int, ks: range) -> Iterator[Cell]:
    for n in range(1, n_max + 1):
        delta = ONE if n == 1 else ZERO
        yield n, None, fam.carlitz_beta(n, 1) - fam.carlitz_beta(n), delta


def _cells_eq14(n_max: int, ks: range) -> Iterator[Cell]:
    for n in range(n_max + 1):
        yield (
            n,
            1,
            fam.classical_poly_bernoulli(n, 1, X),
            fam.bernoulli_poly(n).subst_x(X + ONE),
        )


def _cells_eq38(n_max: int, ks: range) -> Iterator[Cell]:
    for n in range(n_max + 1):
        lhs = gen_falling(X, n).integrate_x_unit()
        rhs = ZERO
        for l in range(n + 1):
            rhs = rhs + (
                comb(n, l)
                * BiPoly({(n - l, 0): bernoulli_second_kind(n - l)})
                * gen_falling(ONE, l + 1)
                / (l + 1)
            )
        yield n, None, lhs, rhs


def _cells_deriv(n_max: int, ks: range) -> Iterator[Cell]:
    for k in ks:
        for n in range(n_max + 1):
            yield n, k, fam.fdpb_x_derivative(n, k), fam.fdpb_poly(n, k).derivative_x()


def _cells_eq60(n_max: int, ks: range) -> Iterator[Cell]:
    for k in ks:
        for n in range(n_max + 1):
            rhs = umbral.eq60_connection(n, k)
            # the L-dependent summands must cancel before comparison
            if not rhs.is_lambda_free():
                yield n, k, BiPoly.const(0), rhs
                continue
            yield n, k, fam.classical_poly_bernoulli(n, k, X), rhs


def _cells_iterated(n_max: int, ks: range) -> Iterator[Cell]:
    n_cap = min(n_max, 10)
    k_set = sorted(set(k for k in ks if k >= 2) | {2, 3, 4})
    for k in k_set:
        series = fam.fdpb_iterated_integral(k, n_cap)
        for n in range(n_cap + 1):
            yield n, k, fps.egf_coeff(series, n), fam.fdpb_closed(n, k)


_CHECKERS = {
    IdentityId.THM1_ADDITION: _cells_thm1_addition,
    IdentityId.THM1_LIMIT: _cells_thm1_limit,
    IdentityId.THM2_DIFFERENCE: _cells_thm2,
    IdentityId.THM3_K2: _cells_thm3,
    IdentityId.THM4_CLOSED: _cells_thm4,
    IdentityId.THM5_RECURRENCE: _cells_thm5,
    IdentityId.THM6_NEGATIVE: _cells_thm6,
    IdentityId.THM7_DIFFERENCE_QUOTIENT: _cells_thm7,
    IdentityId.THM8_INTEGRAL: _cells_thm8,
    IdentityId.EQ9_DELTA: _cells_eq9,
    IdentityId.EQ14_SHIFT: _cells_eq14,
    IdentityId.EQ38_FALLING_INTEGRAL: _cells_eq38,
    IdentityId.DERIV_FORMULA: _cells_deriv,
    IdentityId.EQ60_BASIS: _cells_eq60,
    IdentityId.ITERATED_INTEGRAL: _cells_iterated,
}


def _coerce_identity(identity: IdentityId | str) -> IdentityId:
    if isinstance(identity, IdentityId):
        return identity
    try:
        return IdentityId(identity)
    except ValueError:
        raise UnknownIdentity(f"unknown identity {identity!r}") from None


def check(
    identity: IdentityId | str,
    n_max: int = 12,
    k_range: tuple[int, int] = (-3, 3),
) -> Report:
    """Verify one identity over the requested (n, k) box."""
    identity = _coerce_identity(identity)
    k_min, k_max = k_range
    ks = range(k_min, k_max + 1)
    counterexample = None
    for n, k, lhs, rhs in _CHECKERS[identity](n_max, ks):
        lhs = lhs if isinstance(lhs, BiPoly) else BiPoly.const(lhs)
        rhs = rhs if isinstance(rhs, BiPoly) else BiPoly.const(rhs)
        if lhs != rhs:
            counterexample = Counterexample(n=n, k=k, lhs=lhs, rhs=rhs)
            break
    return Report(
        identity=identity,
        n_max=n_max,
        k_min=k_min,
        k_max=k_max,
        status="pass" if counterexample is None else "fail",
        counterexample=counterexample,
    )


def check_all(
    n_max: int = 12,
    k_range: tuple[int, int] = (-3, 3),
    jobs: int = 1,
) -> list[Report]:
    """Run every identity; reports come back in declaration order."""
    identities = list(IdentityId)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(
                pool.map(lambda ident: check(ident, n_max, k_range), identities)
            )
    return [check(ident, n_max, k_range) for ident in identities]


def reports_to_json(reports: list[Report]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)
