"""Linear-functional pairing and basis expansion.

A truncated series f(t) acts as a linear functional on polynomials in x
through <f | x^n> = EGF coefficient n of f.  The degree-graded family of
fully degenerate poly-Bernoulli polynomials is Sheffer for the pair

    g(t) = (1 - e^{-t}) / Li_k(1 - e^{-t}),    f(t) = (e^{Lt} - 1) / L,

so any polynomial expands uniquely in that basis; the expansion
coefficients come out of the pairing <g f^m | p> / m! and, independently,
out of a triangular back-substitution against the monic basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import fps
from .ring import LAM, ONE, X, ZERO, BiPoly, RatLike, canonical_string
from .families import RouteMismatch, classical_poly_bernoulli, fdpb_poly
from .sequences import polylog_series, stirling2


def pair(f: fps.Series, p: BiPoly) -> BiPoly:
    """The pairing <f | p>, linear in both arguments.

    Requires the truncation order of f to cover the x-degree of p.
    """
    deg = p.x_degree()
    if f.order < deg:
        raise fps.OrderExceeded(
            f"functional of order {f.order} paired with degree-{deg} polynomial"
        )
    out = ZERO
    for j in range(deg + 1):
        c = p.x_coeff(j)
        if not c.is_zero():
            out = out + c * fps.egf_coeff(f, j)
    return out


def shift_operator(p: BiPoly, y: BiPoly | RatLike) -> BiPoly:
    """The operator e^{yt}: p(x) -> p(x + y)."""
    return p.subst_x(X + (y if isinstance(y, BiPoly) else BiPoly.const(y)))


def lambda_difference(p: BiPoly) -> BiPoly:
    """The delta operator (e^{Lt} - 1)/L: p(x) -> (p(x + L) - p(x)) / L."""
    return (shift_operator(p, LAM) - p).div_exact_lambda()


@lru_cache(maxsize=None)
def sheffer_invertible(k: int, order: int) -> fps.Series:
    """g(t) = (1 - e^{-t}) / Li_k(1 - e^{-t}); order drops by one."""
    z = fps.Series.constant(ONE, order) - fps.exp_t(-1, order)
    return fps.series_div(z, polylog_series(k, z))


@lru_cache(maxsize=None)
def sheffer_delta(order: int) -> fps.Series:
    """f(t) = (e^{Lt} - 1) / L, built coefficient-wise in Q[L]."""
    coeffs: list[BiPoly] = [ZERO]
    for n in range(1, order + 1):
        coeffs.append(BiPoly({(n - 1, 0): Fraction(1, factorial(n))}))
    return fps.Series(coeffs)


def sheffer_functional(k: int, m: int, order: int) -> fps.Series:
    """The functional g(t) f(t)^m used for the m-th expansion coefficient."""
    out = sheffer_invertible(k, order + 1)
    f = sheffer_delta(order + 1)
    for _ in range(m):
        out = out * f
    return out.truncate(min(out.order, order))


@dataclass(frozen=True)
class BasisExpansion:
    degree: int
    k: int
    coefficients: tuple[BiPoly, ...]

    def reconstruct(self) -> BiPoly:
        out = ZERO
        for m, a in enumerate(self.coefficients):
            out = out + a * fdpb_poly(m, self.k)
        return out

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "k": self.k,
            "coefficients": [canonical_string(a) for a in self.coefficients],
        }


def sheffer_expand(p: BiPoly, k: int) -> BasisExpansion:
    """Expand p(x) in the degree-graded basis, by two independent routes.

    Route one applies the pairing formula a_m = <g f^m | p> / m!; route
    two peels coefficients off against the monic basis by back
    substitution.  A RouteMismatch is raised if they ever disagree.
    """
    n = p.x_degree()
    functional_route = []
    for m in range(n + 1):
        a = pair(sheffer_functional(k, m, n), p) / factorial(m)
        functional_route.append(a)
    triangular_route: list[BiPoly] = [ZERO] * (n + 1)
    residue = p
    for m in range(n, -1, -1):
        a = residue.x_coeff(m)
        triangular_route[m] = a
        residue = residue - a * fdpb_poly(m, k)
    if functional_route != triangular_route or not residue.is_zero():
        raise RouteMismatch(
            f"basis-expansion routes disagree for degree {n}, k={k}",
            functional_route,
            triangular_route,
        )
    return BasisExpansion(degree=n, k=k, coefficients=tuple(functional_route))


def eq60_connection(n: int, k: int) -> BiPoly:
    """Assemble sum_m L^{n-m} S2(n, m) beta_m(x); equals the classical
    poly-Bernoulli polynomial, with every L cancelling."""
    out = ZERO
    for m in range(n + 1):
        s2 = stirling2(n, m)
        if s2:
            out = out + BiPoly({(n - m, 0): s2}) * fdpb_poly(m, k)
    return out


def classical_target(n: int, k: int) -> BiPoly:
    """The L-free polynomial the connection formula must reproduce."""
    return classical_poly_bernoulli(n, k, X)
