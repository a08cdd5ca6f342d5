"""Group law on conics, Pell fundamental solutions, and the triple morphism.

For integer parameters (beta, gamma) the quadratic form
u^2 + 2*beta*u*v - (1 - 2*gamma)*v^2 is multiplicative under the conic
product, its level-1 set is an abelian group, and the classical
parametrization restricted to that set is a group morphism onto a group of
Pythagorean triples whose kernel is the two sign points (1,0) and (-1,0).
The infinite part of the group is generated by a point read off the
fundamental solution of a Pell equation.
"""

from __future__ import annotations

from math import isqrt
from typing import NamedTuple

from .core import (
    ConicPoint,
    DegeneratePoint,
    Mat3,
    NotOnUnitConic,
    NotPositiveNonSquare,
    Triple,
    exact,
    triple_from_point,
)
from fractions import Fraction

from .ptpm import ptpm_matrix


def _int_bg(bg):
    beta, gamma = bg
    if not isinstance(beta, int) or not isinstance(gamma, int):
        raise ValueError("conic operations require integer beta and gamma")
    return beta, gamma


def conic_level(bg, p) -> int:
    """The level of the conic through p: u^2 + 2*beta*u*v - (1-2*gamma)*v^2."""
    beta, gamma = _int_bg(bg)
    u, v = p
    return u * u + 2 * beta * u * v - (1 - 2 * gamma) * v * v


def conic_mul(bg, p, q) -> ConicPoint:
    """The conic product; levels multiply, so level-1 points are closed."""
    beta, gamma = _int_bg(bg)
    u, v = p
    s, t = q
    return ConicPoint(s * u + t * v * (1 - 2 * gamma), t * u + s * v + 2 * beta * t * v)


def conic_inverse(bg, p) -> ConicPoint:
    """Inverse on the level-1 group: (u,v) -> (u + 2*beta*v, -v)."""
    beta, _ = _int_bg(bg)
    if conic_level(bg, p) != 1:
        raise NotOnUnitConic(f"point {tuple(p)} has level {conic_level(bg, p)}, not 1")
    u, v = p
    return ConicPoint(u + 2 * beta * v, -v)


class PellSolution(NamedTuple):
    """Fundamental solution of x^2 - d*y^2 = 1 with x, y > 0 and x minimal."""

    x: int
    y: int
    d: int


def pell_minimal(d: int) -> PellSolution:
    """Fundamental Pell solution via the continued fraction of sqrt(d).

    Convergents of the expansion are generated until one satisfies the
    equation; the first hit is the minimal positive solution.
    """
    if not isinstance(d, int) or d < 2 or isqrt(d) ** 2 == d:
        raise NotPositiveNonSquare(f"Pell coefficient must be a non-square integer >= 2, got {d}")
    a0 = isqrt(d)
    m, den, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while h * h - d * k * k != 1:
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return PellSolution(h, k, d)


def pell_d(bg) -> int:
    """The Pell coefficient attached to (beta, gamma): beta^2 - 2*gamma + 1."""
    beta, gamma = _int_bg(bg)
    return beta * beta - 2 * gamma + 1


def fundamental_unit_point(bg) -> ConicPoint:
    """An infinite-order level-1 point, from the minimal Pell solution.

    Completing the square turns the conic form into x'^2 - d*y'^2 with
    x' = u + beta*v, so (x1 - beta*y1, y1) lands on level 1. Requires the
    Pell coefficient to be a non-square >= 2.
    """
    beta, _ = _int_bg(bg)
    sol = pell_minimal(pell_d(bg))
    return ConicPoint(sol.x - beta * sol.y, sol.y)


def enumerate_unit_points(bg, count: int) -> list[ConicPoint]:
    """The identity point followed by forward powers of the fundamental point."""
    if count < 0:
        raise ValueError("count must be >= 0")
    if count == 0:
        return []
    points = [ConicPoint(1, 0)]
    generator = fundamental_unit_point(bg)
    current = points[0]
    for _ in range(count - 1):
        current = conic_mul(bg, current, generator)
        points.append(current)
    return points


def unit_points_in_box(bg, bound: int) -> list[ConicPoint]:
    """Exhaustive scan of integer level-1 points with |u|, |v| <= bound."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    span = range(-bound, bound + 1)
    return sorted(ConicPoint(u, v) for u in span for v in span if conic_level(bg, (u, v)) == 1)


def conic_through(point, beta):
    """The unique gamma putting the point on level 1 for the given beta.

    Solving the level equation for gamma gives
    (1 - u^2 - 2*beta*u*v + v^2) / (2*v^2), which needs v != 0.
    """
    u, v = point
    if v == 0:
        raise DegeneratePoint("points with v = 0 lie on level u^2 for every gamma")
    beta = exact(Fraction(beta))
    return exact(Fraction(1 - u * u - 2 * beta * u * v + v * v, 2 * v * v))


def points_for_triple(t) -> list[ConicPoint]:
    """All integer preimages of a triple under the classical parametrization."""
    x, y, z = t
    if (x + z) % 2 or (z - x) % 2 or z < 0 or x + z < 0 or z - x < 0:
        return []
    u2, v2 = (x + z) // 2, (z - x) // 2
    u, v = isqrt(u2), isqrt(v2)
    if u * u != u2 or v * v != v2:
        return []
    candidates = {
        ConicPoint(su, sv)
        for su in (u, -u)
        for sv in (v, -v)
        if su * su - sv * sv == x and 2 * su * sv == y
    }
    return sorted(candidates)


def triple_inverse(bg, p) -> Triple:
    """Inverse of the triple attached to a level-1 point, under the induced product.

    Equals the parametrization at the conic inverse; the third component is
    the sum of squares v^2 + (u + 2*beta*v)^2, as the worked values demand.
    """
    return triple_from_point(conic_inverse(bg, p))


def triple_inverse_of_triple(bg, t) -> Triple:
    """Inverse of a Pythagorean triple that lies in the morphism image."""
    for p in points_for_triple(t):
        if conic_level(bg, p) == 1:
            return triple_inverse(bg, p)
    raise NotOnUnitConic(f"triple {tuple(t)} has no level-1 preimage for parameters {tuple(bg)}")


def matrix_power_via_conic(bg, p, n: int) -> Mat3:
    """n-th matrix power computed on the conic side.

    Taking the n-th conic power of the point and evaluating the family matrix
    there equals multiplying the matrix by itself n times; n = 0 gives the
    identity matrix.
    """
    if n < 0:
        raise ValueError("power requires n >= 0")
    current = ConicPoint(1, 0)
    for _ in range(n):
        current = conic_mul(bg, current, p)
    return ptpm_matrix(bg, triple_from_point(current))
