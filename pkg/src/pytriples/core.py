"""Exact scalars, integer triples, conic points, and 3x3 rational matrix algebra.

Everything here is exact: scalars are Python ints or ``fractions.Fraction``
values, never floats. All objects are immutable after construction and all
operations are pure, so they are safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple


class DomainError(Exception):
    """Base class for values outside an operation's mathematical domain."""


class NonIntegralResult(DomainError):
    """A product that must be an integer vector had a fractional component."""


class InvalidFamilyParams(DomainError):
    """Family parameters violate the family's defining constraint."""


class NotOnUnitConic(DomainError):
    """The point (or triple) does not lie on the unit level of the conic."""


class NotPositiveNonSquare(DomainError):
    """The Pell coefficient must be an integer >= 2 and not a perfect square."""


class DegeneratePoint(DomainError):
    """The point is degenerate for the requested construction."""


def exact(value):
    """Coerce ``value`` to an exact scalar: an int, or a reduced Fraction.

    Fractions with denominator 1 collapse to int so that purely integral
    computations never pay Fraction overhead. Floats are refused outright;
    this library never rounds.
    """
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"expected an exact scalar (int or Fraction), got {type(value).__name__!s}")


class Triple(NamedTuple):
    """An integer 3-vector, Pythagorean when x^2 + y^2 = z^2."""

    x: int
    y: int
    z: int

    @property
    def is_pythagorean(self) -> bool:
        return self.x * self.x + self.y * self.y == self.z * self.z

    def __str__(self) -> str:
        return f"{self.x},{self.y},{self.z}"


class ConicPoint(NamedTuple):
    """An integer point of the plane; conic membership is a predicate, not a type."""

    u: int
    v: int

    def __str__(self) -> str:
        return f"{self.u},{self.v}"


class BetaGamma(NamedTuple):
    """The two parameters selecting a product, matrix family, and conic."""

    beta: int | Fraction
    gamma: int | Fraction


IDENTITY_TRIPLE = Triple(1, 0, 1)


def as_triple(value) -> Triple:
    if isinstance(value, Triple):
        return value
    x, y, z = value
    return Triple(x, y, z)


def triple_from_point(point) -> Triple:
    """Classical parametrization (u,v) -> (u^2 - v^2, 2uv, u^2 + v^2).

    The image is always Pythagorean, and every primitive triple is reached
    up to order and sign.
    """
    u, v = point
    return Triple(u * u - v * v, 2 * u * v, u * u + v * v)


class Mat3:
    """An immutable 3x3 matrix with exact rational entries.

    Integrality is a checked property rather than a type: several matrix
    families produce genuinely fractional entries for some parameters, and
    only matrix-vector products that feed back into triples must be integral.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(exact(e) for e in row) for row in rows)
        if len(rows) != 3 or any(len(row) != 3 for row in rows):
            raise ValueError("Mat3 requires 3 rows of 3 entries")
        self.rows = rows

    @classmethod
    def identity(cls) -> "Mat3":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @property
    def is_integral(self) -> bool:
        return all(isinstance(e, int) for row in self.rows for e in row)

    def __eq__(self, other):
        if not isinstance(other, Mat3):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __matmul__(self, other: "Mat3") -> "Mat3":
        a, b = self.rows, other.rows
        return Mat3(
            tuple(
                tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
                for i in range(3)
            )
        )

    def __pow__(self, n: int) -> "Mat3":
        if n < 0:
            raise ValueError("negative matrix powers are not supported")
        result = Mat3.identity()
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def apply(self, vec):
        """Matrix times column vector, exact, with no integrality demand."""
        x, y, z = vec
        r = self.rows
        return (
            exact(r[0][0] * x + r[0][1] * y + r[0][2] * z),
            exact(r[1][0] * x + r[1][1] * y + r[1][2] * z),
            exact(r[2][0] * x + r[2][1] * y + r[2][2] * z),
        )

    def det(self):
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return exact(a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g))

    def __repr__(self):
        return f"Mat3({list(list(row) for row in self.rows)!r})"

    def __str__(self):
        return ";".join(",".join(str(e) for e in row) for row in self.rows)


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    """Exact matrix product."""
    return a @ b


def mat_vec(a: Mat3, t) -> Triple:
    """Matrix times column triple; raises NonIntegralResult on fractions."""
    image = a.apply(as_triple(t))
    if not all(isinstance(c, int) for c in image):
        raise NonIntegralResult(f"matrix-vector product {image} is not an integer triple")
    return Triple(*image)


def vec_mat(t, a: Mat3) -> Triple:
    """Row triple times matrix. Used only by the row-action closure identity."""
    x, y, z = as_triple(t)
    r = a.rows
    image = tuple(exact(x * r[0][j] + y * r[1][j] + z * r[2][j]) for j in range(3))
    if not all(isinstance(c, int) for c in image):
        raise NonIntegralResult(f"vector-matrix product {image} is not an integer triple")
    return Triple(*image)


def det(a: Mat3):
    """Exact determinant of a 3x3 matrix."""
    return a.det()
