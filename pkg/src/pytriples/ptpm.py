"""Pythagorean-triple-preserving matrices.

The star of the module is the two-parameter family of standard forms whose
induced products both commute and preserve the Pythagorean set. Alongside it
live the five classical special-case matrices, the general four-parameter
characterization of all triple-preserving matrices, the coefficient
conditions necessary for a standard form to preserve, and a brute-force
preservation scan over parametrized triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import NonIntegralResult, Mat3, Triple, exact, triple_from_point
from .forms import LinearForm, StandardForm, as_linear

TIKOO_KINDS = ("B1", "B2", "B3", "B4", "B5")

# Entry tables for the five classical matrices, as (cx, cy, cz) per entry.
_TIKOO_COEFFS = {
    "B1": ((1, 0, 0), (0, 0, 0), (0, 0, 0),
           (0, 0, 0), (0, 0, 1), (0, 1, 0),
           (0, 0, 0), (0, 1, 0), (0, 0, 1)),
    "B2": ((0, 1, 0), (0, 0, 0), (0, 0, 0),
           (0, 0, 0), (0, 0, 1), (1, 0, 0),
           (0, 0, 0), (1, 0, 0), (0, 0, 1)),
    "B3": ((0, 0, 1), (0, 0, 0), (1, 0, 0),
           (0, 0, 0), (0, 1, 0), (0, 0, 0),
           (1, 0, 0), (0, 0, 0), (0, 0, 1)),
    "B4": ((0, 0, 1), (0, 0, 0), (0, 1, 0),
           (0, 0, 0), (1, 0, 0), (0, 0, 0),
           (0, 1, 0), (0, 0, 0), (0, 0, 1)),
    "B5": ((-1, 0, 0), (0, 1, 0), (0, 0, 0),
           (0, 1, 0), (1, 0, 0), (0, 0, 0),
           (0, 0, 0), (0, 0, 0), (0, 0, 1)),
}


def ptpm_form(bg) -> StandardForm:
    """Standard-form coefficients of the two-parameter preserving family."""
    b, g = (exact(Fraction(v)) for v in bg)
    head = g * g - g + 1 - b * b
    mid = b * (2 * g - 1)
    tail = b * b + g * g - g
    return StandardForm(
        a=(head, b, b * b - g * g + g, -mid, g, mid, tail, -b, -tail),
        b=(b, -g, -b, g, b, 1 - g, -b, 1 - g, b),
    )


def ptpm_matrix(bg, triple) -> Mat3:
    """The preserving-family matrix at a triple; exact rational entries."""
    return ptpm_form(bg).at(triple)


def tikoo_form(kind: str) -> LinearForm:
    """One of the five classical special-case matrices, as a linear form."""
    try:
        return LinearForm(_TIKOO_COEFFS[kind])
    except KeyError:
        raise ValueError(f"unknown Tikoo matrix {kind!r}; expected one of {TIKOO_KINDS}") from None


def tikoo_matrix(kind: str, triple) -> Mat3:
    return tikoo_form(kind).at(triple)


def pal_matrix(r, s, t, u) -> Mat3:
    """The general four-parameter triple-preserving matrix.

    Entries are integral exactly when r+u and s+t share parity; otherwise the
    four corner-ish entries are odd halves and ``is_integral`` is False.
    """
    half = Fraction(1, 2)
    return Mat3((
        (half * (r * r - t * t - s * s + u * u), r * s - t * u, half * (r * r - t * t + s * s - u * u)),
        (r * t - s * u, r * u + s * t, r * t + s * u),
        (half * (r * r + t * t - s * s - u * u), r * s + t * u, half * (r * r + t * t + s * s + u * u)),
    ))


def necessary_conditions(form: StandardForm) -> bool:
    """Coefficient identities a standard form must satisfy to preserve triples.

    These four equalities on the y-coefficients are necessary, not known to be
    sufficient; the two-parameter family satisfies them, and the other two
    classified families never do (except degenerately).
    """
    b = form.b
    return (
        b[0] == b[4] == b[8]
        and b[6] == b[2]
        and b[7] == b[5]
        and b[3] == -b[1]
    )


@dataclass(frozen=True)
class PreservationReport:
    """Result of a brute-force preservation scan over parametrized triples."""

    preserved: bool
    pairs_checked: int
    witness: tuple | None = None  # (m, n, u, v) of the first failing pair
    image: tuple | None = None    # the offending output vector

    def __bool__(self) -> bool:
        return self.preserved


def preserves_pythagorean(form, bound: int) -> PreservationReport:
    """Scan nu(phi(m,n)).phi(u,v) for membership in the Pythagorean set.

    All four parameters range over [-bound, bound]. A fractional output
    counts as a failure, since the Pythagorean set is integral. Returns on
    the first counterexample.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    lin = as_linear(form)
    span = range(-bound, bound + 1)
    points = [(m, n) for m in span for n in span]
    checked = 0
    for m, n in points:
        matrix = lin.at(triple_from_point((m, n)))
        for u, v in points:
            image = matrix.apply(triple_from_point((u, v)))
            checked += 1
            ix, iy, iz = image
            if not (isinstance(ix, int) and isinstance(iy, int) and isinstance(iz, int)) or (
                ix * ix + iy * iy != iz * iz
            ):
                return PreservationReport(False, checked, witness=(m, n, u, v), image=image)
    return PreservationReport(True, checked)


def closure_witness(bg, mn, uv) -> tuple[Triple, Triple]:
    """Closed-form product pair for the two-parameter family.

    The first triple is the column action of the matrix at phi(m,n) on
    phi(u,v); the second is the row action of phi(u,v) on the same matrix.
    Both are Pythagorean by construction, which is exactly why the family
    preserves triples.
    """
    b, g = (exact(Fraction(v)) for v in bg)
    m, n = mn
    u, v = uv
    col_x = m * u + (1 - 2 * g) * n * v
    col_y = m * v + n * (u + 2 * b * v)
    row_x = m * u + n * v
    row_y = m * v + n * (u - 2 * g * u + 2 * b * v)
    column = (col_x * col_x - col_y * col_y, 2 * col_x * col_y, col_x * col_x + col_y * col_y)
    row = (row_x * row_x - row_y * row_y, 2 * row_x * row_y, row_x * row_x + row_y * row_y)
    for vec in (column, row):
        if not all(isinstance(exact(c), int) for c in vec):
            raise NonIntegralResult(f"closure identity produced a fractional triple {vec}")
    return Triple(*(exact(c) for c in column)), Triple(*(exact(c) for c in row))
