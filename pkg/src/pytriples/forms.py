"""Linear matrix forms attached to integer triples, and exact naturality checks.

A form maps a triple (x,y,z) to a 3x3 matrix whose entries are linear in
x, y, z. Because everything in sight is linear, each of the three axioms
that make the induced product a commutative monoid is a bi- or trilinear
polynomial identity, so it is decided exactly on basis vectors. No sampling
is involved and there are no false positives.

Two representations are provided. ``LinearForm`` is fully general (three
coefficients per entry). ``StandardForm`` is the identity-normalized shape
that the commutativity and identity axioms force: entry k equals
a[k]*(x-z) + b[k]*y, plus z on the main diagonal, so evaluating at (1,0,1)
is structurally the identity matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import InvalidFamilyParams, Mat3, exact

_BASIS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
_DIAGONAL = (0, 4, 8)


class LinearForm:
    """A matrix-valued linear function of (x, y, z).

    ``coeffs`` holds nine (cx, cy, cz) triples in row-major entry order;
    entry k of the matrix at (x,y,z) is cx*x + cy*y + cz*z.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(tuple(exact(c) for c in entry) for entry in coeffs)
        if len(coeffs) != 9 or any(len(entry) != 3 for entry in coeffs):
            raise ValueError("LinearForm requires 9 entries of 3 coefficients")
        self.coeffs = coeffs

    def at(self, vec) -> Mat3:
        x, y, z = vec
        entries = [cx * x + cy * y + cz * z for cx, cy, cz in self.coeffs]
        return Mat3((entries[0:3], entries[3:6], entries[6:9]))

    def __eq__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"LinearForm({self.coeffs!r})"


class StandardForm:
    """The identity-normalized linear form.

    Entry k of the matrix at (x,y,z) is a[k]*(x-z) + b[k]*y, with z added on
    the diagonal entries. Any such form evaluates to the identity matrix at
    (1,0,1), whatever the coefficients.
    """

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        a = tuple(exact(c) for c in a)
        b = tuple(exact(c) for c in b)
        if len(a) != 9 or len(b) != 9:
            raise ValueError("StandardForm requires 9 a-coefficients and 9 b-coefficients")
        self.a = a
        self.b = b

    def at(self, vec) -> Mat3:
        x, y, z = vec
        w = x - z
        entries = [ak * w + bk * y for ak, bk in zip(self.a, self.b)]
        for k in _DIAGONAL:
            entries[k] = entries[k] + z
        return Mat3((entries[0:3], entries[3:6], entries[6:9]))

    def linear(self) -> LinearForm:
        """The same form with the (x-z, y) structure expanded."""
        return LinearForm(
            tuple(
                (ak, bk, -ak + (1 if k in _DIAGONAL else 0))
                for k, (ak, bk) in enumerate(zip(self.a, self.b))
            )
        )

    def __eq__(self, other):
        if not isinstance(other, StandardForm):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"StandardForm(a={self.a!r}, b={self.b!r})"


def as_linear(form) -> LinearForm:
    if isinstance(form, LinearForm):
        return form
    if isinstance(form, StandardForm):
        return form.linear()
    raise TypeError(f"expected LinearForm or StandardForm, got {type(form).__name__!s}")


@dataclass(frozen=True)
class FormParams:
    """The nine parameters of the general commutative identity-normalized form.

    Substituting them into ``commutative_form`` yields every linear form whose
    induced product is commutative with identity (1,0,1); the remaining
    composition axiom is equivalent to ``satisfies_system``.
    """

    alpha: int | Fraction
    beta: int | Fraction
    gamma: int | Fraction
    delta: int | Fraction
    rho: int | Fraction
    sigma: int | Fraction
    theta: int | Fraction
    phi: int | Fraction
    lam: int | Fraction


def commutative_form(p: FormParams) -> StandardForm:
    """Build the standard form determined by the nine commutativity parameters."""
    return StandardForm(
        a=(p.alpha, p.beta, 1 - p.alpha, p.delta, p.gamma, -p.delta, p.sigma, p.theta, -p.sigma),
        b=(p.beta, p.phi, -p.beta, p.gamma, p.rho, 1 - p.gamma, p.theta, p.lam, -p.theta),
    )


def satisfies_system(p: FormParams) -> bool:
    """Check the five polynomial constraints for the form to compose.

    The constraints are exactly the condition that the commutative form also
    satisfies the composition axiom, making it fully natural.
    """
    al, be, ga = p.alpha, p.beta, p.gamma
    de, rho, si = p.delta, p.rho, p.sigma
    th, ph, la = p.theta, p.phi, p.lam
    return (
        al * ga + (rho + th - be) * de + (1 - ga) * si == ga * ga
        and -(ph - la) * al + ph * ga - la == be * (rho + th - be)
        and -si * (ph - la) + la * ga == th * (rho + th - be)
        and al * th + de * la - be * si == th * ga
        and de * (ph - la) == be * ga - th * ga + th
    )


@dataclass(frozen=True)
class NaturalReport:
    """Outcome of the three naturality axioms, with basis witnesses on failure."""

    composes: bool
    commutes: bool
    fixes_identity: bool
    compose_witness: tuple | None = None
    commute_witness: tuple | None = None

    @property
    def is_natural(self) -> bool:
        return self.composes and self.commutes and self.fixes_identity


def is_commutative(form) -> bool:
    """Decide nu(a).b == nu(b).a for all integer triples a, b.

    Both sides are bilinear in (a, b), so equality on the basis pairs is
    equivalent to equality everywhere.
    """
    return _commute_witness(as_linear(form)) is None


def _commute_witness(form: LinearForm):
    mats = [form.at(e) for e in _BASIS]
    for i in range(3):
        for j in range(i + 1, 3):
            if mats[i].apply(_BASIS[j]) != mats[j].apply(_BASIS[i]):
                return (_BASIS[i], _BASIS[j])
    return None


def _compose_witness(form: LinearForm):
    mats = [form.at(e) for e in _BASIS]
    for i in range(3):
        for j in range(3):
            if form.at(mats[i].apply(_BASIS[j])) != mats[i] @ mats[j]:
                return (_BASIS[i], _BASIS[j])
    return None


def is_natural(form) -> NaturalReport:
    """Run all three naturality axioms exactly on basis vectors.

    Axiom order: composition nu(nu(a).b) == nu(a).nu(b), commutativity
    nu(a).b == nu(b).a, and identity nu(1,0,1) == I. For a StandardForm the
    identity axiom holds by construction; for a raw LinearForm it is a real
    check.
    """
    lin = as_linear(form)
    compose_w = _compose_witness(lin)
    commute_w = _commute_witness(lin)
    return NaturalReport(
        composes=compose_w is None,
        commutes=commute_w is None,
        fixes_identity=lin.at((1, 0, 1)) == Mat3.identity(),
        compose_witness=compose_w,
        commute_witness=commute_w,
    )


def _div(num, den):
    return exact(Fraction(num) / Fraction(den))


def family_a(gamma, delta, rho, sigma, theta) -> FormParams:
    """First classified family: the equal-corner-parameter branch with gamma != 0.

    alpha, beta, phi (= lam) are forced by the free parameters.
    """
    gamma, delta, rho, sigma, theta = (exact(Fraction(v)) for v in (gamma, delta, rho, sigma, theta))
    if gamma == 0:
        raise InvalidFamilyParams("family A requires gamma != 0")
    alpha = _div(gamma**3 + gamma**2 * sigma - gamma * sigma - delta * (rho * gamma + theta), gamma**2)
    beta = _div(theta * (gamma - 1), gamma)
    phi = _div(theta * (rho * gamma + theta), gamma**2)
    return FormParams(alpha, beta, gamma, delta, rho, sigma, theta, phi, phi)


def family_b(alpha, beta, delta, rho) -> FormParams:
    """Second classified family: the branch with gamma = theta = 0."""
    alpha, beta, delta, rho = (exact(Fraction(v)) for v in (alpha, beta, delta, rho))
    corner = exact(-beta * (rho - beta))
    return FormParams(alpha, beta, 0, delta, rho, exact(-delta * (rho - beta)), 0, corner, corner)


def family_c(beta, gamma, rho, theta, phi, lam) -> FormParams:
    """Third classified family: the branch with distinct corner parameters.

    alpha, delta, sigma are forced by the free parameters; requires phi != lam.
    """
    beta, gamma, rho, theta, phi, lam = (exact(Fraction(v)) for v in (beta, gamma, rho, theta, phi, lam))
    if phi == lam:
        raise InvalidFamilyParams("family C requires phi != lam")
    alpha = _div(phi * gamma - lam - beta * (rho + theta - beta), phi - lam)
    delta = _div(beta * gamma - theta * gamma + theta, phi - lam)
    sigma = _div(lam * gamma - theta * (rho + theta - beta), phi - lam)
    return FormParams(alpha, beta, gamma, delta, rho, sigma, theta, phi, lam)


def family_matrix(params: FormParams, triple) -> Mat3:
    """Evaluate the family member described by ``params`` at a triple."""
    return commutative_form(params).at(triple)
