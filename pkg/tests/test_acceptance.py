"""End-to-end acceptance suite.

Each test implements one gate criterion at zero tolerance (every identity in
the library is exact) and prints a single pass line on success. Run with
``pytest tests/test_acceptance.py -v -s`` to see the lines as they pass.
"""

import itertools
from fractions import Fraction
from math import isqrt

from pytriples.core import Mat3, Triple, det, mat_mul, triple_from_point
from pytriples.forms import (
    StandardForm,
    commutative_form,
    family_a,
    family_b,
    family_c,
    is_natural,
    satisfies_system,
)
from pytriples.ptpm import (
    necessary_conditions,
    preserves_pythagorean,
    ptpm_form,
    ptpm_matrix,
)
from pytriples.products import (
    BS_PRODUCT,
    TE_PRODUCT,
    bullet,
    bullet_bg,
    power,
    product,
    sample_triples,
    verify_axioms,
)
from pytriples.ptpm import tikoo_form
from pytriples.conic import (
    conic_inverse,
    conic_level,
    conic_mul,
    conic_through,
    enumerate_unit_points,
    fundamental_unit_point,
    matrix_power_via_conic,
    pell_minimal,
    triple_inverse,
    unit_points_in_box,
)

PARAM_GRID = [(b, g) for b in range(-3, 4) for g in range(-3, 4)]


def test_criterion_1_worked_example_reproduction():
    bg = (1, -3)
    assert ptpm_matrix(bg, (3, 4, 5)) == Mat3(
        [[-15, 10, 18], [-26, 15, 30], [-30, 18, 35]]
    )
    kind = bullet_bg(bg)
    assert product(kind, (3, 4, 5), (15, -8, 17)) == (1, 0, 1)
    assert power(kind, (3, 4, 5), 2) == (85, 132, 157)
    assert conic_mul(bg, (2, 1), (2, 1)) == (11, 6)
    assert conic_inverse(bg, (11, 6)) == (23, -6)
    assert triple_from_point((23, -6)) == (493, -276, 565)
    for beta in range(-2, 4):
        gamma = conic_through((2, 1), beta)
        inverse = triple_inverse((beta, gamma), (2, 1))
        assert inverse == (
            4 * beta * beta + 8 * beta + 3,
            -4 * (beta + 1),
            4 * (beta + 1) ** 2 + 1,
        )
        assert product(bullet_bg((beta, gamma)), (3, 4, 5), inverse) == (1, 0, 1)
    print("criterion 1: PASS  worked example reproduced exactly")


def test_criterion_2_natural_injection_gate():
    first = is_natural(tikoo_form("B1"))
    assert first.composes and first.commutes and first.fixes_identity
    second = is_natural(tikoo_form("B2"))
    assert not second.commutes
    a, b = second.commute_witness
    lin = tikoo_form("B2")
    assert lin.at(a).apply(b) != lin.at(b).apply(a)
    print("criterion 2: PASS  first special case natural, second fails with witness")


def test_criterion_3_monoid_axiom_suite():
    failures = 0
    for bg in PARAM_GRID:
        report = verify_axioms(bullet_bg(bg), samples=sample_triples(4))
        if not (report.commutative and report.associative and report.identity
                and report.pythagorean_closure):
            failures += 1
    assert failures == 0
    print(f"criterion 3: PASS  monoid axioms and closure, {len(PARAM_GRID)} parameter pairs, 0 failures")


def _family_grids():
    halves = [Fraction(-1), Fraction(0), Fraction(1), Fraction(1, 2)]
    gammas = [Fraction(-2), Fraction(-1, 2), Fraction(1), Fraction(3, 2), Fraction(2)]
    grid_a = [
        family_a(g, d, r, Fraction(1), t)
        for g in gammas
        for d, r, t in itertools.product(halves, repeat=3)
    ]
    grid_b = [family_b(*vec) for vec in itertools.product(halves, repeat=4)]
    corners = [(Fraction(1, 2), Fraction(-1, 2)), (Fraction(2), Fraction(0)), (Fraction(-1), Fraction(3))]
    grid_c = [
        family_c(b, g, r, t, phi, lam)
        for b, g, r, t in itertools.product([Fraction(-1), Fraction(0), Fraction(1)], repeat=4)
        for phi, lam in corners
    ]
    return grid_a, grid_b, grid_c


def test_criterion_4_classification_cross_check():
    for grid in _family_grids():
        assert len(grid) >= 200
        for params in grid:
            assert satisfies_system(params), params
            assert is_natural(commutative_form(params)).is_natural, params
    base = ptpm_form((1, -3))
    for i in range(9):
        perturbed_b = tuple(v + (1 if k == i else 0) for k, v in enumerate(base.b))
        perturbed = StandardForm(base.a, perturbed_b)
        assert not necessary_conditions(perturbed), i
        report = preserves_pythagorean(perturbed, 4)
        assert not report.preserved and report.witness is not None, i
    print("criterion 4: PASS  3 x 200+ family vectors natural; all 9 perturbations detected twice over")


def test_criterion_5_determinant_identity():
    checked = 0
    for beta, gamma in PARAM_GRID:
        for u in range(-3, 4):
            for v in range(-3, 4):
                level = u * u + 2 * beta * u * v - (1 - 2 * gamma) * v * v
                matrix = ptpm_matrix((beta, gamma), triple_from_point((u, v)))
                assert det(matrix) == level ** 3
                checked += 1
    assert checked == 7 ** 4
    print(f"criterion 5: PASS  determinant identity on {checked} parameter points")


def test_criterion_6_conic_group_and_morphism():
    for bg in PARAM_GRID:
        for u, v, s, t in itertools.product(range(-2, 3), repeat=4):
            assert conic_level(bg, conic_mul(bg, (u, v), (s, t))) == (
                conic_level(bg, (u, v)) * conic_level(bg, (s, t))
            )
        points = unit_points_in_box(bg, 50)
        assert Triple(1, 0, 1) == triple_from_point((1, 0))
        kind = bullet_bg(bg)
        kernel = set()
        for p in points:
            assert conic_mul(bg, p, (1, 0)) == p
            inverse = conic_inverse(bg, p)
            assert conic_level(bg, inverse) == 1
            assert conic_mul(bg, p, inverse) == (1, 0)
            if triple_from_point(p) == (1, 0, 1):
                kernel.add(tuple(p))
            for q in points:
                prod = conic_mul(bg, p, q)
                assert conic_level(bg, prod) == 1
                assert triple_from_point(prod) == product(
                    kind, triple_from_point(p), triple_from_point(q)
                )
        assert kernel == {(1, 0), (-1, 0)}
        sampled = points[: min(len(points), 8)]
        for a, b, c in itertools.product(sampled, repeat=3):
            assert conic_mul(bg, conic_mul(bg, a, b), c) == conic_mul(bg, a, conic_mul(bg, b, c))
    print(f"criterion 6: PASS  conic group law, morphism, and kernel on {len(PARAM_GRID)} parameter pairs")


def test_criterion_7_pell_oracle_agreement():
    solved = 0
    for d in range(2, 51):
        if isqrt(d) ** 2 == d:
            continue
        y = 1
        while True:
            x2 = 1 + d * y * y
            x = isqrt(x2)
            if x * x == x2:
                break
            y += 1
        assert pell_minimal(d) == (x, y, d)
        solved += 1
    landed = 0
    for beta in range(-7, 8):
        for gamma in range(-25, 26):
            d = beta * beta - 2 * gamma + 1
            if d < 2 or d > 50 or isqrt(d) ** 2 == d:
                continue
            point = fundamental_unit_point((beta, gamma))
            assert conic_level((beta, gamma), point) == 1
            landed += 1
    assert solved == 42 and landed > 0
    print(f"criterion 7: PASS  {solved} Pell coefficients match the oracle; {landed} fundamental points on level 1")


def test_criterion_8_power_proposition():
    checked = 0
    for beta, gamma in itertools.product(range(-2, 3), repeat=2):
        bg = (beta, gamma)
        for u, v in itertools.product(range(-2, 3), repeat=2):
            matrix = ptpm_matrix(bg, triple_from_point((u, v)))
            accumulated = Mat3.identity()
            for n in range(7):
                assert matrix_power_via_conic(bg, (u, v), n) == accumulated
                accumulated = mat_mul(accumulated, matrix)
                checked += 1
    print(f"criterion 8: PASS  matrix powers agree with conic powers in {checked} cases")


def test_criterion_9_baseline_products():
    samples = sample_triples(4)
    members = [t for t in samples if t.is_pythagorean]
    for kind in (TE_PRODUCT, BS_PRODUCT):
        for a in members:
            for b in members:
                assert product(kind, a, b).is_pythagorean
    zero_kind = bullet_bg((0, 0))
    for a in samples:
        for b in samples:
            assert product(BS_PRODUCT, a, b) == product(zero_kind, a, b)
    print("criterion 9: PASS  baseline products preserve; split-style product matches the zero-parameter family")
