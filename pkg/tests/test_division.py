"""Change of variables to ratio/cut monomials and the division kernels."""

import cmath
import math
import random

import pytest

from gleason import (
    CuspDomain,
    LaurentPolynomial,
    QComplex,
    poly_bounded,
)
from gleason.division import (
    FiberData,
    MonomialPair,
    RatioCutForm,
    from_ratio_cut,
    project_to_fiber,
    split_component,
    split_polynomial,
    split_ratio,
    to_ratio_cut,
)
from gleason.errors import ConeError, InternalContractError, NonvanishingError
from gleason.laurent import max_coeff_distance
from gleason.scalars import powi

from conftest import (
    rand_laurent,
    rand_qcomplex,
    rand_symmetric_component,
)

PARAM_TUPLES = [(1, 1, 0, 1), (2, 1, 0, 1), (1, 2, 0, 1), (3, 2, 0, 1), (2, 3, 0, 1), (1, 1, 1, 1)]


def _exact_point(rng):
    return (rand_qcomplex(rng, nonzero=True), rand_qcomplex(rng, nonzero=True))


def test_monomial_pair_validation_and_order():
    assert MonomialPair(2, 1).order == 2
    assert MonomialPair(2, 3, 1, 1).order == 5
    assert MonomialPair(1, 1, 0, 1).order == 1
    for bad in [(0, 1, 0, 1), (1, 0, 0, 1), (1, 1, -1, 1), (1, 1, 0, 0)]:
        with pytest.raises(ValueError):
            MonomialPair(*bad)


def test_fiber_data_values():
    pair = MonomialPair(2, 1, 1, 1)
    p = (QComplex(2), QComplex(3))
    fd = FiberData.from_point(pair, p)
    assert fd.ratio_value == powi(QComplex(2), 2) / QComplex(3)
    assert fd.cut_value == QComplex(6)
    with pytest.raises(NonvanishingError):
        FiberData.from_point(pair, (0, 0.5))
    with pytest.raises(NonvanishingError):
        FiberData.from_point(pair, (0.5, 0))


def test_to_ratio_cut_examples():
    pair = MonomialPair(1, 1, 0, 1)  # order 1
    form = to_ratio_cut(LaurentPolynomial.monomial(1, -1), pair)
    assert dict(form.terms) == {(1, 0): 1}
    form = to_ratio_cut(LaurentPolynomial.monomial(1, 1), pair)
    assert dict(form.terms) == {(1, 2): 1}
    form = to_ratio_cut(LaurentPolynomial.constant(5), pair)
    assert dict(form.terms) == {(0, 0): 5}


def test_to_ratio_cut_rejects_bad_exponents():
    with pytest.raises(InternalContractError):
        to_ratio_cut(LaurentPolynomial.monomial(1, 0), MonomialPair(2, 1, 0, 1))
    with pytest.raises(ConeError):
        to_ratio_cut(LaurentPolynomial.monomial(-1, 0), MonomialPair(1, 1, 0, 1))
    with pytest.raises(ConeError):
        to_ratio_cut(LaurentPolynomial.monomial(0, 2), MonomialPair(1, 1, 1, 1))


@pytest.mark.parametrize("k,l,m,n", PARAM_TUPLES)
def test_round_trip_through_ratio_cut(k, l, m, n):
    rng = random.Random(k * 100 + l * 10 + m + n)
    pair = MonomialPair(k, l, m, n)
    for _ in range(20):
        f = rand_symmetric_component(rng, k, l, m, n, terms=6, exact=True)
        form = to_ratio_cut(f, pair)
        assert all(alpha >= 0 for alpha, _ in form.terms)
        assert from_ratio_cut(form) == f
    # note: arbitrary (alpha, beta) maps land in a lattice of index order,
    # not order^2, so the reverse round trip only holds for images like the
    # ones above; starting from random forms would hit the divisibility check


def test_project_to_fiber_examples():
    pair = MonomialPair(1, 1, 0, 1)
    p = (QComplex(1, 1), QComplex(2))
    fiber = FiberData.from_point(pair, p)
    g = RatioCutForm(pair, {(1, 0): QComplex(1)})
    assert dict(project_to_fiber(g, fiber).terms) == {(0, 0): fiber.ratio_value}
    g = RatioCutForm(pair, {(1, 1): QComplex(1)})
    assert dict(project_to_fiber(g, fiber).terms) == {(0, 1): fiber.ratio_value}


def test_project_to_fiber_collapses_ratio_direction():
    rng = random.Random(8)
    pair = MonomialPair(2, 1, 0, 1)
    p = _exact_point(rng)
    fiber = FiberData.from_point(pair, p)
    g = to_ratio_cut(rand_symmetric_component(rng, 2, 1, 0, 1, terms=8, exact=True), pair)
    proj = project_to_fiber(g, fiber)
    assert all(alpha == 0 for alpha, _ in proj.terms)
    # substituting the ratio value is evaluation along the fiber
    value = sum(c * powi(fiber.cut_value, beta) for (_, beta), c in proj.terms.items())
    f = from_ratio_cut(g)
    assert f.eval(*p) == value


# -- split_ratio --------------------------------------------------------------


def test_split_ratio_frozen_forms():
    p = (QComplex(1, 2), QComplex(3))
    r1, r2 = split_ratio(1, 1, p)
    assert r1 == LaurentPolynomial.constant(QComplex(1) / QComplex(3))
    assert r2 == LaurentPolynomial({(1, -1): QComplex(-1) / QComplex(3)})
    r1, r2 = split_ratio(2, 1, p)
    third = QComplex(1) / QComplex(3)
    assert r1 == LaurentPolynomial({(1, 0): third, (0, 0): QComplex(1, 2) * third})
    assert r2 == LaurentPolynomial({(2, -1): -third})


@pytest.mark.parametrize("k,l", [(1, 1), (2, 1), (1, 2), (3, 2), (2, 3)])
def test_split_ratio_identity_and_cone(k, l):
    rng = random.Random(k * 7 + l)
    domain = CuspDomain.hartogs(k, l)
    for _ in range(10):
        p = _exact_point(rng)
        r1, r2 = split_ratio(k, l, p)
        lin1 = LaurentPolynomial({(1, 0): QComplex(1), (0, 0): -p[0]})
        lin2 = LaurentPolynomial({(0, 1): QComplex(1), (0, 0): -p[1]})
        ratio_value = powi(p[0], k) * powi(p[1], -l)
        target = LaurentPolynomial({(k, -l): QComplex(1), (0, 0): -ratio_value})
        assert r1 * lin1 + r2 * lin2 == target
        assert poly_bounded(domain, r1).bounded
        assert poly_bounded(domain, r2).bounded
    with pytest.raises(NonvanishingError):
        split_ratio(k, l, (QComplex(1), QComplex(0)))


# -- split_polynomial ---------------------------------------------------------


def test_split_polynomial_examples():
    p = (QComplex(1, -1), QComplex(2))
    lin2 = LaurentPolynomial({(0, 1): QComplex(1), (0, 0): -p[1]})
    assert split_polynomial(lin2, p) == (LaurentPolynomial.zero(), LaurentPolynomial.constant(QComplex(1)))

    prod = LaurentPolynomial({(1, 1): QComplex(1), (0, 0): -p[0] * p[1]})
    p1_part, p2_part = split_polynomial(prod, p)
    assert p1_part == LaurentPolynomial.monomial(0, 1)
    assert p2_part == LaurentPolynomial.constant(p[0])

    lin1 = LaurentPolynomial({(1, 0): QComplex(1), (0, 0): -p[0]})
    assert split_polynomial(lin1, p) == (LaurentPolynomial.constant(QComplex(1)), LaurentPolynomial.zero())


def test_split_polynomial_requires_vanishing():
    p = (QComplex(1), QComplex(2))
    with pytest.raises(NonvanishingError) as info:
        split_polynomial(LaurentPolynomial.constant(QComplex(3)), p)
    assert info.value.value == QComplex(3)


@pytest.mark.parametrize("seed", range(8))
def test_split_polynomial_reexpands(seed):
    rng = random.Random(seed)
    p = _exact_point(rng)
    # polynomial in z1, Laurent in z2, forced to vanish at p
    raw = {(rng.randint(0, 5), rng.randint(-4, 4)): rand_qcomplex(rng) for _ in range(7)}
    h = LaurentPolynomial(raw)
    P = h - LaurentPolynomial.constant(h.eval(*p))
    p1_part, p2_part = split_polynomial(P, p)
    lin1 = LaurentPolynomial({(1, 0): QComplex(1), (0, 0): -p[0]})
    lin2 = LaurentPolynomial({(0, 1): QComplex(1), (0, 0): -p[1]})
    assert p1_part * lin1 + p2_part * lin2 == P


def test_split_polynomial_float_mode():
    rng = random.Random(77)
    p = (0.4 + 0.1j, 0.6 - 0.2j)
    raw = {(rng.randint(0, 4), rng.randint(-3, 3)): complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(6)}
    h = LaurentPolynomial(raw)
    P = h - LaurentPolynomial.constant(h.eval(*p))
    p1_part, p2_part = split_polynomial(P, p)
    lin1 = LaurentPolynomial({(1, 0): 1, (0, 0): -p[0]})
    lin2 = LaurentPolynomial({(0, 1): 1, (0, 0): -p[1]})
    rebuilt = p1_part * lin1 + p2_part * lin2
    assert max_coeff_distance(rebuilt, P) <= 1e-10 * (1 + P.one_norm())


# -- split_component ----------------------------------------------------------


def _linear_factors(pair: MonomialPair, fiber: FiberData):
    ratio_lin = LaurentPolynomial({(pair.k, -pair.l): QComplex(1) if isinstance(fiber.ratio_value, QComplex) else 1.0, (0, 0): -fiber.ratio_value})
    cut_lin = LaurentPolynomial({(pair.m, pair.n): QComplex(1) if isinstance(fiber.ratio_value, QComplex) else 1.0, (0, 0): -fiber.cut_value})
    return ratio_lin, cut_lin


def test_split_component_examples():
    pair = MonomialPair(1, 1, 0, 1)
    rng = random.Random(2)
    p = _exact_point(rng)
    fiber = FiberData.from_point(pair, p)
    ratio_lin, cut_lin = _linear_factors(pair, fiber)

    f1, f2 = split_component(0, 0, ratio_lin, pair, p)
    assert f1 == LaurentPolynomial.constant(QComplex(1)) and f2.is_zero

    f1, f2 = split_component(0, 0, cut_lin, pair, p)
    assert f1.is_zero and f2 == LaurentPolynomial.constant(QComplex(1))

    f1, f2 = split_component(0, 0, ratio_lin * cut_lin, pair, p)
    assert f1 == cut_lin and f2.is_zero


@pytest.mark.parametrize("k,l,m,n", PARAM_TUPLES)
def test_split_component_reexpands_and_stays_in_cone(k, l, m, n):
    rng = random.Random(k * 31 + l * 7 + m * 3 + n)
    pair = MonomialPair(k, l, m, n)
    order = pair.order
    strip = CuspDomain.strip(k, l, 0.5, 2.0, m, n, 0.0)
    for _ in range(20):
        p = _exact_point(rng)
        fiber = FiberData.from_point(pair, p)
        i, j = rng.randrange(order), rng.randrange(order)
        h = rand_symmetric_component(rng, k, l, m, n, terms=6, exact=True)
        comp = h - LaurentPolynomial.constant(h.eval(*p))
        f1, f2 = split_component(i, j, comp, pair, p)
        ratio_lin, cut_lin = _linear_factors(pair, fiber)
        target = LaurentPolynomial.monomial(i, j) * comp
        assert f1 * ratio_lin + f2 * cut_lin == target
        for out in (f1, f2):
            for a, b in out.exponents():
                assert a * l + b * k >= 0
                assert strip.monomial_bounded(a, b)
            if (m, n) == (0, 1):
                assert poly_bounded(CuspDomain.hartogs(k, l), out).bounded


def test_split_component_detects_nonvanishing_input():
    pair = MonomialPair(1, 1, 0, 1)
    p = (QComplex(1), QComplex(2))
    with pytest.raises(InternalContractError):
        split_component(0, 0, LaurentPolynomial.constant(QComplex(1)), pair, p)


def test_split_component_float_mode():
    rng = random.Random(91)
    pair = MonomialPair(2, 1, 0, 1)
    p = (0.3 + 0.2j, 0.8 - 0.1j)
    h = rand_symmetric_component(rng, 2, 1, 0, 1, terms=6, exact=False)
    comp = h - LaurentPolynomial.constant(h.eval(*p))
    f1, f2 = split_component(1, 0, comp, pair, p)
    fiber = FiberData.from_point(pair, p)
    ratio_lin, cut_lin = _linear_factors(pair, fiber)
    rebuilt = f1 * ratio_lin + f2 * cut_lin
    target = LaurentPolynomial.monomial(1, 0) * comp
    assert max_coeff_distance(rebuilt, target) <= 1e-10 * (1 + comp.one_norm())


def test_branch_evaluations_agree_with_fiber_projection():
    # evaluate the symmetric component at an explicit branch point over a
    # random fiber coordinate and compare with the projected polynomial
    rng = random.Random(19)
    for k, l, m, n in [(2, 1, 0, 1), (1, 1, 1, 1)]:
        pair = MonomialPair(k, l, m, n)
        order = pair.order
        p = (0.4 + 0.3j, 0.7 - 0.2j)
        fiber = FiberData.from_point(pair, p)
        h = rand_symmetric_component(rng, k, l, m, n, terms=5, exact=False)
        g = to_ratio_cut(h, pair)
        proj = project_to_fiber(g, fiber)
        scale = 1 + h.one_norm()
        for _ in range(20):
            x_val = cmath.exp(complex(rng.uniform(-2, -0.1), rng.uniform(0, 6.28)))
            log_u = cmath.log(fiber.ratio_value)
            log_x = cmath.log(x_val)
            z1 = cmath.exp((n * log_u + l * log_x) / order)
            z2 = cmath.exp((-m * log_u + k * log_x) / order)
            proj_val = sum(c * x_val**beta for (_, beta), c in proj.terms.items())
            for a in range(order):
                for b in range(order):
                    g1 = cmath.exp(2j * math.pi * (n * a + l * b) / order)
                    g2 = cmath.exp(2j * math.pi * (-m * a + k * b) / order)
                    branch_val = h.eval(g1 * z1, g2 * z2)
                    assert abs(branch_val - proj_val) <= 1e-10 * scale
