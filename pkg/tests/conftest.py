"""Shared corpus generators for the test suite.

Random draws always take an explicit random.Random so every test is
reproducible from its own seed.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from gleason import CuspDomain, LaurentPolynomial, QComplex


def rand_fraction(rng: random.Random, span: int = 8) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rand_qcomplex(rng: random.Random, nonzero: bool = False) -> QComplex:
    while True:
        q = QComplex(rand_fraction(rng), rand_fraction(rng))
        if not (nonzero and q.is_zero):
            return q


def rand_complex(rng: random.Random, scale: float = 2.0, nonzero: bool = False) -> complex:
    while True:
        z = complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))
        if not (nonzero and z == 0):
            return z


def rand_laurent(
    rng: random.Random,
    terms: int = 8,
    max_exp: int = 6,
    exact: bool = False,
) -> LaurentPolynomial:
    """Unconstrained random Laurent polynomial (may be unbounded on any domain)."""
    out: dict = {}
    for _ in range(terms):
        e = (rng.randint(-max_exp, max_exp), rng.randint(-max_exp, max_exp))
        out[e] = rand_qcomplex(rng) if exact else rand_complex(rng)
    return LaurentPolynomial(out)


def cone_exponent(rng: random.Random, domain: CuspDomain, max_exp: int = 12):
    """One exponent pair inside the domain's bounded cone."""
    while True:
        a = rng.randint(-max_exp, max_exp)
        b = rng.randint(-max_exp, max_exp)
        if domain.monomial_bounded(a, b):
            return (a, b)


def rand_bounded_poly(
    rng: random.Random,
    domain: CuspDomain,
    terms: int,
    max_exp: int = 12,
    exact: bool = False,
) -> LaurentPolynomial:
    out: dict = {}
    for _ in range(terms):
        e = cone_exponent(rng, domain, max_exp)
        out[e] = rand_qcomplex(rng) if exact else rand_complex(rng)
    return LaurentPolynomial(out)


def rand_symmetric_component(
    rng: random.Random,
    k: int,
    l: int,
    m: int,
    n: int,
    terms: int,
    max_unit: int = 4,
    exact: bool = False,
) -> LaurentPolynomial:
    """Random component: exponents in (N*Z)^2, inside both the domain cone
    (a*l + b*k >= 0, plus a >= 0 when m = 0) and the ratio cone (a*n >= b*m)."""
    order = k * n + l * m
    out: dict = {}
    drawn = 0
    while drawn < terms:
        au = rng.randint(-max_unit, max_unit)
        bu = rng.randint(-max_unit, max_unit)
        a, b = order * au, order * bu
        if a * n - b * m < 0 or a * l + b * k < 0:
            continue
        if m == 0 and a < 0:
            continue
        out[(a, b)] = rand_qcomplex(rng) if exact else rand_complex(rng)
        drawn += 1
    return LaurentPolynomial(out)


def strip_cone_poly(
    rng: random.Random,
    k: int,
    l: int,
    m: int,
    n: int,
    terms: int,
    max_exp: int = 6,
    exact: bool = False,
) -> LaurentPolynomial:
    """Random polynomial solvable on a strip with cut monomial z1^m z2^n.

    Exponents satisfy the strip cone a*l + b*k >= 0 and, after routing to the
    symmetric component, the ratio cone (a - a mod N)*n >= (b - b mod N)*m.
    """
    order = k * n + l * m
    out: dict = {}
    drawn = 0
    while drawn < terms:
        a = rng.randint(-max_exp, max_exp)
        b = rng.randint(-max_exp, max_exp)
        if a * l + b * k < 0:
            continue
        if (a - a % order) * n < (b - b % order) * m:
            continue
        out[(a, b)] = rand_qcomplex(rng) if exact else rand_complex(rng)
        drawn += 1
    return LaurentPolynomial(out)


def rand_interior_point(rng: random.Random, domain: CuspDomain, exact: bool = False):
    """Base point inside the domain, off both axes, with moduli kept moderate."""
    k, l = domain.k, domain.l
    if domain.kind == "hartogs_full":
        while True:
            if exact:
                den = rng.randint(3, 9)
                p2 = QComplex(Fraction(rng.randint(1, den - 1), den))
                p1 = QComplex(Fraction(rng.randint(1, den - 1), den)) * p2
            else:
                r2 = rng.uniform(0.2, 0.9)
                r1 = rng.uniform(0.1, 0.9) * r2 ** (l / k)
                t1, t2 = rng.uniform(0, 2 * math.pi), rng.uniform(0, 2 * math.pi)
                p1 = complex(r1 * math.cos(t1), r1 * math.sin(t1))
                p2 = complex(r2 * math.cos(t2), r2 * math.sin(t2))
            if not domain.contains(p1, p2):
                continue
            if exact and (p1.is_zero or p2.is_zero):
                continue
            if not exact and (p1 == 0 or p2 == 0):
                continue
            return (p1, p2)
    # strip: pick log coordinates from the sampler's own geometry
    from gleason import sample

    q1, q2 = sample(domain, 1, rng.randint(0, 10**9))[0]
    return (q1, q2)


def subtract_value_at(f: LaurentPolynomial, p) -> LaurentPolynomial:
    """f - f(p), the standard way the corpus meets the vanishing precondition."""
    return f - LaurentPolynomial.constant(f.eval(*p))


# one visible PASS/FAIL line per acceptance check, immune to output capture
_ACCEPTANCE_RESULTS: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        _ACCEPTANCE_RESULTS[name] = "PASS" if report.passed else "FAIL"
    elif report.failed:
        _ACCEPTANCE_RESULTS[name] = "FAIL"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance")
    for name in sorted(_ACCEPTANCE_RESULTS):
        label = name.removeprefix("test_").replace("_", " ", 1)
        terminalreporter.write_line(f"[{label}] {_ACCEPTANCE_RESULTS[name]}")
