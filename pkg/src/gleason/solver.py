"""Top-level solver: write f vanishing at p as f1*(z1-p1) + f2*(z2-p2).

For an interior base point: subtract a low-degree interpolating correction so
every symmetric component vanishes at the base point, split each component
against the ratio and cut monomials, then recombine through the closed-form
ratio split.  On the z2-axis explicit slice formulas avoid roots of unity
entirely, so that branch is exact for every (k, l).
"""

from __future__ import annotations

from dataclasses import dataclass

from .division import (
    FiberData,
    MonomialPair,
    split_component,
    split_polynomial,
    split_ratio,
)
from .domains import STRIP_OMEGA2, CuspDomain, poly_bounded
from .errors import InputError, NonvanishingError, UnboundedError
from .exprio import format_scalar
from .laurent import LaurentPolynomial, divide_univariate
from .scalars import coeff_abs, is_zero_coeff, powi
from .symmetry import correction_polynomial, symmetric_decompose
from .verify import VerificationReport, verify

VANISH_TOL_REL = 1e-9

MODE_INTERIOR = "p1_nonzero"
MODE_AXIS = "p1_zero"
MODE_STRIP = "omega2_local"
_MODES = (MODE_INTERIOR, MODE_AXIS, MODE_STRIP)


@dataclass(frozen=True)
class GleasonProblem:
    """Validated problem data: a bounded f on the domain, vanishing at p."""

    domain: CuspDomain
    f: LaurentPolynomial
    p: tuple

    def __post_init__(self):
        p1, p2 = self.p
        if not self.domain.contains(p1, p2):
            raise InputError("base point is not inside the domain")
        cert = poly_bounded(self.domain, self.f)
        if not cert.bounded:
            raise UnboundedError(
                "f has monomials outside the bounded cone", cert
            )
        value = self.f.eval(p1, p2)
        if isinstance(value, (complex, float)):
            vanishes = abs(value) <= VANISH_TOL_REL * self.f.one_norm()
        else:
            vanishes = is_zero_coeff(value)
        if not vanishes:
            raise NonvanishingError(
                f"f(p) = {format_scalar(value)} != 0", value
            )


@dataclass(frozen=True)
class GleasonSolution:
    problem: GleasonProblem
    f1: LaurentPolynomial
    f2: LaurentPolynomial
    mode: str
    report: VerificationReport


def _axis_parts(f: LaurentPolynomial, l: int, p2):
    """Explicit split at p = (0, p2): f = f1*z1 + f2*(z2 - p2).

    With f0 the z1-free slice of f, take

        f1 = (z2^l / p2^l) * (f - f0) / z1,
        f2 = -(sum_{j<l} z2^j p2^(l-1-j)) * (f - f0) / p2^l + f0 / (z2 - p2).

    The minus sign on the (f - f0) factor is what makes the identity close:
    (z2 - p2) times the sum telescopes to z2^l - p2^l, which cancels the
    z2^l/p2^l prefactor of f1*z1 down to exactly (f - f0).
    """
    axis_terms: dict = {}
    rest_terms: dict = {}
    for (a, b), c in f.terms.items():
        (axis_terms if a == 0 else rest_terms)[(a, b)] = c
    f0 = LaurentPolynomial(axis_terms, prune_scale=f.max_norm())
    rest = LaurentPolynomial(rest_terms, prune_scale=f.max_norm())

    inv = 1 / powi(p2, l)
    f1 = LaurentPolynomial(
        {(a - 1, b + l): c * inv for (a, b), c in rest.terms.items()},
        prune_scale=f.max_norm() * coeff_abs(inv),
    )
    comb = LaurentPolynomial(
        {(0, j): -(powi(p2, l - 1 - j) * inv) for j in range(l)}
    )
    f2 = comb * rest + divide_univariate(f0, p2, var=2)
    bound_rhs = 2 ** (l + 1) * float(f.one_norm()) / coeff_abs(powi(p2, l))
    return f1, f2, bound_rhs


def _pipeline_parts(f: LaurentPolynomial, p: tuple, pair: MonomialPair):
    """Shared interior pipeline over the ratio/cut monomial pair."""
    order = pair.order
    P = correction_polynomial(f, p, order)
    P1, P2 = split_polynomial(P, p)
    R1, R2 = split_ratio(pair.k, pair.l, p)
    if pair.m == 0 and pair.n == 1:
        # The cut monomial is z2 itself, so x - x_p feeds f2 directly.
        V1 = LaurentPolynomial.zero()
        V2 = LaurentPolynomial.constant(1)
    else:
        fiber = FiberData.from_point(pair, p)
        cut_poly = LaurentPolynomial.monomial(pair.m, pair.n) - (
            LaurentPolynomial.constant(fiber.cut_value)
        )
        V1, V2 = split_polynomial(cut_poly, p)

    system = symmetric_decompose(f - P, order)
    f1 = P1
    f2 = P2
    for (i, j), comp in system.components.items():
        if comp.is_zero:
            continue
        g1, g2 = split_component(i, j, comp, pair, p)
        f1 = f1 + g1 * R1 + g2 * V1
        f2 = f2 + g1 * R2 + g2 * V2
    return f1, f2


def solve(
    domain: CuspDomain,
    f: LaurentPolynomial,
    p: tuple,
    *,
    samples: int = 2000,
    seed: int = 42,
    cusp_bias: float = 0.5,
    depth: float = 30.0,
    force_branch: str | None = None,
) -> GleasonSolution:
    """Solve the division problem and attach a verification report.

    Dispatch: strip domains use the local strip pipeline; on the full cusp
    domain a base point on the z2-axis takes the explicit axis branch and any
    other base point the interior pipeline.  force_branch overrides the
    dispatch (raising InputError when the branch's own preconditions fail).
    """
    if force_branch is not None and force_branch not in _MODES:
        raise InputError(f"unknown branch {force_branch!r}")
    problem = GleasonProblem(domain, f, p)
    p1, p2 = p

    if force_branch is None:
        if domain.kind == STRIP_OMEGA2:
            mode = MODE_STRIP
        elif is_zero_coeff(p1):
            mode = MODE_AXIS
        else:
            mode = MODE_INTERIOR
    else:
        mode = force_branch
        if mode == MODE_STRIP and domain.kind != STRIP_OMEGA2:
            raise InputError("strip branch requires a strip domain")
        if mode != MODE_STRIP and domain.kind == STRIP_OMEGA2:
            raise InputError("strip domains support only the strip branch")
        if mode == MODE_AXIS and not is_zero_coeff(p1):
            raise InputError("axis branch requires p1 = 0")
        if mode == MODE_INTERIOR and is_zero_coeff(p1):
            raise InputError("interior branch requires p1 != 0")

    bound_rhs = None
    if mode == MODE_AXIS:
        f1, f2, bound_rhs = _axis_parts(f, domain.l, p2)
    elif mode == MODE_INTERIOR:
        f1, f2 = _pipeline_parts(f, p, MonomialPair(domain.k, domain.l, 0, 1))
    else:
        pair = MonomialPair(domain.k, domain.l, domain.cut_m, domain.cut_n)
        f1, f2 = _pipeline_parts(f, p, pair)

    report = verify(
        domain,
        f,
        f1,
        f2,
        p,
        samples=samples,
        seed=seed,
        cusp_bias=cusp_bias,
        depth=depth,
        bound_rhs=bound_rhs,
    )
    return GleasonSolution(problem=problem, f1=f1, f2=f2, mode=mode, report=report)
