"""Division kernels: explicit solutions of f = f1*(z1-p1) + f2*(z2-p2) pieces.

The cusp geometry is governed by two monomials: the ratio u = z1^k z2^(-l),
constant on the curves that foliate the cusp, and the cut v = z1^m z2^n.
Symmetric components (exponents divisible by N = k*n + l*m) rewrite exactly
in the variables (u, v); dividing by (u - u(p)) and (v - v(p)) there gives the
bounded building blocks that the solver recombines.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType

from .errors import ConeError, InternalContractError, NonvanishingError
from .laurent import (
    DIVIDE_TOL_REL,
    LaurentPolynomial,
    _canonical,
    _linear_quotient,
    divide_univariate,
    shift_divide_z1,
)
from .scalars import QComplex, coeff_abs, is_zero_coeff, powi


@dataclass(frozen=True)
class MonomialPair:
    """Exponent data of the ratio monomial z1^k z2^(-l) and cut monomial z1^m z2^n."""

    k: int
    l: int
    m: int = 0
    n: int = 1

    def __post_init__(self):
        if self.k < 1 or self.l < 1 or self.n < 1 or self.m < 0:
            raise ValueError("need k, l, n >= 1 and m >= 0")

    @property
    def order(self) -> int:
        return self.k * self.n + self.l * self.m


@dataclass(frozen=True)
class FiberData:
    """Values of the ratio and cut monomials at the base point."""

    ratio_value: object
    cut_value: object

    @classmethod
    def from_point(cls, pair: MonomialPair, p: tuple) -> "FiberData":
        p1, p2 = p
        if is_zero_coeff(p1) or is_zero_coeff(p2):
            raise NonvanishingError(
                "fiber data requires a base point off the coordinate axes", p
            )
        return cls(
            ratio_value=powi(p1, pair.k) * powi(p2, -pair.l),
            cut_value=powi(p1, pair.m) * powi(p2, pair.n),
        )


class RatioCutForm:
    """Polynomial in the ratio and cut monomials; ratio exponents are >= 0."""

    __slots__ = ("pair", "_terms")

    def __init__(self, pair: MonomialPair, terms: dict, *, prune_scale=None):
        self.pair = pair
        self._terms = _canonical(dict(terms), prune_scale)
        for alpha, _beta in self._terms:
            if alpha < 0:
                raise ConeError(
                    f"ratio exponent {alpha} is negative: outside the ratio cone"
                )

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def one_norm(self) -> float:
        return sum(coeff_abs(c) for c in self._terms.values())

    def max_norm(self) -> float:
        return max((coeff_abs(c) for c in self._terms.values()), default=0.0)

    def is_exact(self) -> bool:
        return all(isinstance(c, QComplex) for c in self._terms.values())

    def __repr__(self):
        return f"RatioCutForm({self.pair!r}, {dict(sorted(self._terms.items()))!r})"


def to_ratio_cut(f: LaurentPolynomial, pair: MonomialPair) -> RatioCutForm:
    """Rewrite a symmetric polynomial in the ratio and cut monomials.

    Every exponent pair of f must be divisible by pair.order in both
    variables; a negative resulting ratio exponent means f is outside the
    ratio-polynomial cone and raises ConeError.
    """
    order = pair.order
    acc: dict = {}
    for (a, b), c in f.terms.items():
        if a % order or b % order:
            raise InternalContractError(
                f"exponent ({a}, {b}) is not divisible by the symmetry order {order}"
            )
        alpha_num = a * pair.n - b * pair.m
        beta_num = a * pair.l + b * pair.k
        if alpha_num % order or beta_num % order:
            raise InternalContractError(
                f"exponent ({a}, {b}) does not invert through the change of variables"
            )
        acc[(alpha_num // order, beta_num // order)] = c
    return RatioCutForm(pair, acc, prune_scale=f.max_norm())


def from_ratio_cut(form: RatioCutForm) -> LaurentPolynomial:
    """Expand back to z-exponents: u^alpha v^beta = z1^(ak+bm) z2^(-al+bn)."""
    pair = form.pair
    return LaurentPolynomial(
        {
            (alpha * pair.k + beta * pair.m, -alpha * pair.l + beta * pair.n): c
            for (alpha, beta), c in form.terms.items()
        },
        prune_scale=form.max_norm(),
    )


def project_to_fiber(form: RatioCutForm, fiber: FiberData) -> RatioCutForm:
    """Substitute the ratio monomial by its base-point value.

    The result depends on the cut monomial alone and equals the composition
    with the projection onto the fiber through the base point; that geometric
    description is branch-independent, which the test suite checks
    numerically against explicit root choices.
    """
    powers: dict = {}
    acc: dict = {}
    for (alpha, beta), c in form.terms.items():
        if alpha:
            if alpha not in powers:
                powers[alpha] = powi(fiber.ratio_value, alpha)
            c = c * powers[alpha]
        acc[(0, beta)] = acc.get((0, beta), 0) + c
    return RatioCutForm(form.pair, acc, prune_scale=form.max_norm())


def split_ratio(k: int, l: int, p: tuple) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """Closed-form pair (R1, R2) with u - u(p) = R1*(z1-p1) + R2*(z2-p2).

    Here u = z1^k z2^(-l).  Both parts are bounded on the cusp domain: their
    exponents sit inside the recession cone by construction.
    """
    p1, p2 = p
    if is_zero_coeff(p2):
        raise NonvanishingError("ratio split needs p2 != 0", p)
    inv = 1 / powi(p2, l)
    r1_terms = {(j, 0): powi(p1, k - 1 - j) * inv for j in range(k)}
    r2_terms = {(k, j - l): -powi(p2, l - 1 - j) * inv for j in range(l)}
    return LaurentPolynomial(r1_terms), LaurentPolynomial(r2_terms)


def split_polynomial(
    P: LaurentPolynomial, p: tuple
) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """Split a polynomial vanishing at p by peeling the z1 dependence first.

    P1 = (P - P|_{z1=p1}) / (z1 - p1) and P2 = (P|_{z1=p1} - P(p)) / (z2 - p2).
    Requires P(p) = 0 (exactly, or within 1e-9 of the coefficient sum).
    """
    p1, p2 = p
    value = P.eval(p1, p2)
    if P.is_exact() and not isinstance(value, (complex, float)):
        if not is_zero_coeff(value):
            raise NonvanishingError("polynomial does not vanish at the base point", value)
    elif coeff_abs(value) > DIVIDE_TOL_REL * P.one_norm():
        raise NonvanishingError("polynomial does not vanish at the base point", value)
    part1 = shift_divide_z1(P, p1)
    sliced = P.substitute_z1(p1)
    # subtract the slice's own evaluation, not `value`: the slice can sit many
    # orders below P (high z1 powers at small p1), and eval noise at P's scale
    # would then dominate the z2 division's remainder check
    rest = sliced - LaurentPolynomial.constant(sliced.eval(p1, p2))
    part2 = divide_univariate(rest, p2, var=2)
    return part1, part2


def split_component(
    i: int,
    j: int,
    comp: LaurentPolynomial,
    pair: MonomialPair,
    p: tuple,
) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """Split z1^i z2^j * comp against (u - u(p)) and (v - v(p)).

    comp must be symmetric of order pair.order and z1^i z2^j * comp must
    vanish at p.  Returns (g1, g2) with

        z1^i z2^j comp = g1 * (u - u(p)) + g2 * (v - v(p)),

    where u, v are the ratio and cut monomials.  Dividing the fiber
    projection by (v - v(p)) must be exact; a residue there means the
    vanishing precondition was violated and raises InternalContractError.
    """
    fiber = FiberData.from_point(pair, p)
    g = to_ratio_cut(comp, pair)
    g_proj = project_to_fiber(g, fiber)

    # Ratio direction: divide (g - g(fiber)) by (u - u(p)) slice by slice in
    # the cut exponent.  Each slice is an honest polynomial in u.
    slices: dict = {}
    for (alpha, beta), c in g.terms.items():
        slices.setdefault(beta, {})[alpha] = c
    ratio_terms: dict = {}
    for beta, sl in slices.items():
        adjusted = dict(sl)
        adjusted[0] = adjusted.get(0, 0) - g_proj.terms.get((0, beta), 0)
        quotient, _rem = _linear_quotient(adjusted, fiber.ratio_value)
        for alpha, c in quotient.items():
            ratio_terms[(alpha, beta)] = c
    part_ratio = RatioCutForm(pair, ratio_terms, prune_scale=g.max_norm())

    # Cut direction: divide the fiber projection by (v - v(p)), clearing any
    # pole in the cut exponent first.
    cut_slice = {beta: c for (_, beta), c in g_proj.terms.items()}
    cut_terms: dict = {}
    if cut_slice:
        shift = min(min(cut_slice), 0)
        adjusted = {beta - shift: c for beta, c in cut_slice.items()}
        quotient, rem = _linear_quotient(adjusted, fiber.cut_value)
        exact = g_proj.is_exact() and not isinstance(rem, (complex, float))
        if exact:
            if not is_zero_coeff(rem):
                raise InternalContractError(
                    "fiber projection does not vanish at the base point"
                )
        elif coeff_abs(rem) > DIVIDE_TOL_REL * max(g_proj.one_norm(), comp.one_norm()):
            raise InternalContractError(
                "fiber projection does not vanish at the base point"
            )
        for beta, c in quotient.items():
            cut_terms[(0, beta + shift)] = c
    part_cut = RatioCutForm(pair, cut_terms, prune_scale=g_proj.max_norm())

    shifter = LaurentPolynomial.monomial(i, j)
    return shifter * from_ratio_cut(part_ratio), shifter * from_ratio_cut(part_cut)
