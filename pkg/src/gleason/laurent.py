"""Sparse Laurent polynomials in two complex variables.

A polynomial is a finite map from integer exponent pairs ``(a, b)`` to nonzero
coefficients, representing ``sum c * z1**a * z2**b``.  Coefficients are either
``complex`` or exact ``QComplex`` values; see :mod:`gleason.scalars`.  The term
map is canonical: exact zeros are never stored, and in floating mode any
coefficient with modulus at most ``1e-14`` times the operation's scale is
dropped.
"""

from __future__ import annotations

from types import MappingProxyType

from .errors import EvaluationDomainError, NotDivisibleError
from .scalars import QComplex, coeff_abs, is_zero_coeff, powi, root_table
from .scalars import is_exact as scalar_is_exact

PRUNE_REL = 1e-14
DIVIDE_TOL_REL = 1e-9


def _canonical(terms: dict, prune_scale: float | None) -> dict:
    """Drop exact zeros and, for floating coefficients, negligible ones."""
    if prune_scale is None:
        prune_scale = 0.0
        for c in terms.values():
            if not isinstance(c, QComplex):
                prune_scale = max(prune_scale, coeff_abs(c))
    threshold = PRUNE_REL * prune_scale
    out = {}
    for exp, c in terms.items():
        if isinstance(c, QComplex):
            if c.is_zero:
                continue
        elif c == 0 or abs(c) <= threshold:
            continue
        out[exp] = c
    return out


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial in z1, z2."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | None = None, *, prune_scale: float | None = None):
        self._terms = _canonical(dict(terms or {}), prune_scale)

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls({})

    @classmethod
    def constant(cls, c) -> "LaurentPolynomial":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "LaurentPolynomial":
        return cls({(a, b): c})

    # -- inspection ------------------------------------------------------

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def exponents(self):
        return self._terms.keys()

    def coefficient(self, a: int, b: int):
        return self._terms.get((a, b), 0)

    def one_norm(self) -> float:
        """Sum of coefficient moduli."""
        return sum(coeff_abs(c) for c in self._terms.values())

    def max_norm(self) -> float:
        """Largest coefficient modulus."""
        return max((coeff_abs(c) for c in self._terms.values()), default=0.0)

    def is_exact(self) -> bool:
        return all(isinstance(c, QComplex) for c in self._terms.values())

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if self._terms.keys() != other._terms.keys():
            return False
        return all(other._terms[e] == c for e, c in self._terms.items())

    __hash__ = None

    def __repr__(self):
        return f"LaurentPolynomial({dict(sorted(self._terms.items()))!r})"

    def __str__(self):
        from .exprio import format_poly

        return format_poly(self)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, LaurentPolynomial):
            acc = dict(self._terms)
            for exp, c in other._terms.items():
                acc[exp] = acc.get(exp, 0) + c
            return LaurentPolynomial(
                acc, prune_scale=max(self.max_norm(), other.max_norm())
            )
        if isinstance(other, (int, float, complex, QComplex)):
            return self + LaurentPolynomial.constant(other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(
            {e: -c for e, c in self._terms.items()}, prune_scale=self.max_norm()
        )

    def __sub__(self, other):
        if isinstance(other, (LaurentPolynomial, int, float, complex, QComplex)):
            return self + (-other if isinstance(other, LaurentPolynomial) else -1 * other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LaurentPolynomial):
            acc: dict = {}
            for (a1, b1), c1 in self._terms.items():
                for (a2, b2), c2 in other._terms.items():
                    exp = (a1 + a2, b1 + b2)
                    acc[exp] = acc.get(exp, 0) + c1 * c2
            return LaurentPolynomial(
                acc, prune_scale=self.max_norm() * other.max_norm()
            )
        if isinstance(other, (int, float, complex, QComplex)):
            if is_zero_coeff(other):
                return LaurentPolynomial.zero()
            return LaurentPolynomial(
                {e: c * other for e, c in self._terms.items()},
                prune_scale=self.max_norm() * coeff_abs(other),
            )
        return NotImplemented

    __rmul__ = __mul__

    # -- evaluation ---------------------------------------------------------

    def eval(self, q1, q2):
        """Value at (q1, q2); exact when coefficients and point are exact.

        A zero coordinate is allowed only if the polynomial has no negative
        exponent in that variable.
        """
        q1_zero = is_zero_coeff(q1)
        q2_zero = is_zero_coeff(q2)
        pow1: dict = {}
        pow2: dict = {}
        total = 0
        for (a, b), c in self._terms.items():
            if q1_zero and a != 0:
                if a < 0:
                    raise EvaluationDomainError(
                        "negative z1-exponent evaluated at z1 = 0"
                    )
                continue
            if q2_zero and b != 0:
                if b < 0:
                    raise EvaluationDomainError(
                        "negative z2-exponent evaluated at z2 = 0"
                    )
                continue
            term = c
            if a:
                if a not in pow1:
                    pow1[a] = powi(q1, a)
                term = term * pow1[a]
            if b:
                if b not in pow2:
                    pow2[b] = powi(q2, b)
                term = term * pow2[b]
            total = total + term
        return total

    def substitute_z1(self, value) -> "LaurentPolynomial":
        """Partial evaluation z1 := value, leaving a polynomial in z2."""
        value_zero = is_zero_coeff(value)
        powers: dict = {}
        acc: dict = {}
        for (a, b), c in self._terms.items():
            if value_zero and a != 0:
                if a < 0:
                    raise EvaluationDomainError(
                        "negative z1-exponent evaluated at z1 = 0"
                    )
                continue
            if a:
                if a not in powers:
                    powers[a] = powi(value, a)
                c = c * powers[a]
            acc[(0, b)] = acc.get((0, b), 0) + c
        return LaurentPolynomial(acc, prune_scale=self.max_norm())

    def rotate(self, s: int, t: int, order: int) -> "LaurentPolynomial":
        """Substitution z1 -> zeta^s z1, z2 -> zeta^t z2 for zeta = exp(2*pi*i/order).

        Exact whenever the root of unity is a Gaussian rational (order 1, 2, 4).
        """
        table = root_table(order)
        return LaurentPolynomial(
            {
                (a, b): c * table[(a * s + b * t) % order]
                for (a, b), c in self._terms.items()
            },
            prune_scale=self.max_norm(),
        )


def max_coeff_distance(f: LaurentPolynomial, g: LaurentPolynomial) -> float:
    """Largest modulus among coefficients of f - g; float-friendly comparison."""
    exps = set(f.exponents()) | set(g.exponents())
    best = 0.0
    for e in exps:
        best = max(best, coeff_abs(f.coefficient(*e) - g.coefficient(*e)))
    return best


def _linear_quotient(coeffs: dict, root):
    """Divide sum c_d t^d (d >= 0) by (t - root) via Horner.

    Returns (quotient map, remainder value).  The walk is dense from the top
    exponent down because the quotient generally is.
    """
    if not coeffs:
        return {}, 0
    top = max(coeffs)
    carry = 0
    quotient: dict = {}
    for d in range(top, 0, -1):
        carry = coeffs.get(d, 0) + root * carry
        quotient[d - 1] = carry
    remainder = coeffs.get(0, 0) + root * carry
    return quotient, remainder


def _univariate_map(f: LaurentPolynomial, var: int) -> dict:
    out = {}
    for (a, b), c in f.terms.items():
        out[a if var == 1 else b] = c
    return out


def divide_univariate(
    f: LaurentPolynomial, root, var: int | None = None
) -> LaurentPolynomial:
    """Quotient f / (z_var - root) for univariate f vanishing at root.

    root must be nonzero; negative exponents are handled by clearing the pole
    first.  In floating mode the remainder may be up to 1e-9 times the
    coefficient sum; anything larger raises NotDivisibleError carrying the
    residual value f(root).
    """
    if is_zero_coeff(root):
        raise EvaluationDomainError("division root must be nonzero")
    if f.is_zero:
        return LaurentPolynomial.zero()
    uses_z1 = any(a for a, _ in f.exponents())
    uses_z2 = any(b for _, b in f.exponents())
    if uses_z1 and uses_z2:
        raise ValueError("polynomial depends on both variables")
    if var is None:
        var = 1 if uses_z1 else 2
    elif (var == 1 and uses_z2) or (var == 2 and uses_z1):
        raise ValueError("polynomial is not univariate in the requested variable")

    coeffs = _univariate_map(f, var)
    shift = min(coeffs)
    if shift < 0:
        coeffs = {d - shift: c for d, c in coeffs.items()}
    else:
        shift = 0
    quotient, remainder = _linear_quotient(coeffs, root)

    exact = f.is_exact() and scalar_is_exact(remainder)
    if exact:
        if not is_zero_coeff(remainder):
            residual = remainder * powi(root, shift)
            raise NotDivisibleError("nonzero remainder in exact division", residual)
    elif coeff_abs(remainder) > DIVIDE_TOL_REL * f.one_norm():
        residual = remainder * powi(root, shift)
        raise NotDivisibleError(
            f"remainder {coeff_abs(remainder):.3e} beyond tolerance", residual
        )

    terms = {
        ((d + shift, 0) if var == 1 else (0, d + shift)): c
        for d, c in quotient.items()
    }
    return LaurentPolynomial(terms, prune_scale=f.max_norm() * (1 + coeff_abs(root)))


def shift_divide_z1(f: LaurentPolynomial, p1) -> LaurentPolynomial:
    """Quotient (f - f|_{z1=p1}) / (z1 - p1), taken slice by slice in z2.

    For p1 = 0 this is the plain shift a -> a-1 and requires every
    z1-exponent to be nonnegative.
    """
    slices: dict[int, dict[int, object]] = {}
    for (a, b), c in f.terms.items():
        slices.setdefault(b, {})[a] = c

    out: dict = {}
    if is_zero_coeff(p1):
        for b, sl in slices.items():
            for a, c in sl.items():
                if a < 0:
                    raise EvaluationDomainError(
                        "negative z1-exponent in shift-division at p1 = 0"
                    )
                if a >= 1:
                    out[(a - 1, b)] = c
        return LaurentPolynomial(out, prune_scale=f.max_norm())

    for b, sl in slices.items():
        value = 0
        powers: dict = {}
        for a, c in sl.items():
            if a not in powers:
                powers[a] = powi(p1, a)
            value = value + c * powers[a]
        # Clear the pole: divide t^(-shift) * (slice - slice(p1)) by (t - p1),
        # then shift the quotient back down.
        shift = min(min(sl), 0)
        adjusted = {a - shift: c for a, c in sl.items()}
        adjusted[-shift] = adjusted.get(-shift, 0) - value
        quotient, _remainder = _linear_quotient(adjusted, p1)
        # The remainder is (slice - slice(p1))(p1) = 0 up to roundoff; discard.
        for d, c in quotient.items():
            exp = (d + shift, b)
            out[exp] = out.get(exp, 0) + c
    return LaurentPolynomial(out, prune_scale=f.max_norm() * (1 + coeff_abs(p1)))
