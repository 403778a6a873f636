"""Verification of a decomposition: symbolic identity, sampling, boundedness.

Everything here treats the candidate factors as opaque polynomials.  The
residual polynomial f - f1*(z1-p1) - f2*(z2-p2) is formed once; its
coefficients decide the symbolic check and its values over a deterministic
cusp-biased sample set give the numeric residual.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .domains import CuspDomain, poly_bounded, sample
from .laurent import LaurentPolynomial

IDENTITY_TOL_REL = 1e-9
# Coefficient noise floor for declaring the symbolic residual zero.
NOISE_REL = 1e-12


@dataclass(frozen=True)
class VerificationReport:
    residual_max: float
    residual_argmax: tuple
    symbolic_residual_zero: bool
    residual_coeff_max: float
    bounded_f1: bool
    bounded_f2: bool
    cone_violations: tuple
    sup_f_upper: float
    sup_f1_sampled: float
    sup_f2_sampled: float
    samples_used: int
    seed: int
    identity_tol: float
    bound_rhs: float | None = None

    @property
    def passed(self) -> bool:
        return (
            self.symbolic_residual_zero
            and self.residual_max <= self.identity_tol
            and self.bounded_f1
            and self.bounded_f2
        )


def eval_on_arrays(f: LaurentPolynomial, q1, q2) -> np.ndarray:
    """Vectorized evaluation on complex arrays, with per-exponent power reuse."""
    q1 = np.asarray(q1, dtype=complex)
    q2 = np.asarray(q2, dtype=complex)
    out = np.zeros(np.broadcast(q1, q2).shape, dtype=complex)
    pow1: dict = {}
    pow2: dict = {}
    for (a, b), c in f.terms.items():
        if a not in pow1:
            pow1[a] = q1**a
        if b not in pow2:
            pow2[b] = q2**b
        out += complex(c) * pow1[a] * pow2[b]
    return out


def symbolic_residual(
    f: LaurentPolynomial,
    f1: LaurentPolynomial,
    f2: LaurentPolynomial,
    p: tuple,
) -> LaurentPolynomial:
    """f - f1*(z1-p1) - f2*(z2-p2) as a polynomial; zero iff the identity holds."""
    lin1 = LaurentPolynomial.monomial(1, 0) - LaurentPolynomial.constant(p[0])
    lin2 = LaurentPolynomial.monomial(0, 1) - LaurentPolynomial.constant(p[1])
    return f - f1 * lin1 - f2 * lin2


def sampled_sup(
    f: LaurentPolynomial,
    domain: CuspDomain,
    count: int,
    seed: int,
    cusp_bias: float = 0.5,
    depth: float = 30.0,
) -> float:
    """Max of |f| over the deterministic sample set (a lower bound for the sup)."""
    if count <= 0:
        return 0.0
    pts = sample(domain, count, seed, cusp_bias, depth)
    q1 = np.array([a for a, _ in pts], dtype=complex)
    q2 = np.array([b for _, b in pts], dtype=complex)
    return float(np.max(np.abs(eval_on_arrays(f, q1, q2))))


def verify(
    domain: CuspDomain,
    f: LaurentPolynomial,
    f1: LaurentPolynomial,
    f2: LaurentPolynomial,
    p: tuple,
    *,
    samples: int = 2000,
    seed: int = 42,
    cusp_bias: float = 0.5,
    depth: float = 30.0,
    bound_rhs: float | None = None,
) -> VerificationReport:
    """Full report: symbolic residual, sampled residual, cone certificates."""
    residual = symbolic_residual(f, f1, f2, p)
    coeff_max = residual.max_norm()
    scale = 1.0 + f.one_norm()
    symbolic_zero = residual.is_zero or float(coeff_max) <= NOISE_REL * scale

    cert1 = poly_bounded(domain, f1)
    cert2 = poly_bounded(domain, f2)
    violations = tuple(sorted(set(cert1.violations) | set(cert2.violations)))

    if samples > 0:
        pts = sample(domain, samples, seed, cusp_bias, depth)
        q1 = np.array([a for a, _ in pts], dtype=complex)
        q2 = np.array([b for _, b in pts], dtype=complex)
        res = np.abs(eval_on_arrays(residual, q1, q2))
        top = int(np.argmax(res))
        residual_max = float(res[top])
        argmax = (complex(q1[top]), complex(q2[top]))
        sup1 = float(np.max(np.abs(eval_on_arrays(f1, q1, q2))))
        sup2 = float(np.max(np.abs(eval_on_arrays(f2, q1, q2))))
    else:
        residual_max = 0.0
        argmax = (complex(p[0]), complex(p[1]))
        sup1 = 0.0
        sup2 = 0.0

    return VerificationReport(
        residual_max=residual_max,
        residual_argmax=argmax,
        symbolic_residual_zero=symbolic_zero,
        residual_coeff_max=float(coeff_max),
        bounded_f1=cert1.bounded,
        bounded_f2=cert2.bounded,
        cone_violations=violations,
        sup_f_upper=float(f.one_norm()),
        sup_f1_sampled=sup1,
        sup_f2_sampled=sup2,
        samples_used=max(samples, 0),
        seed=seed,
        identity_tol=IDENTITY_TOL_REL * scale,
        bound_rhs=bound_rhs,
    )


def averaged_component(f: LaurentPolynomial, order: int, i: int, j: int, q1, q2):
    """Numeric oracle for one symmetric component, by root-of-unity averaging.

    Averages f over the rotation group of the given order with the character
    for residue class (i, j), then strips the z1^i z2^j prefactor.  Agrees
    with the exact exponent-routing decomposition wherever both are defined.
    """
    q1 = complex(q1)
    q2 = complex(q2)
    total = 0j
    for s in range(order):
        for t in range(order):
            character = cmath.exp(-2j * math.pi * (i * s + j * t) / order)
            r1 = cmath.exp(2j * math.pi * s / order)
            r2 = cmath.exp(2j * math.pi * t / order)
            total += character * complex(f.eval(r1 * q1, r2 * q2))
    return total / (order**2 * q1**i * q2**j)


def averaged_component_on_arrays(
    f: LaurentPolynomial, order: int, i: int, j: int, q1, q2
) -> np.ndarray:
    """Batched form of averaged_component over arrays of sample points."""
    q1 = np.asarray(q1, dtype=complex)
    q2 = np.asarray(q2, dtype=complex)
    total = np.zeros(np.broadcast(q1, q2).shape, dtype=complex)
    for s in range(order):
        for t in range(order):
            character = cmath.exp(-2j * math.pi * (i * s + j * t) / order)
            r1 = cmath.exp(2j * math.pi * s / order)
            r2 = cmath.exp(2j * math.pi * t / order)
            total = total + character * eval_on_arrays(f, r1 * q1, r2 * q2)
    return total / (order**2 * q1**i * q2**j)
