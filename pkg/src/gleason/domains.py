"""Cusp domains, their logarithmic geometry, and boundedness certificates.

Two domain kinds are supported.  ``hartogs_full`` is
``{ |z1|^k < |z2|^l < 1 }``, whose logarithmic image is the open cone spanned
by (-1, 0) and (-l, -k).  ``strip_omega2`` is a strip
``a < |z1^k / z2^l| < b`` cut off by a line ``y <= (-m/n) x + r`` in
logarithmic coordinates; its only recession direction is (-l, -k).

A monomial z1^a z2^b is bounded on a domain exactly when the exponent vector
has nonpositive inner product with every recession generator.  On the closure
of hartogs_full every bounded monomial has supremum 1, so the coefficient sum
is an upper bound for the polynomial's supremum there.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import EvaluationDomainError, InfeasibleSplitError, InputError
from .laurent import LaurentPolynomial
from .scalars import QComplex

HARTOGS_FULL = "hartogs_full"
STRIP_OMEGA2 = "strip_omega2"

# Width, in log scale, of the truncated z1-section used by the sampler; the
# true section of hartogs_full is a half line.
SECTION_WIDTH = 24.0
DEEP_BAND_TOP = -3.0
SHALLOW_BAND_TOP = -1e-3


def _abs2(q):
    """Squared modulus; exact Fraction for QComplex, float otherwise."""
    if isinstance(q, QComplex):
        return q.abs2()
    z = complex(q)
    return z.real * z.real + z.imag * z.imag


@dataclass(frozen=True)
class CuspDomain:
    k: int
    l: int
    kind: str = HARTOGS_FULL
    lower: float = 0.0
    upper: float = 0.0
    cut_m: int = 0
    cut_n: int = 1
    cut_r: float = 0.0

    def __post_init__(self):
        if self.k < 1 or self.l < 1:
            raise InputError("domain exponents k, l must be positive integers")
        if self.kind == STRIP_OMEGA2:
            if not 0 < self.lower < self.upper:
                raise InputError("strip bounds must satisfy 0 < lower < upper")
            if self.cut_n < 1 or self.cut_m < 0:
                raise InputError("cut slope must be -m/n with m >= 0, n >= 1")
        elif self.kind != HARTOGS_FULL:
            raise InputError(f"unknown domain kind {self.kind!r}")

    @classmethod
    def hartogs(cls, k: int, l: int) -> "CuspDomain":
        return cls(k=k, l=l, kind=HARTOGS_FULL)

    @classmethod
    def strip(
        cls, k: int, l: int, lower: float, upper: float, m: int, n: int, r: float
    ) -> "CuspDomain":
        return cls(
            k=k, l=l, kind=STRIP_OMEGA2, lower=lower, upper=upper,
            cut_m=m, cut_n=n, cut_r=r,
        )

    @property
    def recession_generators(self) -> tuple[tuple[int, int], ...]:
        if self.kind == HARTOGS_FULL:
            return ((-1, 0), (-self.l, -self.k))
        return ((-self.l, -self.k),)

    def contains(self, q1, q2) -> bool:
        """Strict membership; hartogs_full admits q1 = 0 when 0 < |q2| < 1."""
        m1 = _abs2(q1)
        m2 = _abs2(q2)
        if self.kind == HARTOGS_FULL:
            return m1**self.k < m2**self.l < 1
        if m1 == 0 or m2 == 0:
            return False
        ratio_num = float(m1) ** self.k
        ratio_den = float(m2) ** self.l
        if not self.lower**2 * ratio_den < ratio_num < self.upper**2 * ratio_den:
            return False
        x = 0.5 * math.log(float(m1))
        y = 0.5 * math.log(float(m2))
        return self.cut_n * y + self.cut_m * x <= self.cut_n * self.cut_r

    def monomial_bounded(self, a: int, b: int) -> bool:
        """Recession-cone test: a*gx + b*gy <= 0 for every generator."""
        return all(a * gx + b * gy <= 0 for gx, gy in self.recession_generators)


@dataclass(frozen=True)
class BoundednessCertificate:
    bounded: bool
    violations: tuple[tuple[int, int], ...]
    sup_upper: float


def poly_bounded(domain: CuspDomain, f: LaurentPolynomial) -> BoundednessCertificate:
    """Check every exponent of f against the recession cone.

    Violations are listed in ascending lexicographic order.  sup_upper is the
    coefficient sum when bounded (valid as a supremum bound on hartogs_full)
    and infinity otherwise.
    """
    violations = tuple(
        sorted((a, b) for a, b in f.exponents() if not domain.monomial_bounded(a, b))
    )
    bounded = not violations
    return BoundednessCertificate(
        bounded=bounded,
        violations=violations,
        sup_upper=f.one_norm() if bounded else math.inf,
    )


def log_image(q1, q2) -> tuple[float, float]:
    """(log|q1|, log|q2|); both coordinates must be nonzero."""
    m1 = _abs2(q1)
    m2 = _abs2(q2)
    if m1 == 0 or m2 == 0:
        raise EvaluationDomainError("log image undefined on the coordinate axes")
    return (0.5 * math.log(float(m1)), 0.5 * math.log(float(m2)))


# ---------------------------------------------------------------------------
# sampling


def _strip_y_ceiling(domain: CuspDomain) -> float:
    """Largest y at which the strip section below the cut is nonempty."""
    if domain.cut_m == 0:
        return domain.cut_r
    k, l, m, n, r = domain.k, domain.l, domain.cut_m, domain.cut_n, domain.cut_r
    return (k * n * r - m * math.log(domain.lower)) / (k * n + l * m)


def _draw_logs(domain, count, seed, cusp_bias, depth, phases):
    """Deterministic stream of log-coordinate samples, optionally with phases.

    Per point the stream order is: band choice, y, x, then two phases.  This
    makes sample sets for growing counts nested, so sampled suprema are
    monotone in the sample count for a fixed seed.
    """
    rng = random.Random(seed)
    if domain.kind == STRIP_OMEGA2:
        ceiling = _strip_y_ceiling(domain) - 1e-9
    else:
        ceiling = math.inf
    out = []
    for _ in range(count):
        deep = rng.random() < cusp_bias
        lo, hi = (-depth, DEEP_BAND_TOP) if deep else (DEEP_BAND_TOP, SHALLOW_BAND_TOP)
        hi = min(hi, ceiling)
        if hi <= lo:
            lo = hi - (DEEP_BAND_TOP - (-depth) if deep else SHALLOW_BAND_TOP - DEEP_BAND_TOP)
        y = rng.uniform(lo, hi)
        if domain.kind == HARTOGS_FULL:
            top = y * domain.l / domain.k
            x = top - 1e-9 - rng.random() * SECTION_WIDTH
        else:
            x_lo = (domain.l * y + math.log(domain.lower)) / domain.k
            x_hi = (domain.l * y + math.log(domain.upper)) / domain.k
            if domain.cut_m > 0:
                x_hi = min(x_hi, domain.cut_n * (domain.cut_r - y) / domain.cut_m)
            span = x_hi - x_lo
            x = x_lo + span * (1e-6 + 0.999998 * rng.random())
        if phases:
            t1 = rng.uniform(0.0, 2.0 * math.pi)
            t2 = rng.uniform(0.0, 2.0 * math.pi)
            out.append((x, y, t1, t2))
        else:
            out.append((x, y))
    return out


def sample(
    domain: CuspDomain,
    count: int,
    seed: int,
    cusp_bias: float = 0.5,
    depth: float = 30.0,
) -> list[tuple[complex, complex]]:
    """Deterministic domain points, biased toward the cusp.

    Each point independently falls in the deep band log|z2| in [-depth, -3]
    with probability cusp_bias, otherwise in [-3, -1e-3]; log|z1| is uniform
    in the (truncated) section and phases are uniform.  Every returned point
    satisfies domain.contains.
    """
    pts = []
    for x, y, t1, t2 in _draw_logs(domain, count, seed, cusp_bias, depth, True):
        pts.append(
            (
                math.exp(x) * complex(math.cos(t1), math.sin(t1)),
                math.exp(y) * complex(math.cos(t2), math.sin(t2)),
            )
        )
    return pts


def sample_log(
    domain: CuspDomain,
    count: int,
    seed: int,
    cusp_bias: float = 0.5,
    depth: float = 30.0,
) -> list[tuple[float, float]]:
    """Log coordinates only; same band logic as sample but a distinct stream."""
    return _draw_logs(domain, count, seed, cusp_bias, depth, False)


# ---------------------------------------------------------------------------
# logarithmic boundary data and the separating line


@dataclass(frozen=True)
class LogBoundary:
    """Polyline graph of a convex region's boundary with strict-convexity flags."""

    points: tuple[tuple[float, float], ...]
    strict: tuple[bool, ...]

    def __post_init__(self):
        pts = tuple((float(x), float(y)) for x, y in self.points)
        flags = tuple(bool(s) for s in self.strict)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "strict", flags)
        if len(pts) != len(flags):
            raise InputError("one strict flag per boundary point is required")
        if len(pts) < 2:
            raise InputError("boundary needs at least two points")
        scale = max(max(abs(x), abs(y)) for x, y in pts) or 1.0
        orientation = 0
        for i in range(len(pts) - 1):
            ax, ay = pts[i]
            bx, by = pts[i + 1]
            if (bx - ax) == 0 and (by - ay) == 0:
                raise InputError(f"repeated boundary point at index {i}")
        for i in range(len(pts) - 2):
            ax, ay = pts[i]
            bx, by = pts[i + 1]
            cx, cy = pts[i + 2]
            cross = (bx - ax) * (cy - by) - (by - ay) * (cx - bx)
            if abs(cross) <= 1e-12 * scale * scale:
                continue
            turn = 1 if cross > 0 else -1
            if orientation == 0:
                orientation = turn
            elif orientation != turn:
                raise InputError(
                    f"boundary polyline is not convex at vertex {i + 1}"
                )

    @classmethod
    def from_csv(cls, text: str) -> "LogBoundary":
        points = []
        flags = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 3:
                raise InputError(f"boundary CSV line {lineno}: expected x,y,strict")
            try:
                x, y = float(parts[0]), float(parts[1])
            except ValueError as exc:
                raise InputError(f"boundary CSV line {lineno}: bad number") from exc
            if parts[2].strip() not in ("0", "1"):
                raise InputError(f"boundary CSV line {lineno}: strict must be 0 or 1")
            points.append((x, y))
            flags.append(parts[2].strip() == "1")
        return cls(points=tuple(points), strict=tuple(flags))

    def to_csv(self) -> str:
        from .exprio import format_float

        return "\n".join(
            f"{format_float(x)},{format_float(y)},{1 if s else 0}"
            for (x, y), s in zip(self.points, self.strict)
        )


def log_image_csv(points) -> str:
    """CSV lines 'x,y' of the log images of the given domain points."""
    from .exprio import format_float

    lines = []
    for q1, q2 in points:
        x, y = log_image(q1, q2)
        lines.append(f"{format_float(x)},{format_float(y)}")
    return "\n".join(lines)


@dataclass(frozen=True)
class SplitLine:
    """Separating line y = (-m/n) x + r with safety margin delta."""

    m: int
    n: int
    r: float
    delta: float


def slope_candidates(max_sum: int):
    """Slopes -m/n, gcd(m,n)=1, enumerated by increasing m+n then m."""
    for total in range(1, max_sum + 1):
        for m in range(0, total):
            n = total - m
            if gcd(m, n) == 1:
                yield (m, n)


def _merge_intervals(intervals):
    merged = []
    for lo, hi in sorted(intervals):
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged


def split_line(
    boundary: LogBoundary,
    cusp_slope: Fraction,
    base_point: tuple[float, float],
    max_slope_sum: int = 64,
) -> SplitLine:
    """Find a line of small rational slope -m/n separating the cusp end.

    The ray from base_point with the cusp slope must hit the polyline exactly
    once, inside a strictly convex vertex window; that hit is the point the
    line must keep strictly above itself while the cusp end stays strictly
    below.  Offsets r are chosen so that every boundary point with offset in
    [r - delta, r] lies on strictly convex segments.  Candidates are tried in
    Stern-Brocot order and the first feasible slope wins.
    """
    pts = boundary.points
    flags = boundary.strict
    px, py = float(base_point[0]), float(base_point[1])
    slope = Fraction(cusp_slope)
    dx, dy = float(slope.denominator), float(slope.numerator)

    hits = []
    last = len(pts) - 2
    for i in range(len(pts) - 1):
        ax, ay = pts[i]
        bx, by = pts[i + 1]
        ex, ey = bx - ax, by - ay
        det = dx * ey - dy * ex
        if abs(det) < 1e-15 * (1 + abs(dx * ey) + abs(dy * ex)):
            continue
        qx, qy = ax - px, ay - py
        t = (qx * ey - qy * ex) / det
        s = (qx * dy - qy * dx) / det
        s_hi = 1.0 + 1e-12 if i == last else 1.0
        if t > 1e-12 and -1e-12 <= s < s_hi:
            hits.append((i, t, s))
    if not hits:
        raise InputError("ray from the base point misses the boundary")
    if len(hits) > 1:
        raise InputError("ray from the base point crosses the boundary more than once")
    seg, t_hit, _ = hits[0]
    ax_hit = px + t_hit * dx
    ay_hit = py + t_hit * dy
    if not (flags[seg] and flags[seg + 1]):
        raise InfeasibleSplitError(
            "ray crossing is not inside a strictly convex vertex window"
        )

    # Cusp end: the polyline endpoint deeper toward the third quadrant.
    end = pts[0] if pts[0][1] < pts[-1][1] else pts[-1]

    for m, n in slope_candidates(max_slope_sum):
        ratio = m / n

        def offset(point):
            return point[1] + ratio * point[0]

        rho_a = ay_hit + ratio * ax_hit
        rho_end = offset(end)
        if not rho_end < rho_a:
            continue
        bad = []
        for i in range(len(pts) - 1):
            if flags[i] and flags[i + 1]:
                continue
            oa, ob = offset(pts[i]), offset(pts[i + 1])
            bad.append((min(oa, ob), max(oa, ob)))
        gaps = []
        cursor = rho_end
        for lo, hi in _merge_intervals(bad):
            lo = max(lo, rho_end)
            hi = min(hi, rho_a)
            if hi <= cursor:
                continue
            if lo > cursor:
                gaps.append((cursor, min(lo, rho_a)))
            cursor = max(cursor, hi)
            if cursor >= rho_a:
                break
        if cursor < rho_a:
            gaps.append((cursor, rho_a))
        scale = 1e-12 * (1.0 + abs(rho_a) + abs(rho_end))
        gaps = [(lo, hi) for lo, hi in gaps if hi - lo > scale]
        if not gaps:
            continue
        lo, hi = max(gaps, key=lambda g: (g[1] - g[0], g[0]))
        width = hi - lo
        r = lo + 0.75 * width
        delta = 0.5 * width
        return SplitLine(m=m, n=n, r=r, delta=delta)

    raise InfeasibleSplitError(
        f"no separating slope with m + n <= {max_slope_sum} fits the boundary"
    )
