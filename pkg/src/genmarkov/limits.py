"""Growth limits: periodic continued fractions, family ratios, cluster ratios.

The ratio of consecutive family members converges geometrically to a
quadratic surd; the surds are carried exactly as (A + B*sqrt(D)) with
rational A, B and squarefree D, while the empirical convergence tables use
double precision (errors at q = 40 sit far below every stated tolerance).

The positive-variable specializations chi_limit / L_truncation evaluate the
closed-form limit of weighted matching ratios and its finite continued
fraction of Laurent values; truncations must approach the closed form
monotonically from alternating sides.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .contfrac import evaluate
from .markov import family_recurrence

RATIO_HAT = "ratio_hat"
RATIO_SHIFT = "ratio_shift"

UNPRIMED = "unprimed"
PRIMED = "primed"


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = s*s * d with d squarefree; returns (s, d)."""
    if n < 0:
        raise ValueError("negative radicand")
    s, d = 1, 1
    f = 2
    m = n
    while f * f <= m:
        exp = 0
        while m % f == 0:
            m //= f
            exp += 1
        if exp:
            s *= f ** (exp // 2)
            if exp % 2:
                d *= f
        f += 1 if f == 2 else 2
    d *= m
    return s, d


@dataclass(frozen=True)
class QuadraticSurd:
    """Exact a + b*sqrt(d) with rational a, b and squarefree integer d."""

    a: Fraction
    b: Fraction
    d: int

    @classmethod
    def make(cls, a: Fraction, b: Fraction, d: int) -> "QuadraticSurd":
        if d < 0:
            raise ValueError("complex surds not supported")
        s, d0 = _squarefree_split(d)
        b = b * s
        if d0 <= 1:
            return cls(a + b * (1 if d0 == 1 else 0), Fraction(0), 0)
        if b == 0:
            return cls(a, Fraction(0), 0)
        return cls(a, b, d0)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.d})"

    def plus_rational(self, r: Fraction | int) -> "QuadraticSurd":
        return QuadraticSurd(self.a + r, self.b, self.d)

    def times_rational(self, r: Fraction | int) -> "QuadraticSurd":
        if r == 0:
            return QuadraticSurd(Fraction(0), Fraction(0), 0)
        return QuadraticSurd(self.a * r, self.b * r, self.d)

    def reciprocal(self) -> "QuadraticSurd":
        denom = self.a * self.a - self.b * self.b * self.d
        if denom == 0:
            raise ZeroDivisionError("surd has zero norm")
        return QuadraticSurd(self.a / denom, -self.b / denom, self.d)


def _quadratic_roots(a: Fraction, b: Fraction, c: Fraction) -> tuple[QuadraticSurd, QuadraticSurd]:
    """Roots of a x^2 + b x + c = 0 as exact surds (a != 0, real roots)."""
    disc = b * b - 4 * a * c
    if disc < 0:
        raise ValueError("negative discriminant")
    radicand = disc.numerator * disc.denominator
    s, d = _squarefree_split(radicand)
    sqrt_coef = Fraction(s, disc.denominator)  # sqrt(disc) = sqrt_coef * sqrt(d)
    lo = QuadraticSurd.make(-b / (2 * a), -sqrt_coef / (2 * a), d)
    hi = QuadraticSurd.make(-b / (2 * a), sqrt_coef / (2 * a), d)
    return lo, hi


def _periodic_entries(z1: float, z2: float, r: float, n: int) -> list[float]:
    out = []
    power = 1.0
    for j in range(n):
        if j % 2 == 0:
            out.append(power * z1)
        else:
            out.append(z2 / power)
            power *= r
    return out


def _eval_backward(entries: Sequence[float]) -> float:
    val = entries[-1]
    for x in reversed(entries[:-1]):
        val = x + 1.0 / val
    return val


@dataclass(frozen=True)
class PeriodicLimit:
    roots: tuple[QuadraticSurd, QuadraticSurd] | tuple[float, float]
    selected: QuadraticSurd | float | None
    converged: bool
    iterate: float | None  # deep truncation used for root selection


def periodic_limit(z1, z2, r) -> PeriodicLimit:
    """Limit of [z1, z2, r*z1, z2/r, r^2*z1, ...] when it converges.

    The limit satisfies r*z2*L^2 + (1 - r*(1 + z1*z2))*L - z1 = 0; both roots
    are reported and the one matched by deep truncation is selected.  When
    truncations do not settle, no root is selected and converged is False.
    """
    if 0 in (z1, z2, r):
        raise ValueError("z1, z2, r must be nonzero")
    exact = all(isinstance(v, (int, Fraction)) for v in (z1, z2, r))
    qa = Fraction(r) * Fraction(z2) if exact else r * z2
    qb = (1 - Fraction(r) * (1 + Fraction(z1) * Fraction(z2))) if exact else 1 - r * (1 + z1 * z2)
    qc = -Fraction(z1) if exact else -z1
    if exact:
        try:
            roots = _quadratic_roots(qa, qb, qc)
        except ValueError:
            return PeriodicLimit((float("nan"), float("nan")), None, False, None)
    else:
        disc = qb * qb - 4 * qa * qc
        if disc < 0:
            return PeriodicLimit((float("nan"), float("nan")), None, False, None)
        roots = (
            (-qb - math.sqrt(disc)) / (2 * qa),
            (-qb + math.sqrt(disc)) / (2 * qa),
        )

    z1f, z2f, rf = float(z1), float(z2), float(r)
    try:
        mid = _eval_backward(_periodic_entries(z1f, z2f, rf, 41))
        deep = _eval_backward(_periodic_entries(z1f, z2f, rf, 81))
    except (ZeroDivisionError, OverflowError):
        return PeriodicLimit(roots, None, False, None)
    scale = max(1.0, abs(deep))
    if not math.isfinite(deep) or abs(deep - mid) > 1e-8 * scale:
        return PeriodicLimit(roots, None, False, deep if math.isfinite(deep) else None)
    dists = [abs(float(root) - deep) for root in roots]
    selected = roots[0] if dists[0] <= dists[1] else roots[1]
    return PeriodicLimit(roots, selected, True, deep)


# Exact closed forms for the two boundary families and their ordinary analogues.
FAMILY_SURDS = {
    "one_over_q": QuadraticSurd(Fraction(5, 2), Fraction(1, 2), 21),
    "q_minus_1_over_q": QuadraticSurd(Fraction(17, 2), Fraction(1, 2), 285),
}
ORDINARY_SURDS = {
    "one_over_q": QuadraticSurd(Fraction(3, 2), Fraction(1, 2), 5),
    "q_minus_1_over_q": QuadraticSurd(Fraction(3), Fraction(2), 2),
}
ORDINARY_SEEDS = {
    # (first two values, multiplier); no additive constant in the ordinary case
    "one_over_q": ((1, 2), 3),
    "q_minus_1_over_q": ((1, 5), 6),
}


def _ordinary_family(family: str, n: int) -> list[int]:
    (s0, s1), mult = ORDINARY_SEEDS[family]
    out = [s0, s1]
    while len(out) < n:
        out.append(mult * out[-1] - out[-2])
    return out


@dataclass(frozen=True)
class FamilyLimitReport:
    family: str
    surd: QuadraticSurd
    ordinary_surd: QuadraticSurd
    rows: tuple[tuple[int, float, float], ...]  # (q, ratio, |ratio - limit|)
    ordinary_rows: tuple[tuple[int, float, float], ...]
    identity_ok: bool | None  # exact product identity, odd q (boundary family only)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["q", "ratio", "error"])
        for q, ratio, err in self.rows:
            writer.writerow([q, f"{ratio:.15g}", f"{err:.6e}"])
        return buf.getvalue()

    def summary(self) -> str:
        lines = [
            f"family {self.family}: limit = {self.surd} = {float(self.surd):.11f}",
            f"ordinary analogue: {self.ordinary_surd} = {float(self.ordinary_surd):.11f}",
            f"final error at q={self.rows[-1][0]}: {self.rows[-1][2]:.3e}",
        ]
        if self.identity_ok is not None:
            lines.append(
                "exact product identity (odd q): "
                + ("verified" if self.identity_ok else "FAILED")
            )
        return "\n".join(lines) + "\n"


def family_limit(family: str, max_q: int = 60) -> FamilyLimitReport:
    """Exact limit surd plus an empirical consecutive-ratio error table."""
    if family not in FAMILY_SURDS:
        raise ValueError(f"unknown family {family!r}; expected one_over_q or q_minus_1_over_q")
    surd = FAMILY_SURDS[family]
    target = float(surd)
    values = family_recurrence(family, max_q + 1)
    ord_values = _ordinary_family(family, max_q + 1)
    # Term index i holds the member at q = i for 1/q and at q = i + 1 for (q-1)/q.
    offset = 0 if family == "one_over_q" else 1
    first_q = 2 if family == "one_over_q" else 3
    rows = []
    ord_rows = []
    ord_surd = ORDINARY_SURDS[family]
    ord_target = float(ord_surd)
    for q in range(first_q, max_q + 1):
        ratio = values[q - offset] / values[q - offset - 1]
        rows.append((q, ratio, abs(ratio - target)))
        oratio = ord_values[q - offset] / ord_values[q - offset - 1]
        ord_rows.append((q, oratio, abs(oratio - ord_target)))

    identity_ok = None
    if family == "q_minus_1_over_q":
        identity_ok = True
        for q in range(5, 26, 2):
            # member ratio at odd q equals 3 * [5, (3,5)^(q-5)/2, 3,5,4,3, (5,3)^(q-3)/2] + 1
            entries = (5,) + (3, 5) * ((q - 5) // 2) + (3, 5, 4, 3) + (5, 3) * ((q - 3) // 2)
            num, den = evaluate(entries)
            lhs = Fraction(values[q - 1], values[q - 2])
            if lhs != 3 * Fraction(num, den) + 1:
                identity_ok = False
    return FamilyLimitReport(family, surd, ord_surd, tuple(rows), tuple(ord_rows), identity_ok)


@dataclass(frozen=True)
class LaurentPoint:
    x1: float
    x2: float
    x3: float

    def __post_init__(self) -> None:
        if min(self.x1, self.x2, self.x3) <= 0:
            raise ValueError("all coordinates must be strictly positive")

    @property
    def delta(self) -> float:
        return self.x1 + self.x2 + self.x3


def chi_limit(point: LaurentPoint, part: str) -> float:
    """Closed-form limits of weighted matching ratios at a positive point."""
    x1, x2, x3 = point.x1, point.x2, point.x3
    d = point.delta
    if part == RATIO_HAT:
        disc = (x2 * x2 - x1 * x1 - d * x3) ** 2 + 4 * x2 * x2 * x3 * d
        return (x1 * x1 + d * x3 - x2 * x2 + math.sqrt(disc)) / (2 * d * x2)
    if part == RATIO_SHIFT:
        disc = (x1 * x1 - x2 * x2 - d * x3) ** 2 + 4 * x1 * x1 * x3 * d
        return (d * x3 + x1 * x1 + 2 * x1 * x2 - x2 * x2 + math.sqrt(disc)) / (2 * x1 * x2)
    raise ValueError(f"unknown part {part!r}")


def laurent_values(point: LaurentPoint, n: int, variant: str) -> list[float]:
    """First n Laurent continued-fraction values at the point."""
    if n < 1:
        raise ValueError("n must be positive")
    x1, x2, x3 = point.x1, point.x2, point.x3
    d = point.delta
    up = x1 * x1 / (x2 * x2)
    down = x2 * x2 / (x1 * x1)
    vals: list[float] = []
    if variant == UNPRIMED:
        for i in range(n):
            if i == 0:
                vals.append(x3 / x2)
            elif i == 1:
                vals.append(d * x2 / (x1 * x1))
            else:
                vals.append(vals[i - 2] * (up if i % 2 == 0 else down))
    elif variant == PRIMED:
        for i in range(n):
            if i == 0:
                vals.append((x3 * d + x1 * x2) / (x1 * x2))
            elif i == 1:
                vals.append(x2 / x1)
            elif i == 2:
                vals.append(d * x1 * x3 / (x2 ** 3))
            else:
                vals.append(vals[i - 2] * (down if i % 2 == 1 else up))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return vals


def L_truncation(point: LaurentPoint, n: int, variant: str) -> float:
    """Finite continued fraction of the first n Laurent values."""
    if n < 2:
        raise ValueError("truncation depth must be at least 2")
    return _eval_backward(laurent_values(point, n, variant))
