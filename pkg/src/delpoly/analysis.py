"""Exact-sign inequality checks and the Turán-type conjecture scanner.

Everything here compares exact rationals; no verdict ever passes or fails
by tolerance.  Grids are explicit lists of rationals (never float ranges)
and scans are deterministic: identical grids yield identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .dcore import EvalPoint, d_eval_sequence
from .exactnum import as_rational, binom_gen
from .reports import ScanReport


@dataclass(frozen=True)
class GridSpec:
    """Cartesian grid of rational parameter/argument values, with a depth."""

    r_values: tuple[Fraction, ...]
    x_values: tuple[Fraction, ...]
    n_max: int

    def __post_init__(self):
        object.__setattr__(self, "r_values", tuple(as_rational(v) for v in self.r_values))
        object.__setattr__(self, "x_values", tuple(as_rational(v) for v in self.x_values))
        if not self.r_values or not self.x_values:
            raise ValueError("grid value lists must be non-empty")
        if self.n_max < 0:
            raise ValueError("n_max must be a natural number")

    def points(self):
        """Grid points in canonical (r-major, x-minor) order."""
        for r in self.r_values:
            for x in self.x_values:
                yield EvalPoint(r, x)

    def as_dict(self) -> dict:
        return {
            "r_values": list(self.r_values),
            "x_values": list(self.x_values),
            "n_max": self.n_max,
        }


def default_inequality_grid() -> GridSpec:
    """Default grid for the product-lower-bound and positivity checks:
    r on both sides of -1/2's boundary r > -1/2, x spanning both sides of -1/2."""
    return GridSpec(
        r_values=(Fraction(-1, 4), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)),
        x_values=(
            Fraction(-3),
            Fraction(-2),
            Fraction(-1),
            Fraction(-3, 4),
            Fraction(-5, 8),
            Fraction(-3, 8),
            Fraction(-1, 4),
            Fraction(0),
            Fraction(1, 2),
            Fraction(1),
            Fraction(2),
            Fraction(3),
        ),
        n_max=40,
    )


def default_conjecture_grid() -> GridSpec:
    """The conjecture's stated region: r in [0, 4] step 1/4, x in [-1, 0] step 1/8."""
    return GridSpec(
        r_values=tuple(Fraction(i, 4) for i in range(17)),
        x_values=tuple(Fraction(-8 + i, 8) for i in range(9)),
        n_max=40,
    )


def check_product_lower_bound(grid: GridSpec) -> ScanReport:
    """d_n d_{n-1} / (1+2x) >= (binom(2r+n-1, n-1) + d_{n-1}^2) / n > 0.

    Checked for n >= 2 at grid points with r > -1/2 and x != -1/2; other
    points are recorded as skipped.  Points where the first inequality
    degenerates to equality go to zero_hits.
    """
    violations = []
    zero_hits = []
    skipped = []
    for point in grid.points():
        if point.r <= Fraction(-1, 2):
            skipped.append({"r": point.r, "x": point.x, "reason": "requires r > -1/2"})
            continue
        if point.x == Fraction(-1, 2):
            skipped.append({"r": point.r, "x": point.x, "reason": "requires x != -1/2"})
            continue
        seq = d_eval_sequence(grid.n_max, point)
        for n in range(2, grid.n_max + 1):
            lhs = seq[n] * seq[n - 1] / (1 + 2 * point.x)
            rhs = (binom_gen(2 * point.r + n - 1, n - 1) + seq[n - 1] ** 2) / n
            if rhs <= 0:
                violations.append((n, point.r, point.x, rhs))
            elif lhs < rhs:
                violations.append((n, point.r, point.x, lhs - rhs))
            elif lhs == rhs:
                zero_hits.append((n, point.r, point.x))
    return ScanReport(
        claim_id="product-lower-bound",
        grid=grid.as_dict(),
        violations=tuple(violations),
        zero_hits=tuple(zero_hits),
        skipped=tuple(skipped),
    )


def check_positivity(grid: GridSpec) -> ScanReport:
    """Sign claims on either side of x = -1/2, for r > -1/2.

    For x < -1/2: (-1)^n d_n > 0 for all n.  For x > -1/2 and n >= 2:
    d_n > (2x+1)^n / n! > 0.  Strict-inequality boundary hits are recorded
    separately from violations.
    """
    violations = []
    zero_hits = []
    skipped = []
    for point in grid.points():
        if point.r <= Fraction(-1, 2):
            skipped.append({"r": point.r, "x": point.x, "reason": "requires r > -1/2"})
            continue
        if point.x == Fraction(-1, 2):
            skipped.append({"r": point.r, "x": point.x, "reason": "claims apply only off x = -1/2"})
            continue
        seq = d_eval_sequence(grid.n_max, point)
        if point.x < Fraction(-1, 2):
            for n in range(grid.n_max + 1):
                value = -seq[n] if n % 2 else seq[n]
                if value < 0:
                    violations.append((n, point.r, point.x, value))
                elif value == 0:
                    zero_hits.append((n, point.r, point.x))
        else:
            for n in range(2, grid.n_max + 1):
                bound = (1 + 2 * point.x) ** n / Fraction(factorial(n))
                margin = seq[n] - bound
                if margin < 0 or bound <= 0:
                    violations.append((n, point.r, point.x, margin))
                elif margin == 0:
                    zero_hits.append((n, point.r, point.x))
    return ScanReport(
        claim_id="positivity",
        grid=grid.as_dict(),
        violations=tuple(violations),
        zero_hits=tuple(zero_hits),
        skipped=tuple(skipped),
    )


def turan_value(n: int, at: EvalPoint) -> Fraction:
    """(-1)^n (d_n^2 - d_{n+1} d_{n-1}) at a point, exactly (n >= 1)."""
    if n < 1:
        raise ValueError("turan_value requires n >= 1")
    seq = d_eval_sequence(n + 1, at)
    value = seq[n] ** 2 - seq[n + 1] * seq[n - 1]
    return -value if n % 2 else value


def scan_conjecture(grid: GridSpec) -> ScanReport:
    """Scan the strict-positivity conjecture for the Turán-type expression.

    The claimed region is r >= 0, -1 <= x <= 0, n >= 1.  Exact zeros are
    reported as zero_hits, not violations: the strict inequality provably
    degenerates to equality at some boundary points, and this scanner
    records rather than resolves that.
    """
    violations = []
    zero_hits = []
    skipped = []
    for point in grid.points():
        if point.r < 0 or not (-1 <= point.x <= 0):
            skipped.append({"r": point.r, "x": point.x, "reason": "outside the conjectured region"})
            continue
        seq = d_eval_sequence(grid.n_max + 1, point)
        for n in range(1, grid.n_max + 1):
            value = seq[n] ** 2 - seq[n + 1] * seq[n - 1]
            if n % 2:
                value = -value
            if value < 0:
                violations.append((n, point.r, point.x, value))
            elif value == 0:
                zero_hits.append((n, point.r, point.x))
    return ScanReport(
        claim_id="turan-conjecture",
        grid=grid.as_dict(),
        violations=tuple(violations),
        zero_hits=tuple(zero_hits),
        skipped=tuple(skipped),
    )
