"""Exact evaluation of terminating hypergeometric series.

A series rFs(a_1..a_r; b_1..b_s | z) terminates when some numerator
parameter is a non-positive integer; everything here insists on that, so
every value is a finite exact sum.  The module also machine-checks the
product identity that turns a product of two terminating 2F1 values into a
single terminating 4F3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exactnum import RationalLike, as_rational, format_rational, pochhammer
from .reports import Mode, VerifyReport


def _is_nonpositive_int(q: Fraction) -> bool:
    return q.denominator == 1 and q <= 0


@dataclass(frozen=True)
class HyperSpec:
    """Parameters of a terminating hypergeometric series.

    At least one numerator parameter must be a non-positive integer (this
    bounds the sum), and no denominator parameter may hit a pole of the
    Pochhammer products before that bound.
    """

    numerator_params: tuple[Fraction, ...]
    denominator_params: tuple[Fraction, ...]
    argument: Fraction

    def __post_init__(self):
        object.__setattr__(
            self, "numerator_params", tuple(as_rational(a) for a in self.numerator_params)
        )
        object.__setattr__(
            self, "denominator_params", tuple(as_rational(b) for b in self.denominator_params)
        )
        object.__setattr__(self, "argument", as_rational(self.argument))
        stops = [-a for a in self.numerator_params if _is_nonpositive_int(a)]
        if not stops:
            raise ValueError("series does not terminate: no non-positive-integer numerator parameter")
        bound = int(min(stops))
        for b in self.denominator_params:
            if b.denominator == 1 and -(bound - 1) <= b <= 0:
                raise ValueError(
                    f"pole in denominator parameter {format_rational(b)} before termination at k={bound}"
                )
        object.__setattr__(self, "_termination_index", bound)

    @property
    def termination_index(self) -> int:
        """Largest k with a non-zero term; the sum runs to this inclusive."""
        return self._termination_index


def hyper_eval(spec: HyperSpec) -> Fraction:
    """Exact value of the terminating series sum_k prod(a_i)_k / prod(b_j)_k * z^k / k!."""
    total = Fraction(0)
    term = Fraction(1)
    z = spec.argument
    bound = spec.termination_index
    for k in range(bound + 1):
        total += term
        if k == bound:
            break
        # incremental update to the (k+1)-st term
        for a in spec.numerator_params:
            term *= a + k
        for b in spec.denominator_params:
            term /= b + k
        term *= Fraction(z, k + 1)
    return total


def hyper2f1(a: RationalLike, b: RationalLike, c: RationalLike, z: RationalLike) -> Fraction:
    """Terminating 2F1(a, b; c; z)."""
    return hyper_eval(HyperSpec((as_rational(a), as_rational(b)), (as_rational(c),), as_rational(z)))


def d_via_hyper(n: int, r: RationalLike, x: RationalLike) -> Fraction:
    """d_n(x) through the hypergeometric bridge (2r+1)_n / n! * 2F1(-n, r-x; 2r+1; 2).

    Requires r outside {-1/2, -1, -3/2, ...}, where the 2r+1 denominator
    parameter degenerates.
    """
    rv, xv = as_rational(r), as_rational(x)
    return pochhammer(2 * rv + 1, n) / factorial(n) * hyper2f1(-n, rv - xv, 2 * rv + 1, 2)


def d_via_hyper_companion(n: int, r: RationalLike, x: RationalLike) -> Fraction:
    """The mirror bridge (-1)^n (2r+1)_n / n! * 2F1(-n, r+1+x; 2r+1; 2)."""
    rv, xv = as_rational(r), as_rational(x)
    sign = -1 if n % 2 else 1
    return sign * pochhammer(2 * rv + 1, n) / factorial(n) * hyper2f1(-n, rv + 1 + xv, 2 * rv + 1, 2)


def clausen_product_sides(
    n: int, b: RationalLike, c: RationalLike, z: RationalLike
) -> tuple[Fraction, Fraction]:
    """Both sides of the terminating product identity

    2F1(-n, b; c; z) * 2F1(-n, c-b; c; z)
        = (1-z)^n * 4F3(-n, b, c+n, c-b; c, c/2, (c+1)/2; z^2 / (4(z-1)))

    evaluated exactly as finite sums.
    """
    bv, cv, zv = as_rational(b), as_rational(c), as_rational(z)
    if zv == 1:
        raise ValueError("z = 1 is outside the identity's domain")
    lhs = hyper2f1(-n, bv, cv, zv) * hyper2f1(-n, cv - bv, cv, zv)
    arg = zv * zv / (4 * (zv - 1))
    rhs = (1 - zv) ** n * hyper_eval(
        HyperSpec(
            (Fraction(-n), bv, cv + n, cv - bv),
            (cv, cv / 2, (cv + 1) / 2),
            arg,
        )
    )
    return lhs, rhs


def clausen_product_check(
    n: int, b: RationalLike, c: RationalLike, z: RationalLike
) -> VerifyReport:
    """Exact verdict for the product identity at one parameter triple."""
    lhs, rhs = clausen_product_sides(n, b, c, z)
    params = {
        "n": n,
        "b": format_rational(as_rational(b)),
        "c": format_rational(as_rational(c)),
        "z": format_rational(as_rational(z)),
    }
    counterexample = None
    if lhs != rhs:
        counterexample = {"params": params, "lhs": lhs, "rhs": rhs}
    return VerifyReport(
        identity_id="clausen-product",
        mode=Mode.POINT_GRID,
        range=f"n={n}, b={params['b']}, c={params['c']}, z={params['z']}",
        passed=lhs == rhs,
        counterexample=counterexample,
    )
