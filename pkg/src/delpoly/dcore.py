"""Construction and evaluation of the generalized Delannoy polynomials.

The central family d_n(x) (with parameter r) is built by five independent
routes -- the defining binomial sum, an alternative closed-form sum, the
three-term recurrence, a two-term recurrence coupling d_n(x) with d_n(-x),
and coefficient extraction from the generating function
(1+t)^(x-r) / (1-t)^(x+r+1).  Cross-route equality of the resulting exact
polynomials is the package's strongest self-check.

Also provided: a fast scalar evaluator, the classical Delannoy number DP
(the r=0, integer-x specialization), and exact Jacobi/Meixner evaluators
used by the connection-formula verifiers.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .bipoly import BiPoly, binom_poly
from .exactnum import RationalLike, as_rational, pochhammer

_X = BiPoly.x()
_R = BiPoly.r()


class Route(enum.Enum):
    """The five independent ways of constructing the polynomial family."""

    DIRECT = "direct"
    NEWFORM = "newform"
    THREE_TERM = "three-term"
    TWO_TERM = "two-term"
    SERIES = "series"


@dataclass(frozen=True)
class EvalPoint:
    """A rational parameter/argument pair (r, x)."""

    r: Fraction
    x: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", as_rational(self.r))
        object.__setattr__(self, "x", as_rational(self.x))

    def r_is_excluded_half_integer(self) -> bool:
        """True when r lies in {-1/2, -1, -3/2, ...}, i.e. 2r is a negative integer.

        Several connection and inversion formulas degenerate on that set;
        verifiers consult this single predicate instead of re-encoding it.
        """
        twice = 2 * self.r
        return twice.denominator == 1 and twice <= -1


@dataclass(frozen=True)
class DSequence:
    """Polynomials d_0 .. d_n produced by one construction route."""

    route: Route
    polys: tuple[BiPoly, ...]

    def __post_init__(self):
        if self.polys:
            if self.polys[0] != BiPoly.one():
                raise ValueError("sequence must start at d_0 = 1")
            if len(self.polys) > 1 and self.polys[1] != 1 + 2 * _X:
                raise ValueError("d_1 must equal 1 + 2x")

    @property
    def n_max(self) -> int:
        return len(self.polys) - 1


def d_direct(n: int) -> BiPoly:
    """d_n via the defining sum over binom(x+r+k, k) * binom(x-r, n-k)."""
    return _cached_prefix(Route.DIRECT, n)[n]


def d_newform(n: int) -> BiPoly:
    """d_n via the closed form sum over binom(n+2r, n-k) * binom(x-r, k) * 2^k."""
    return _cached_prefix(Route.NEWFORM, n)[n]


def d_threeterm(n_max: int) -> DSequence:
    """Sequence from the three-term recurrence
    (n+1) d_{n+1} = (1+2x) d_n + (n+2r) d_{n-1}."""
    return DSequence(Route.THREE_TERM, tuple(_cached_prefix(Route.THREE_TERM, n_max)[: n_max + 1]))


def d_twoterm(n_max: int) -> DSequence:
    """Sequence from the two-term recurrence
    (n+1) d_{n+1}(x) = (x+r+n+1) d_n(x) + (-1)^n (x-r) d_n(-x)."""
    return DSequence(Route.TWO_TERM, tuple(_cached_prefix(Route.TWO_TERM, n_max)[: n_max + 1]))


def d_series(n_max: int) -> DSequence:
    """Sequence from the t^n coefficients of (1+t)^(x-r) / (1-t)^(x+r+1)."""
    return DSequence(Route.SERIES, tuple(_cached_prefix(Route.SERIES, n_max)[: n_max + 1]))


def d_sequence(route: Route, n_max: int) -> DSequence:
    """Sequence d_0..d_n_max from the given route (memoized per route)."""
    return DSequence(route, tuple(_cached_prefix(route, n_max)[: n_max + 1]))


# One growing polynomial list per route; verifiers share prefixes heavily,
# so sequences are extended in place (under a lock) rather than rebuilt.
# _aux holds per-route working state: the mirror sequence d_n(-x) for the
# two-term route, and the two factor coefficient lists for the series route.
_cache: dict[Route, list[BiPoly]] = {}
_aux: dict[Route, list] = {}
_cache_lock = threading.Lock()


def clear_caches() -> None:
    """Drop all memoized sequences (used by timing-sensitive tests)."""
    with _cache_lock:
        _cache.clear()
        _aux.clear()


def _cached_prefix(route: Route, n_max: int) -> list[BiPoly]:
    with _cache_lock:
        polys = _cache.setdefault(route, [])
        while len(polys) <= n_max:
            _extend(route, polys)
        return polys


def _extend(route: Route, polys: list[BiPoly]) -> None:
    n = len(polys)
    if route is Route.DIRECT:
        total = BiPoly.zero()
        upper = BiPoly.one()
        uppers = [upper]
        for j in range(1, n + 1):
            upper = upper * (_X - _R - (j - 1)) / j
            uppers.append(upper)
        for k in range(n + 1):
            total = total + binom_poly(_X + _R + k, k) * uppers[n - k]
        polys.append(total)
    elif route is Route.NEWFORM:
        total = BiPoly.zero()
        lower = BiPoly.one()
        for k in range(n + 1):
            total = total + binom_poly(n + 2 * _R, n - k) * lower
            lower = lower * (_X - _R - k) * Fraction(2, k + 1)
        polys.append(total)
    elif route is Route.THREE_TERM:
        if n == 0:
            polys.append(BiPoly.one())
        elif n == 1:
            polys.append(1 + 2 * _X)
        else:
            m = n - 1
            polys.append(((1 + 2 * _X) * polys[m] + (m + 2 * _R) * polys[m - 1]) / n)
    elif route is Route.TWO_TERM:
        # d_n(x) and its mirror d_n(-x) advance together through the
        # recurrence (the mirror obeys the x -> -x image of it), so no
        # substitution happens inside the loop.
        mirror = _aux.setdefault(route, [])
        if n == 0:
            polys.append(BiPoly.one())
            mirror.append(BiPoly.one())
        else:
            m = n - 1
            sign = 1 if m % 2 == 0 else -1
            plain_next = ((_X + _R + n) * polys[m] + sign * (_X - _R) * mirror[m]) / n
            mirror_next = ((-_X + _R + n) * mirror[m] + sign * (-_X - _R) * polys[m]) / n
            polys.append(plain_next)
            mirror.append(mirror_next)
    elif route is Route.SERIES:
        # The factor coefficients binom_poly(E, k) * sign^k do not depend on
        # the truncation order, so both factors and the Cauchy product all
        # extend one coefficient at a time.
        factors = _aux.setdefault(route, [[BiPoly.one()], [BiPoly.one()]])
        left, right = factors
        while len(left) <= n:
            k = len(left) - 1
            left.append(left[k] * (_X - _R - k) / (k + 1))
            right.append(right[k] * (-(_X + _R + 1) - k) * Fraction(-1, k + 1))
        coeff = BiPoly.zero()
        for k in range(n + 1):
            coeff = coeff + left[k] * right[n - k]
        polys.append(coeff)
    else:  # pragma: no cover - exhaustive enum
        raise AssertionError(route)


def poly_eval(p: BiPoly, at: EvalPoint) -> Fraction:
    """Exact value of a polynomial at an evaluation point."""
    return p.eval(at.r, at.x)


def d_eval(n: int, at: EvalPoint) -> Fraction:
    """Exact scalar d_n(x) at rational (r, x), via the three-term recurrence.

    No symbolic algebra is involved, so this scales to n in the thousands.
    """
    return d_eval_sequence(n, at)[n]


def d_eval_sequence(n_max: int, at: EvalPoint) -> list[Fraction]:
    """Exact scalar values d_0 .. d_n_max at one point."""
    if n_max < 0:
        raise ValueError("n_max must be a natural number")
    out = [Fraction(1)]
    if n_max >= 1:
        out.append(1 + 2 * at.x)
    for n in range(1, n_max):
        out.append(((1 + 2 * at.x) * out[n] + (n + 2 * at.r) * out[n - 1]) / (n + 1))
    return out


def delannoy_dp(n: int, m: int) -> int:
    """Delannoy number D(n, m) by dynamic programming.

    Counts lattice paths from (0,0) to (m,n) with east, north, and diagonal
    unit steps; equals d_n(m) at r = 0 for integer m.
    """
    if n < 0 or m < 0:
        raise ValueError("indices must be natural numbers")
    row = [1] * (m + 1)
    for _ in range(n):
        new = [1] * (m + 1)
        for j in range(1, m + 1):
            new[j] = new[j - 1] + row[j] + row[j - 1]
        row = new
    return row[m]


def jacobi_eval(n: int, alpha: BiPoly, beta: BiPoly, point: RationalLike) -> BiPoly:
    """Jacobi polynomial P_n^(alpha, beta) at a rational point.

    alpha and beta may be affine in x and r (that is how the connection
    formulas use them), so the result is again a BiPoly.
    """
    if not (alpha.is_affine and beta.is_affine):
        raise ValueError("jacobi_eval requires affine alpha and beta")
    t = as_rational(point)
    total = BiPoly.zero()
    for k in range(n + 1):
        total = total + (
            binom_poly(n + alpha, k)
            * binom_poly(n + beta, n - k)
            * ((t + 1) ** k * (t - 1) ** (n - k))
        )
    return total / Fraction(2**n)


def meixner_eval(n: int, x: RationalLike, b: RationalLike, c: RationalLike) -> Fraction:
    """Meixner polynomial M_n(x; b, c), evaluated exactly.

    Defined by sum_k (-n)_k (-x)_k / ((b)_k k!) * (1 - 1/c)^k; requires
    c != 0 and (b)_k != 0 for k <= n.
    """
    xv, bv, cv = as_rational(x), as_rational(b), as_rational(c)
    if cv == 0:
        raise ValueError("meixner_eval requires c != 0")
    if bv.denominator == 1 and -(n - 1) <= bv <= 0:
        raise ValueError(f"pole in (b)_k for b = {bv} with n = {n}")
    z = 1 - 1 / cv
    total = Fraction(0)
    for k in range(n + 1):
        total += (
            pochhammer(-n, k)
            * pochhammer(-xv, k)
            / (pochhammer(bv, k) * factorial(k))
            * z**k
        )
    return total
