"""One verifier per identity family, each producing an exact verdict.

Every verifier establishes its identity in one of three proof-grade modes:

* SymbolicPoly -- both sides constructed as BiPoly and compared exactly;
* ClearedDenominator -- parameter-dependent denominators are first absorbed
  into polynomial cofactors (the quotients are exact polynomials), then the
  cleared sides are compared as BiPoly;
* InterpolationGrid -- per instance the identity is symbolic in x and
  checked at more parameter values than a computed degree bound, which
  makes the grid verdict a proof rather than a sample.

Each symbolic verifier can also run in PointGrid mode over explicit
rational points: the sides are then rebuilt in plain scalar arithmetic
(generalized binomials on Fractions, polynomial values from the scalar
recurrence or the scalar defining sum), giving an independent cross-check
of the polynomial machinery.

For fault-sensitivity testing every verifier accepts ``fault_index``; the
reference side of that instance is perturbed by +1, which must flip the
verdict and produce a concrete counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Iterator

from .bipoly import BiPoly, binom_poly
from .dcore import (
    EvalPoint,
    Route,
    d_eval,
    d_eval_sequence,
    d_sequence,
    jacobi_eval,
    meixner_eval,
)
from .exactnum import as_rational, binom_gen, binom_int, pochhammer
from .hyper import clausen_product_sides, d_via_hyper, d_via_hyper_companion
from .reports import Mode, VerifyReport

_X = BiPoly.x()
_R = BiPoly.r()


# ---------------------------------------------------------------------------
# Algebra bundles: the same identity generators run over either of these.
# ---------------------------------------------------------------------------


class _SymbolicAlg:
    """Identity sides as exact polynomials in x and r."""

    def __init__(self, polys: tuple[BiPoly, ...]):
        self._polys = polys
        self.r = _R
        self.x = _X

    def binom(self, top, k: int):
        if isinstance(top, (int, Fraction)):
            top = BiPoly.const(top)
        return binom_poly(top, k)

    def d(self, n: int):
        return BiPoly.zero() if n < 0 else self._polys[n]

    def d_subst(self, n: int, r_shift=0, x_shift=0, x_negate: bool = False):
        p = self.d(n)
        r_shift, x_shift = as_rational(r_shift), as_rational(x_shift)
        if r_shift:
            p = p.subst_affine_r(r_shift)
        if x_negate and not x_shift:
            return p.subst_neg_x()
        if x_negate or x_shift:
            p = p.subst_affine_x(x_shift, negate=x_negate)
        return p

    def d_at_x(self, n: int, x_value):
        return self.d(n).subst_x_value(x_value)

    def jacobi(self, n: int, alpha, beta, point):
        return jacobi_eval(n, alpha, beta, point)


class _PointAlg:
    """Identity sides as plain rationals at one evaluation point.

    ``scalar_route`` picks how d_n values are produced: "recurrence" runs
    the scalar three-term recurrence, "direct-sum" evaluates the defining
    binomial sum (used when the identity under test *is* a recurrence, so
    the check stays non-vacuous).
    """

    def __init__(self, point: EvalPoint, n_high: int, scalar_route: str = "recurrence"):
        self.point = point
        self.r = point.r
        self.x = point.x
        self._scalar_route = scalar_route
        self._seq = [self._value(n, point) for n in range(n_high + 1)]

    def _value(self, n: int, at: EvalPoint) -> Fraction:
        if self._scalar_route == "direct-sum":
            return _d_direct_scalar(n, at)
        return d_eval(n, at)

    def binom(self, top, k: int):
        return binom_gen(top, k)

    def d(self, n: int):
        return Fraction(0) if n < 0 else self._seq[n]

    def d_subst(self, n: int, r_shift=0, x_shift=0, x_negate: bool = False):
        r_shift, x_shift = as_rational(r_shift), as_rational(x_shift)
        if not r_shift and not x_shift and not x_negate:
            return self.d(n)
        xv = -self.x if x_negate else self.x
        return self._value(n, EvalPoint(self.r + r_shift, xv + x_shift))

    def d_at_x(self, n: int, x_value):
        return self._value(n, EvalPoint(self.r, x_value))

    def jacobi(self, n: int, alpha, beta, point):
        t = as_rational(point)
        total = Fraction(0)
        for k in range(n + 1):
            total += (
                binom_gen(n + alpha, k)
                * binom_gen(n + beta, n - k)
                * (t + 1) ** k
                * (t - 1) ** (n - k)
            )
        return total / Fraction(2**n)


def _d_direct_scalar(n: int, at: EvalPoint) -> Fraction:
    """d_n at a point straight from the defining binomial sum."""
    return sum(
        (binom_gen(at.x + at.r + k, k) * binom_gen(at.x - at.r, n - k) for k in range(n + 1)),
        Fraction(0),
    )


# ---------------------------------------------------------------------------
# Deterministic rational points for PointGrid runs.
# ---------------------------------------------------------------------------


def deterministic_points(count: int) -> tuple[EvalPoint, ...]:
    """Fixed non-excluded rational (r, x) points.

    The r values have denominator 8 with odd numerator, so 2r is never an
    integer and no point lands in the degenerate half-integer set.
    """
    return tuple(
        EvalPoint(Fraction(2 * i + 1, 8) - 1, Fraction(3 * i - 50, 7))
        for i in range(count)
    )


# ---------------------------------------------------------------------------
# Identity instance generators.  Each yields (label, params, lhs, rhs);
# the sides are BiPoly or Fraction depending on the algebra passed in.
# ---------------------------------------------------------------------------


def _square_instances(alg, n_max: int) -> Iterator:
    # After absorbing the binom(2r+k, k) denominators, the k-th term picks
    # up the polynomial cofactor (k!/n!) * prod_{j=k+1..n} (2r+j).
    for n in range(n_max + 1):
        rhs = 0 * alg.r
        for k in range(n + 1):
            cof = Fraction(factorial(k), factorial(n))
            term = (
                alg.binom(alg.x - alg.r, k)
                * alg.binom(alg.x + alg.r + k, k)
                * alg.binom(n + 2 * alg.r + k, n - k)
                * Fraction(4) ** k
                * cof
            )
            for j in range(k + 1, n + 1):
                term = term * (2 * alg.r + j)
            rhs = rhs + term
        yield f"n={n}", {"n": n}, alg.d(n) * alg.d(n), rhs


def _linearization_instances(alg, m_max: int, n_max: int) -> Iterator:
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            rhs = 0 * alg.r
            for k in range(min(m, n) + 1):
                sign = -1 if k % 2 else 1
                rhs = rhs + (
                    binom_int(m + n - 2 * k, m - k)
                    * alg.binom(2 * alg.r + m + n - k, k)
                    * sign
                    * alg.d(m + n - 2 * k)
                )
            yield f"m={m},n={n}", {"m": m, "n": n}, alg.d(m) * alg.d(n), rhs


def _inversion_cofactor(alg, k: int, n: int):
    """binom(-2r-1, n) / binom(-2r-1, k) as an exact polynomial factor."""
    cof = Fraction(factorial(k), factorial(n)) + 0 * alg.r
    for j in range(k, n):
        cof = cof * (-2 * alg.r - 1 - j)
    return cof


def _inversion_instances(alg, n_max: int) -> Iterator:
    # The scaled alternative form, its binomial inversion, and the
    # even/odd-part splits, all multiplied through by binom(-2r-1, n).
    for n in range(n_max + 1):
        sign_n = -1 if n % 2 else 1
        scaled = 0 * alg.r
        for k in range(n + 1):
            sign_k = -1 if k % 2 else 1
            scaled = scaled + (
                binom_int(n, k)
                * sign_k
                * alg.binom(alg.x - alg.r, k)
                * Fraction(2) ** k
                * _inversion_cofactor(alg, k, n)
            )
        yield f"scaled-form n={n}", {"n": n}, alg.d(n), sign_n * scaled

        inv = 0 * alg.r
        even = 0 * alg.r
        odd = 0 * alg.r
        for k in range(n + 1):
            term = binom_int(n, k) * alg.d(k) * _inversion_cofactor(alg, k, n)
            inv = inv + term
            if k % 2 == 0:
                even = even + term
            else:
                odd = odd + term
        plus = alg.binom(alg.x - alg.r, n) + alg.binom(-1 - alg.x - alg.r, n)
        minus = alg.binom(alg.x - alg.r, n) - alg.binom(-1 - alg.x - alg.r, n)
        yield f"inversion n={n}", {"n": n}, inv, Fraction(2) ** n * alg.binom(alg.x - alg.r, n)
        yield f"even-part n={n}", {"n": n}, even, plus * Fraction(2) ** (n - 1)
        yield f"odd-part n={n}", {"n": n}, odd, minus * Fraction(2) ** (n - 1)


def _jacobi_instances(alg, n_max: int) -> Iterator:
    for n in range(n_max + 1):
        d = alg.d(n)
        sign = -1 if n % 2 else 1
        yield (
            f"alpha=x-r-n at 3, n={n}",
            {"n": n},
            d,
            alg.jacobi(n, alg.x - alg.r - n, 2 * alg.r, Fraction(3)),
        )
        yield (
            f"swapped at -3, n={n}",
            {"n": n},
            d,
            sign * alg.jacobi(n, 2 * alg.r, alg.x - alg.r - n, Fraction(-3)),
        )
        yield (
            f"reflected at -3, n={n}",
            {"n": n},
            d,
            alg.jacobi(n, 2 * alg.r, -1 - alg.x - alg.r - n, Fraction(-3)),
        )


def _recurrence_instances(alg, n_max: int) -> Iterator:
    for n in range(n_max + 1):
        sign = -1 if n % 2 else 1
        mirror = alg.d_subst(n, x_negate=True)
        yield (
            f"three-term n={n}",
            {"n": n},
            (n + 1) * alg.d(n + 1),
            (1 + 2 * alg.x) * alg.d(n) + (n + 2 * alg.r) * alg.d(n - 1),
        )
        yield (
            f"two-term n={n}",
            {"n": n},
            (n + 1) * alg.d(n + 1),
            (alg.x + alg.r + n + 1) * alg.d(n) + sign * (alg.x - alg.r) * mirror,
        )
        yield (
            f"combined n={n}",
            {"n": n},
            (n + 2 * alg.r) * alg.d(n - 1),
            (n + alg.r - alg.x) * alg.d(n) + sign * (alg.x - alg.r) * mirror,
        )


def _special_value_instances(alg, n_max: int) -> Iterator:
    half = Fraction(1, 2)
    for n in range(n_max + 1):
        m = n // 2
        sign = -1 if n % 2 else 1
        yield (
            f"x=-1/2 n={n}",
            {"n": n, "x": "-1/2"},
            alg.d_at_x(n, -half),
            0 * alg.r if n % 2 else (-1 if m % 2 else 1) * alg.binom(-alg.r - half, m),
        )
        yield (
            f"x=0 n={n}",
            {"n": n, "x": "0"},
            alg.d_at_x(n, 0),
            alg.binom(alg.r + m, m),
        )
        yield (
            f"x=-1 n={n}",
            {"n": n, "x": "-1"},
            alg.d_at_x(n, -1),
            sign * alg.binom(alg.r + m, m),
        )
        if n >= 1:
            if n % 2:
                h = (n - 1) // 2
                rhs = 2 * (-1 if h % 2 else 1) * alg.binom(-alg.r - Fraction(3, 2), h)
            else:
                h = n // 2 - 1
                rhs = (
                    (-1 if h % 2 else 1)
                    * alg.binom(-alg.r - Fraction(3, 2), h)
                    * (2 * n + 2 * alg.r + 1)
                    * Fraction(1, n)
                )
            yield f"x=1/2 n={n}", {"n": n, "x": "1/2"}, alg.d_at_x(n, half), rhs
        yield (
            f"x=1 cleared n={n}",
            {"n": n, "x": "1"},
            (alg.r + 1) * alg.d_at_x(n, 1),
            (2 * n + 1 + (2 - sign) * alg.r) * alg.binom(alg.r + m, m),
        )
        if n >= 1:
            m1 = (n + 1) // 2
            m2 = (n - 1) // 2
            lhs = 6 * m1 * (2 * alg.r + 3) * alg.d_at_x(n, Fraction(3, 2))
            rhs = (
                (n + 1) * (4 * n + 6 + (2 + sign) * (2 * alg.r - 1)) * (2 * alg.r + 3)
                - (2 * alg.r - 3) * (4 * n - 2 + (2 + sign) * (2 * alg.r + 1)) * 2 * m1
            ) * alg.binom(alg.r + half + m2, m2)
            yield f"x=3/2 cleared n={n}", {"n": n, "x": "3/2"}, lhs, rhs
        yield (
            f"x=2 cleared n={n}",
            {"n": n, "x": "2"},
            (alg.r + 1) * (alg.r + 2) * alg.d_at_x(n, 2),
            (
                (3 - 2 * sign) * alg.r * alg.r
                + (4 - sign) * (2 * n + 1) * alg.r
                + (4 * n * n + 4 * n + 2)
            )
            * alg.binom(alg.r + m, m),
        )


def _shift_instances(alg, n_max: int) -> Iterator:
    half = Fraction(1, 2)
    for n in range(n_max + 1):
        sign = -1 if n % 2 else 1
        mirror = alg.d_subst(n, x_negate=True)
        up = alg.d_subst(n - 1, r_shift=half, x_shift=-half) if n >= 1 else None
        down = alg.d_subst(n + 1, r_shift=-half, x_shift=-half)
        if n >= 1:
            yield (
                f"difference-shift n={n}",
                {"n": n},
                2 * up,
                alg.d(n) - sign * mirror,
            )
            yield (
                f"sum-shift n={n}",
                {"n": n},
                (n + 1) * down,
                (alg.x + alg.r) * alg.d(n) + (alg.x - alg.r) * sign * mirror,
            )
            yield (
                f"combined-shift n={n}",
                {"n": n},
                2 * (alg.x - alg.r) * up + (n + 1) * down,
                2 * alg.x * alg.d(n),
            )
        yield (
            f"reflection-swap n={n}",
            {"n": n},
            (alg.x - alg.r - 1) * alg.d_subst(n, x_shift=1, x_negate=True),
            (alg.x + alg.r) * sign * alg.d(n) - (2 * n + 2 * alg.r + 1) * mirror,
        )


def _weighted_square_sum_instances(alg, n_max: int) -> Iterator:
    for n in range(1, n_max + 1):
        total = 0 * alg.r
        for k in range(n):
            w = 1 + 0 * alg.r
            for j in range(k + 1, n + 1):
                w = w * (2 * alg.r + j) / j
            total = total + w * alg.d(k) * alg.d(k)
        yield (
            f"n={n}",
            {"n": n},
            (1 + 2 * alg.x) * total,
            (n + 2 * alg.r) * alg.d(n) * alg.d(n - 1),
        )


# ---------------------------------------------------------------------------
# Generic driver.
# ---------------------------------------------------------------------------


def _witness_point(diff: BiPoly) -> EvalPoint:
    """A rational point where a non-zero polynomial provably does not vanish."""
    for rv in range(1, diff.deg_r + 2):
        for xv in range(diff.deg_x + 1):
            if diff.eval(rv, xv) != 0:
                return EvalPoint(Fraction(rv), Fraction(xv))
    raise AssertionError("non-zero polynomial vanished on its witness grid")


def _run_identity(
    identity_id: str,
    mode: Mode,
    range_desc: str,
    instances: Callable[[object], Iterator],
    n_high: int,
    *,
    route: Route = Route.THREE_TERM,
    scalar_route: str = "recurrence",
    points: Iterable[EvalPoint] | None = None,
    fault_index: int | None = None,
    skipped: tuple = (),
) -> VerifyReport:
    if points is None:
        alg = _SymbolicAlg(d_sequence(route, n_high).polys)
        counterexample = None
        for idx, (label, params, lhs, rhs) in enumerate(instances(alg)):
            if idx == fault_index:
                rhs = rhs + 1
            if lhs != rhs:
                at = _witness_point(lhs - rhs)
                counterexample = {
                    "instance": label,
                    "params": {**params, "r": at.r, "x": at.x},
                    "lhs": lhs.eval(at.r, at.x),
                    "rhs": rhs.eval(at.r, at.x),
                }
                break
        return VerifyReport(
            identity_id=identity_id,
            mode=mode,
            range=range_desc,
            passed=counterexample is None,
            counterexample=counterexample,
            skipped=skipped,
        )

    counterexample = None
    skipped_points = list(skipped)
    used = 0
    for point in points:
        if point.r_is_excluded_half_integer():
            skipped_points.append(
                {"r": point.r, "x": point.x, "reason": "r in excluded half-integer set"}
            )
            continue
        used += 1
        alg = _PointAlg(point, n_high, scalar_route=scalar_route)
        for idx, (label, params, lhs, rhs) in enumerate(instances(alg)):
            if idx == fault_index:
                rhs = rhs + 1
            if lhs != rhs:
                counterexample = {
                    "instance": label,
                    "params": {**params, "r": point.r, "x": point.x},
                    "lhs": lhs,
                    "rhs": rhs,
                }
                break
        if counterexample:
            break
    return VerifyReport(
        identity_id=identity_id,
        mode=Mode.POINT_GRID,
        range=f"{range_desc} at {used} points",
        passed=counterexample is None,
        counterexample=counterexample,
        skipped=tuple(skipped_points),
    )


_EXCLUDED_HALF_INT = {
    "r": "{-1/2, -1, -3/2, ...}",
    "reason": "statement excludes the half-integer set; cleared form holds identically",
}


def verify_square(
    n_max: int,
    *,
    points: Iterable[EvalPoint] | None = None,
    fault_index: int | None = None,
) -> VerifyReport:
    """Closed form for d_n(x)^2 as a single binomial sum."""
    return _run_identity(
        "square",
        Mode.CLEARED_DENOMINATOR,
        f"n<={n_max}",
        lambda alg: _square_instances(alg, n_max),
        n_max,
        points=points,
        fault_index=fault_index,
        skipped=(_EXCLUDED_HALF_INT,),
    )


def verify_linearization(
    m_max: int,
    n_max: int,
    *,
    points: Iterable[EvalPoint] | None = None,
    fault_index: int | None = None,
) -> VerifyReport:
    """Product d_m * d_n as a signed combination of single d_k."""
    return _run_identity(
        "linearization",
        Mode.SYMBOLIC_POLY,
        f"m<={m_max}, n<={n_max}",
        lambda alg: _linearization_instances(alg, m_max, n_max),
        m_max + n_max,
        points=points,
        fault_index=fault_index,
    )


def verify_newform_consequences(
    n_max: int,
    *,
    points: Iterable[EvalPoint] | None = None,
    fault_index: int | None = None,
) -> VerifyReport:
    """Binomial-inversion consequences of the alternative closed form."""
    return _run_identity(
        "inversion",
        Mode.CLEARED_DENOMINATOR,
        f"n<={n_max}",
        lambda alg: _inversion_instances(alg, n_max),
        n_max,
        points=points,
        fault_index=fault_index,
        skipped=(_EXCLUDED_HALF_INT,),
    )


def verify_jacobi(
    n_max: int,
    *,
    points: Iterable[EvalPoint] | None = None,
    fault_index: int | None = None,
) -> VerifyReport:
    """The three Jacobi-polynomial representations of d_n."""
    return _run_identity(
        "jacobi",
        Mode.SYMBOLIC_POLY,
        f"n<={n_max}",
        lambda alg: _jacobi_instances(alg, n_max),
        n_max,
        points=points,
        fault_index=fault_index,
    )


def verify_recurrences(
    n_max: int,
    *,
    points: Iterable[EvalPoint] | None = None,
    fault_index: int | None = None,
) -> VerifyReport:
    """Three-term and two-term recurrences plus their combination.

    The symbolic run takes its polynomials from the defining-sum route, so
    the recurrences are genuinely being proven about independently
    constructed objects; the point run likewise evaluates the defining sum.
    """
    return _run_identity(
        "recurrences",
        Mode.SYMBOLIC_POLY,
        f"n<={n_max}",
        lambda alg: _recurrence_instances(alg, n_max),
        n_max + 1,
        route=Route.DIRECT,
        scalar_route="direct-sum",
        points=points,
        fault_index=fault_index,
    )


def verify_special_values(
    n_max: int,
    *,
    points: Iterable[EvalPoint] | None = None,
    fault_index: int | None = None,
) -> VerifyReport:
    """Closed forms of d_n at x in {-1/2, 0, -1, 1/2, 1, 3/2, 2}."""
    return _run_identity(
        "special-values",
        Mode.CLEARED_DENOMINATOR,
        f"n<={n_max}",
        lambda alg: _special_value_instances(alg, n_max),
        n_max,
        points=points,
        fault_index=fault_index,
        skipped=(
            {"r": "-1", "reason": "excluded for x=1 and x=3/2 closed forms"},
            {"r": "-3/2", "reason": "factor 2r+3 in the x=3/2 form; skipped rather than resolved"},
            {"r": "{-1, -2}", "reason": "excluded for the x=2 closed form"},
        ),
    )


def verify_shift_identities(
    n_max: int,
    *,
    points: Iterable[EvalPoint] | None = None,
    fault_index: int | None = None,
) -> VerifyReport:
    """Half-step parameter/argument shift identities and the x -> 1-x swap."""
    return _run_identity(
        "shift-identities",
        Mode.SYMBOLIC_POLY,
        f"n<={n_max}",
        lambda alg: _shift_instances(alg, n_max),
        n_max + 1,
        points=points,
        fault_index=fault_index,
    )


def verify_weighted_square_sum(
    n_max: int,
    *,
    points: Iterable[EvalPoint] | None = None,
    fault_index: int | None = None,
) -> VerifyReport:
    """(1+2x) * sum of weighted d_k^2 equals (n+2r) d_n d_{n-1}."""
    return _run_identity(
        "weighted-square-sum",
        Mode.SYMBOLIC_POLY,
        f"n<={n_max}",
        lambda alg: _weighted_square_sum_instances(alg, n_max),
        n_max,
        points=points,
        fault_index=fault_index,
    )


# ---------------------------------------------------------------------------
# Interpolation-grid verifiers.
# ---------------------------------------------------------------------------


def verify_meixner(n_max: int, *, fault_index: int | None = None) -> VerifyReport:
    """Meixner connection d_n = (2r+1)_n / n! * M_n(x-r; 2r+1, -1).

    Both sides have degree <= n in x and in r, so exact agreement on an
    (n+1) x (n+1) product grid proves the identity for each n.  The
    re-parameterized form with b = 2r+1 is checked on its own grid.
    """
    counterexample = None
    idx = 0
    for n in range(n_max + 1):
        if counterexample:
            break
        for rv in range(1, n + 2):
            if counterexample:
                break
            for xv in range(n + 1):
                lhs = d_eval(n, EvalPoint(Fraction(rv), Fraction(xv)))
                rhs = pochhammer(2 * rv + 1, n) / factorial(n) * meixner_eval(
                    n, xv - rv, 2 * rv + 1, -1
                )
                if idx == fault_index:
                    rhs = rhs + 1
                idx += 1
                if lhs != rhs:
                    counterexample = {
                        "instance": f"connection n={n}",
                        "params": {"n": n, "r": rv, "x": xv},
                        "lhs": lhs,
                        "rhs": rhs,
                    }
                    break
        if counterexample:
            break
        for bv in range(1, n + 2):
            if counterexample:
                break
            b = Fraction(bv)
            shift = (b - 1) / 2
            for xv in range(n + 1):
                lhs = d_eval(n, EvalPoint(shift, xv + shift))
                rhs = binom_gen(b + n - 1, n) * meixner_eval(n, xv, b, -1)
                if idx == fault_index:
                    rhs = rhs + 1
                idx += 1
                if lhs != rhs:
                    counterexample = {
                        "instance": f"reparameterized n={n}",
                        "params": {"n": n, "b": b, "x": xv},
                        "lhs": lhs,
                        "rhs": rhs,
                    }
                    break
    return VerifyReport(
        identity_id="meixner",
        mode=Mode.INTERPOLATION_GRID,
        range=f"n<={n_max}, per-n grid (n+1)^2 points in (r, x)",
        passed=counterexample is None,
        counterexample=counterexample,
        skipped=(_EXCLUDED_HALF_INT,),
        degree_bound=n_max,
        sample_count=(n_max + 1) ** 2,
    )


def _parametric_square_sides_symbolic(n: int, a: Fraction) -> tuple[BiPoly, BiPoly]:
    """Both sides of the free-parameter square identity, symbolic in x."""
    lhs_sum = BiPoly.zero()
    for k in range(n + 1):
        lhs_sum = lhs_sum + (
            binom_int(n, k) * binom_poly(_X, k) * (Fraction(-2) ** k / binom_gen(a, k))
        )
    rhs_sum = BiPoly.zero()
    for k in range(n + 1):
        rhs_sum = rhs_sum + (
            binom_poly(_X, k)
            * binom_poly(a - _X, k)
            * (binom_gen(n + k - a - 1, n - k) * Fraction(4) ** k / binom_gen(a, k))
        )
    sign = -1 if n % 2 else 1
    return lhs_sum * lhs_sum, rhs_sum * (sign / binom_gen(a, n))


def _squared_binomial_sum(n: int, b: Fraction) -> BiPoly:
    total = BiPoly.zero()
    for k in range(n + 1):
        total = total + binom_int(n, k) * binom_poly(_X, k) * (
            Fraction(2) ** k / binom_gen(b - 1 + k, k)
        )
    return total


def _meixner_square_rhs(n: int, b: Fraction) -> BiPoly:
    total = BiPoly.zero()
    for k in range(n + 1):
        total = total + (
            binom_poly(_X, k)
            * binom_poly(_X + b - 1 + k, k)
            * (binom_gen(n + k + b - 1, n - k) * Fraction(4) ** k / binom_gen(b - 1 + k, k))
        )
    return total / binom_gen(b + n - 1, n)


def verify_parametric_square(n_max: int, *, fault_index: int | None = None) -> VerifyReport:
    """Square identities with a free parameter and their specializations.

    For each n, both sides times the clearing factor are polynomials of
    degree <= 2n in the parameter, so agreement at 2n+2 parameter values
    (with the x-dependence handled symbolically) is a proof.
    """
    counterexample = None
    idx = 0

    def check(label, params, lhs, rhs):
        nonlocal counterexample, idx
        if counterexample:
            return
        if idx == fault_index:
            rhs = rhs + 1
        idx += 1
        if lhs != rhs:
            entry = {"instance": label, "params": dict(params)}
            if isinstance(lhs, BiPoly):
                diff = lhs - rhs
                for xv in range(diff.deg_x + 1):
                    if diff.eval(0, xv) != 0:
                        entry["params"]["x"] = Fraction(xv)
                        entry["lhs"] = lhs.eval(0, xv)
                        entry["rhs"] = rhs.eval(0, xv)
                        break
            else:
                entry["lhs"] = lhs
                entry["rhs"] = rhs
            counterexample = entry

    for n in range(n_max + 1):
        a_grid = [Fraction(-j) for j in range(1, n + 2)]
        a_grid += [Fraction(-(2 * j - 1), 2) for j in range(1, n + 2)]
        for a in a_grid:
            lhs, rhs = _parametric_square_sides_symbolic(n, a)
            check(f"free-parameter square n={n}", {"n": n, "a": a}, lhs, rhs)
            # specialization x = -1, where binom(-1, k) = (-1)^k; the
            # (a+1)/(a+1-k) factor is binom(a+1,k)/binom(a,k) in reduced
            # form, which stays defined at a = -1, k = 0
            lhs_s = sum(
                (binom_int(n, k) * Fraction(2) ** k / binom_gen(a, k) for k in range(n + 1)),
                Fraction(0),
            )
            rhs_s = sum(
                (
                    Fraction(-1) ** (n - k)
                    * binom_gen(a + 1, k)
                    / binom_gen(a, k)
                    * binom_gen(n + k - a - 1, n - k)
                    * Fraction(4) ** k
                    for k in range(n + 1)
                ),
                Fraction(0),
            ) / binom_gen(a, n)
            check(f"x=-1 specialization n={n}", {"n": n, "a": a}, lhs_s * lhs_s, rhs_s)

        # a = -1/2: central-binomial form
        lhs_c = sum(
            (binom_int(n, k) * Fraction(-8) ** k / binom_gen(Fraction(2 * k), k) for k in range(n + 1)),
            Fraction(0),
        )
        rhs_c = sum(
            (
                Fraction(-1) ** k / (1 - 2 * k) * binom_gen(n + k - Fraction(1, 2), n - k) * Fraction(4) ** (n + k)
                for k in range(n + 1)
            ),
            Fraction(0),
        ) / binom_gen(Fraction(2 * n), n)
        check(f"central-binomial n={n}", {"n": n, "a": "-1/2"}, lhs_c * lhs_c, rhs_c)

        # b parameterization over positive integers, plus the Meixner tie-in
        for bv in range(1, 2 * n + 3):
            b = Fraction(bv)
            base = _squared_binomial_sum(n, b)
            rhs_m = _meixner_square_rhs(n, b)
            check(f"squared-sum form n={n}", {"n": n, "b": b}, base * base, rhs_m)
            for xv in range(n + 1):
                check(
                    f"meixner-square tie n={n}",
                    {"n": n, "b": b, "x": xv},
                    meixner_eval(n, xv, b, -1),
                    base.eval(0, xv),
                )

        # a = -2 specialization, symbolic in x
        lhs_t = BiPoly.zero()
        for k in range(n + 1):
            lhs_t = lhs_t + binom_int(n, k) * binom_poly(_X, k) * Fraction(2**k, k + 1)
        rhs_t = BiPoly.zero()
        for k in range(n + 1):
            rhs_t = rhs_t + (
                binom_poly(_X, k)
                * binom_poly(-2 - _X, k)
                * (binom_int(n + k + 1, 2 * k + 1) * Fraction(-4) ** k / (k + 1))
            )
        check(f"a=-2 specialization n={n}", {"n": n, "a": -2}, lhs_t * lhs_t, rhs_t / (n + 1))

    return VerifyReport(
        identity_id="parametric-square",
        mode=Mode.INTERPOLATION_GRID,
        range=f"n<={n_max}, 2n+2 parameter values per n, symbolic in x",
        passed=counterexample is None,
        counterexample=counterexample,
        skipped=({"a": "{0, 1, 2, ...}", "reason": "excluded by the statement"},),
        degree_bound=2 * n_max,
        sample_count=2 * n_max + 2,
    )


# ---------------------------------------------------------------------------
# Hypergeometric-bridge verifiers (PointGrid by nature).
# ---------------------------------------------------------------------------


def verify_hyper_bridge(
    n_max: int = 15,
    *,
    points: Iterable[EvalPoint] | None = None,
    fault_index: int | None = None,
) -> VerifyReport:
    """Terminating-2F1 bridge and its mirror match the scalar evaluator."""
    if points is None:
        points = deterministic_points(50)
    counterexample = None
    skipped = []
    idx = 0
    used = 0
    for point in points:
        if point.r_is_excluded_half_integer():
            skipped.append(
                {"r": point.r, "x": point.x, "reason": "r in excluded half-integer set"}
            )
            continue
        used += 1
        seq = d_eval_sequence(n_max, point)
        for n in range(n_max + 1):
            for label, fn in (
                ("bridge", d_via_hyper),
                ("mirror-bridge", d_via_hyper_companion),
            ):
                rhs = fn(n, point.r, point.x)
                if idx == fault_index:
                    rhs = rhs + 1
                idx += 1
                if seq[n] != rhs:
                    counterexample = {
                        "instance": f"{label} n={n}",
                        "params": {"n": n, "r": point.r, "x": point.x},
                        "lhs": seq[n],
                        "rhs": rhs,
                    }
                    break
            if counterexample:
                break
        if counterexample:
            break
    return VerifyReport(
        identity_id="hyper-bridge",
        mode=Mode.POINT_GRID,
        range=f"n<={n_max} at {used} points",
        passed=counterexample is None,
        counterexample=counterexample,
        skipped=tuple(skipped),
    )


_CLAUSEN_B = (Fraction(-3, 2), Fraction(-1), Fraction(1, 3), Fraction(2), Fraction(7, 2))
_CLAUSEN_C = (Fraction(1, 2), Fraction(1), Fraction(5, 2), Fraction(4))
_CLAUSEN_Z = (Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(3))
_CLAUSEN_RX = ((Fraction(1), Fraction(1, 3)), (Fraction(7, 3), Fraction(1, 5)), (Fraction(1, 2), Fraction(-2, 5)))


def verify_clausen_product(n_max: int = 15, *, fault_index: int | None = None) -> VerifyReport:
    """Terminating 2F1-product identity over a deterministic grid.

    The grid keeps c positive so no denominator parameter of the 4F3 hits a
    pole before termination; the parameterization (b, c) = (r+1+x, 2r+1)
    used by the square-formula derivation is also sampled.
    """
    counterexample = None
    idx = 0
    for n in range(n_max + 1):
        triples = [(b, c, z) for b in _CLAUSEN_B for c in _CLAUSEN_C for z in _CLAUSEN_Z]
        triples += [(r + 1 + x, 2 * r + 1, Fraction(2)) for (r, x) in _CLAUSEN_RX]
        for b, c, z in triples:
            lhs, rhs = clausen_product_sides(n, b, c, z)
            if idx == fault_index:
                rhs = rhs + 1
            idx += 1
            if lhs != rhs:
                counterexample = {
                    "instance": f"n={n}",
                    "params": {"n": n, "b": b, "c": c, "z": z},
                    "lhs": lhs,
                    "rhs": rhs,
                }
                break
        if counterexample:
            break
    return VerifyReport(
        identity_id="clausen-product",
        mode=Mode.POINT_GRID,
        range=f"n<={n_max}, {len(_CLAUSEN_B) * len(_CLAUSEN_C) * len(_CLAUSEN_Z) + len(_CLAUSEN_RX)} parameter triples per n",
        passed=counterexample is None,
        counterexample=counterexample,
    )


# ---------------------------------------------------------------------------
# Suite runner.
# ---------------------------------------------------------------------------

DEFAULT_DEPTHS: dict[str, int] = {
    "square": 12,
    "linearization": 8,
    "inversion": 15,
    "jacobi": 12,
    "meixner": 12,
    "recurrences": 25,
    "special-values": 25,
    "shift-identities": 20,
    "parametric-square": 10,
    "weighted-square-sum": 15,
    "hyper-bridge": 15,
    "clausen-product": 15,
}

SUITE_IDS: tuple[str, ...] = tuple(DEFAULT_DEPTHS)


@dataclass(frozen=True)
class SuiteConfig:
    """Which verifiers to run, how deep, and optional fault injection."""

    depths: dict = field(default_factory=dict)
    selection: tuple[str, ...] | None = None
    fault: tuple[str, int] | None = None

    def depth_for(self, identity_id: str) -> int:
        return self.depths.get(identity_id, DEFAULT_DEPTHS[identity_id])


def _dispatch(identity_id: str, depth: int, fault_index: int | None) -> VerifyReport:
    if identity_id == "square":
        return verify_square(depth, fault_index=fault_index)
    if identity_id == "linearization":
        return verify_linearization(depth, depth, fault_index=fault_index)
    if identity_id == "inversion":
        return verify_newform_consequences(depth, fault_index=fault_index)
    if identity_id == "jacobi":
        return verify_jacobi(depth, fault_index=fault_index)
    if identity_id == "meixner":
        return verify_meixner(depth, fault_index=fault_index)
    if identity_id == "recurrences":
        return verify_recurrences(depth, fault_index=fault_index)
    if identity_id == "special-values":
        return verify_special_values(depth, fault_index=fault_index)
    if identity_id == "shift-identities":
        return verify_shift_identities(depth, fault_index=fault_index)
    if identity_id == "parametric-square":
        return verify_parametric_square(depth, fault_index=fault_index)
    if identity_id == "weighted-square-sum":
        return verify_weighted_square_sum(depth, fault_index=fault_index)
    if identity_id == "hyper-bridge":
        return verify_hyper_bridge(depth, fault_index=fault_index)
    if identity_id == "clausen-product":
        return verify_clausen_product(depth, fault_index=fault_index)
    raise ValueError(f"unknown identity id: {identity_id!r}")


def run_suite(config: SuiteConfig | None = None) -> list[VerifyReport]:
    """Run the configured verifiers and return their reports in suite order."""
    config = config or SuiteConfig()
    ids = config.selection if config.selection is not None else SUITE_IDS
    unknown = [i for i in ids if i not in DEFAULT_DEPTHS]
    if unknown:
        raise ValueError(f"unknown identity ids: {', '.join(sorted(unknown))}")
    reports = []
    for identity_id in ids:
        fault_index = None
        if config.fault is not None and config.fault[0] == identity_id:
            fault_index = config.fault[1]
        reports.append(_dispatch(identity_id, config.depth_for(identity_id), fault_index))
    return reports


def suite_passed(reports: Iterable[VerifyReport]) -> bool:
    return all(r.passed for r in reports)
