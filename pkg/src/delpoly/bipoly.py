"""Exact sparse polynomial algebra in the two formal variables x and r.

``BiPoly`` is the symbolic substrate of the package: the polynomial family
under study lives here, as do the linear forms (x - r, x + r + k, ...) fed
to the polynomial binomial coefficient.  ``TruncatedSeries`` adds formal
power series in t (with BiPoly coefficients) truncated at a fixed order,
which is how the generating-function route is realized.

Internally a BiPoly keeps integer coefficients over one shared positive
denominator, so ring operations run on plain big ints and reduce once per
operation instead of once per coefficient.  The public surface speaks
``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

from .exactnum import RationalLike, as_rational, format_rational

Key = tuple[int, int]  # (degree in x, degree in r)


def _normalize(coeffs: dict[Key, int], den: int) -> tuple[dict[Key, int], int]:
    coeffs = {k: c for k, c in coeffs.items() if c != 0}
    if not coeffs:
        return {}, 1
    g = gcd(den, *coeffs.values())
    if g > 1:
        coeffs = {k: c // g for k, c in coeffs.items()}
        den //= g
    return coeffs, den


class BiPoly:
    """Sparse exact polynomial in x and r with rational coefficients.

    Values are immutable after construction; all operations return new
    polynomials, so instances are safe to share across threads.
    """

    __slots__ = ("_coeffs", "_den")

    def __init__(self, terms: dict[Key, RationalLike] | None = None):
        coeffs: dict[Key, int] = {}
        den = 1
        if terms:
            fracs = {k: as_rational(c) for k, c in terms.items()}
            for f in fracs.values():
                den = den * f.denominator // gcd(den, f.denominator)
            coeffs = {k: f.numerator * (den // f.denominator) for k, f in fracs.items()}
        self._coeffs, self._den = _normalize(coeffs, den)

    @classmethod
    def _raw(cls, coeffs: dict[Key, int], den: int) -> "BiPoly":
        if den < 0:
            den = -den
            coeffs = {k: -c for k, c in coeffs.items()}
        p = object.__new__(cls)
        p._coeffs, p._den = _normalize(coeffs, den)
        return p

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls._raw({}, 1)

    @classmethod
    def one(cls) -> "BiPoly":
        return cls._raw({(0, 0): 1}, 1)

    @classmethod
    def const(cls, value: RationalLike) -> "BiPoly":
        f = as_rational(value)
        return cls._raw({(0, 0): f.numerator}, f.denominator)

    @classmethod
    def x(cls) -> "BiPoly":
        return cls._raw({(1, 0): 1}, 1)

    @classmethod
    def r(cls) -> "BiPoly":
        return cls._raw({(0, 1): 1}, 1)

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def deg_x(self) -> int:
        return max((k[0] for k in self._coeffs), default=0)

    @property
    def deg_r(self) -> int:
        return max((k[1] for k in self._coeffs), default=0)

    @property
    def total_degree(self) -> int:
        return max((k[0] + k[1] for k in self._coeffs), default=0)

    @property
    def is_affine(self) -> bool:
        return self.total_degree <= 1

    def coefficient(self, deg_x: int, deg_r: int) -> Fraction:
        return Fraction(self._coeffs.get((deg_x, deg_r), 0), self._den)

    def terms(self):
        """Yield ((deg_x, deg_r), coefficient) in canonical order."""
        for key in sorted(self._coeffs, key=lambda k: (-k[0], -k[1])):
            yield key, Fraction(self._coeffs[key], self._den)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "BiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        da, db = self._den, other._den
        g = gcd(da, db)
        den = da // g * db
        sa, sb = den // da, den // db
        out = {k: c * sa for k, c in self._coeffs.items()}
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c * sb
        return BiPoly._raw(out, den)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({k: -c for k, c in self._coeffs.items()}, self._den)

    def __sub__(self, other) -> "BiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "BiPoly":
        return (-self) + other

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            f = as_rational(other)
            return BiPoly._raw(
                {k: c * f.numerator for k, c in self._coeffs.items()},
                self._den * f.denominator,
            )
        if not isinstance(other, BiPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) > len(b):
            a, b = b, a
        out: dict[Key, int] = {}
        for (ax, ar), ac in a.items():
            for (bx, br), bc in b.items():
                key = (ax + bx, ar + br)
                prev = out.get(key)
                out[key] = ac * bc if prev is None else prev + ac * bc
        return BiPoly._raw(out, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "BiPoly":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        f = as_rational(scalar)
        if f == 0:
            raise ZeroDivisionError("division of BiPoly by zero scalar")
        return self * Fraction(f.denominator, f.numerator)

    def __pow__(self, exponent: int) -> "BiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a natural number")
        result = BiPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._den == other._den and self._coeffs == other._coeffs

    __hash__ = None  # equality is structural; instances are not dict keys

    # -- evaluation and substitution ----------------------------------------

    def eval(self, r: RationalLike, x: RationalLike) -> Fraction:
        """Exact value at rational r and x."""
        rv, xv = as_rational(r), as_rational(x)
        xpow: dict[int, Fraction] = {0: Fraction(1)}
        rpow: dict[int, Fraction] = {0: Fraction(1)}
        total = Fraction(0)
        for (dx, dr), c in self._coeffs.items():
            if dx not in xpow:
                xpow[dx] = xv**dx
            if dr not in rpow:
                rpow[dr] = rv**dr
            total += c * xpow[dx] * rpow[dr]
        return total / self._den

    def subst_neg_x(self) -> "BiPoly":
        """Substitute x -> -x (flip the sign of odd-degree-in-x terms)."""
        return BiPoly._raw(
            {k: (-c if k[0] & 1 else c) for k, c in self._coeffs.items()},
            self._den,
        )

    def subst_affine_x(self, shift: RationalLike, negate: bool = False) -> "BiPoly":
        """Substitute x -> (-x if negate else x) + shift, exactly."""
        return self._subst_affine(axis=0, shift=as_rational(shift), negate=negate)

    def subst_affine_r(self, shift: RationalLike) -> "BiPoly":
        """Substitute r -> r + shift, exactly."""
        return self._subst_affine(axis=1, shift=as_rational(shift), negate=False)

    def _subst_affine(self, axis: int, shift: Fraction, negate: bool) -> "BiPoly":
        base = {(1, 0): Fraction(-1 if negate else 1), (0, 0): shift}
        if axis == 1:
            base = {(k[1], k[0]): v for k, v in base.items()}
        sub = BiPoly(base)
        powers = [BiPoly.one()]
        out = BiPoly.zero()
        for (dx, dr), c in self._coeffs.items():
            d = (dx, dr)[axis]
            while len(powers) <= d:
                powers.append(powers[-1] * sub)
            keep = (0, dr) if axis == 0 else (dx, 0)
            mono = BiPoly._raw({keep: c}, self._den)
            out = out + mono * powers[d]
        return out

    def subst_x_value(self, value: RationalLike) -> "BiPoly":
        """Pin x to a rational, leaving a polynomial in r alone."""
        v = as_rational(value)
        out: dict[Key, Fraction] = {}
        for (dx, dr), c in self._coeffs.items():
            key = (0, dr)
            out[key] = out.get(key, Fraction(0)) + Fraction(c, self._den) * v**dx
        return BiPoly(out)

    def subst_r_value(self, value: RationalLike) -> "BiPoly":
        """Pin r to a rational, leaving a polynomial in x alone."""
        v = as_rational(value)
        out: dict[Key, Fraction] = {}
        for (dx, dr), c in self._coeffs.items():
            key = (dx, 0)
            out[key] = out.get(key, Fraction(0)) + Fraction(c, self._den) * v**dr
        return BiPoly(out)

    # -- canonical text form -------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form: terms sorted by (deg_x desc, deg_r desc).

        This rendering is the stable wire format used by the CLI and the
        golden-file tests; it must not change shape.
        """
        if not self._coeffs:
            return "0"
        chunks: list[str] = []
        for (dx, dr), coeff in self.terms():
            mono = "*".join(
                part
                for part in (_var_power("x", dx), _var_power("r", dr))
                if part
            )
            mag = format_rational(abs(coeff))
            if mono:
                body = mono if mag == "1" else f"{mag}*{mono}"
            else:
                body = mag
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"BiPoly({self.to_text()!r})"


def _var_power(name: str, deg: int) -> str:
    if deg == 0:
        return ""
    if deg == 1:
        return name
    return f"{name}^{deg}"


def _coerce(value) -> "BiPoly":
    if isinstance(value, BiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return BiPoly.const(value)
    return NotImplemented


X = BiPoly.x()
R = BiPoly.r()


def binom_poly(linear: BiPoly, k: int) -> BiPoly:
    """Binomial coefficient with a polynomial top argument.

    Computes linear*(linear-1)*...*(linear-k+1) / k! for an affine
    ``linear`` in x and r; the result has total degree k.
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError("lower index must be a natural number")
    if not linear.is_affine:
        raise ValueError("binom_poly requires an affine top argument")
    prod = BiPoly.one()
    for j in range(k):
        prod = prod * (linear - j)
    return prod / factorial(k)


@dataclass(frozen=True)
class TruncatedSeries:
    """Formal power series in t, truncated at a fixed order.

    ``coefficients[k]`` is the BiPoly coefficient of t^k; the order of the
    series is the number of retained coefficients.
    """

    coefficients: tuple[BiPoly, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def coefficient(self, k: int) -> BiPoly:
        return self.coefficients[k]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        n = self.order
        out = [BiPoly.zero() for _ in range(n)]
        for i, a in enumerate(self.coefficients):
            if a.is_zero:
                continue
            for j in range(n - i):
                b = other.coefficients[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(tuple(out))

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"series order mismatch: {self.order} != {other.order}"
            )


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    return a * b


def binomial_series(exponent: BiPoly, sign_of_t: int, order: int) -> TruncatedSeries:
    """Newton expansion of (1 + sign_of_t * t)^exponent, truncated.

    The coefficient of t^k is binom_poly(exponent, k) * sign_of_t^k; the
    exponent must be affine in x and r.
    """
    if sign_of_t not in (1, -1):
        raise ValueError("sign_of_t must be +1 or -1")
    if not exponent.is_affine:
        raise ValueError("binomial_series requires an affine exponent")
    if order < 0:
        raise ValueError("order must be a natural number")
    coeffs = []
    term = BiPoly.one()
    for k in range(order):
        coeffs.append(term)
        term = term * (exponent - k) * Fraction(sign_of_t, k + 1)
    return TruncatedSeries(tuple(coeffs))
