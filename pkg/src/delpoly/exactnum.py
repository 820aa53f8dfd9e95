"""Exact rational arithmetic and generalized combinatorial primitives.

Everything downstream is built from three functions: the generalized
binomial coefficient (falling-factorial product over k!), the Pochhammer
symbol (rising factorial), and the plain integer binomial.  All values are
``fractions.Fraction`` instances; there is no floating point anywhere in
this package.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

# The scalar field of the whole package.  Fraction already guarantees the
# canonical-form invariants we need: positive denominator, fully reduced.
ExactRational = Fraction

RationalLike = Fraction | int | str


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational from a "p/q" or integer string.

    Decimal notation is rejected on purpose: values cross every boundary of
    this package exactly, never rounded.
    """
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational (use p/q form): {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render a rational as "p/q", or just "p" when the denominator is 1."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _check_index(k: int) -> int:
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValueError(f"lower index must be a natural number, got {k!r}")
    return k


def binom_gen(z: RationalLike, k: int) -> Fraction:
    """Generalized binomial coefficient z(z-1)...(z-k+1) / k!.

    The top argument may be any rational; for an integer z with 0 <= z < k
    the product crosses zero and the result is 0.  The product is
    accumulated over a common denominator and reduced exactly once.
    """
    _check_index(k)
    z = as_rational(z)
    num = 1
    zn, zd = z.numerator, z.denominator
    for i in range(k):
        num *= zn - i * zd
        if num == 0:
            return Fraction(0)
    return Fraction(num, zd**k * factorial(k))


def pochhammer(a: RationalLike, k: int) -> Fraction:
    """Rising factorial (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1."""
    _check_index(k)
    a = as_rational(a)
    num = 1
    an, ad = a.numerator, a.denominator
    for i in range(k):
        num *= an + i * ad
        if num == 0:
            return Fraction(0)
    return Fraction(num, ad**k)


def binom_int(n: int, k: int) -> int:
    """Ordinary binomial coefficient for natural n, k; 0 when k > n."""
    _check_index(k)
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"top index must be a natural number, got {n!r}")
    return comb(n, k)
