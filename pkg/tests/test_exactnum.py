"""Tests for the exact combinatorial primitives."""

import random
from fractions import Fraction
from math import factorial

import pytest

from delpoly.exactnum import (
    binom_gen,
    binom_int,
    format_rational,
    parse_rational,
    pochhammer,
)


def falling_product_oracle(z: Fraction, k: int) -> Fraction:
    """Independent oracle: the literal falling-factorial product over k!."""
    prod = Fraction(1)
    for i in range(k):
        prod *= Fraction(z) - i
    return prod / factorial(k)


def rising_product_oracle(a: Fraction, k: int) -> Fraction:
    prod = Fraction(1)
    for i in range(k):
        prod *= Fraction(a) + i
    return prod


def pascal_triangle_oracle(n: int, k: int) -> int:
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k] if 0 <= k <= n else 0


def test_binom_gen_ordinary():
    assert binom_gen(5, 2) == 10
    assert binom_gen(Fraction(5), 0) == 1
    assert binom_gen(0, 0) == 1


def test_binom_gen_integer_top_crossing_zero():
    assert binom_gen(3, 5) == 0
    assert binom_gen(0, 1) == 0
    assert binom_gen(2, 7) == 0


def test_binom_gen_negative_half():
    # binom(-1/2, k) = binom(2k, k) * (-4)^(-k)
    assert binom_gen(Fraction(-1, 2), 2) == Fraction(3, 8)
    for k in range(10):
        expected = Fraction(binom_int(2 * k, k), (-4) ** k)
        assert binom_gen(Fraction(-1, 2), k) == expected


def test_binom_gen_three_halves_is_not_zero():
    # frozen from the falling-product oracle: (3/2)(1/2)(-1/2)(-3/2)(-5/2)/120
    assert binom_gen(Fraction(3, 2), 5) == Fraction(-3, 256)
    assert binom_gen(Fraction(3, 2), 5) == falling_product_oracle(Fraction(3, 2), 5)


def test_binom_gen_matches_oracle_on_random_rationals():
    rng = random.Random(20260811)
    for _ in range(200):
        z = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
        k = rng.randint(0, 25)
        assert binom_gen(z, k) == falling_product_oracle(z, k)


def test_binom_gen_pascal_recurrence():
    rng = random.Random(7)
    for _ in range(100):
        z = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
        k = rng.randint(1, 20)
        assert binom_gen(z, k) == binom_gen(z - 1, k) + binom_gen(z - 1, k - 1)


def test_binom_gen_rejects_negative_k():
    with pytest.raises(ValueError):
        binom_gen(Fraction(1, 2), -1)


def test_pochhammer_basics():
    assert pochhammer(1, 4) == 24
    assert pochhammer(-3, 5) == 0
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(Fraction(1, 2), 3) == rising_product_oracle(Fraction(1, 2), 3)
    assert pochhammer(Fraction(7, 3), 0) == 1


def test_pochhammer_binomial_bridge():
    # (a)_k = (-1)^k * binom(-a, k) * k! for every k up to 50
    rng = random.Random(99)
    for _ in range(12):
        a = Fraction(rng.randint(-25, 25), rng.randint(1, 10))
        for k in range(51):
            assert pochhammer(a, k) == (-1) ** k * binom_gen(-a, k) * factorial(k)


def test_binom_int():
    assert binom_int(4, 2) == 6
    assert binom_int(3, 5) == 0
    assert binom_int(20, 10) == 184756
    assert binom_int(20, 10) == pascal_triangle_oracle(20, 10)
    for n in range(12):
        for k in range(15):
            assert binom_int(n, k) == pascal_triangle_oracle(n, k)
            assert binom_int(n, k) == binom_gen(n, k)


def test_binom_int_rejects_bad_input():
    with pytest.raises(ValueError):
        binom_int(-1, 2)
    with pytest.raises(ValueError):
        binom_int(3, -1)


def test_parse_and_format_rational():
    assert parse_rational("3/7") == Fraction(3, 7)
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational("5") == 5
    assert parse_rational(" 10/4 ") == Fraction(5, 2)
    assert format_rational(Fraction(5, 2)) == "5/2"
    assert format_rational(Fraction(-3)) == "-3"
    assert format_rational(Fraction(0)) == "0"


@pytest.mark.parametrize("bad", ["0.5", "1e3", "a/b", "1/0", ""])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)
