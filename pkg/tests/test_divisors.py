"""Tests for divisor-lattice queries."""

import pytest

from gf2mf.divisors import (
    ResourceLimitError,
    big_omega,
    divisors,
    is_special,
    omega,
    radical,
    unitary_divisors,
)
from gf2mf.factorize import factor, irreducibles_up_to
from gf2mf.gf2poly import ONE, Poly, X, X1, ZERO, gcd


class TestDivisors:
    def test_examples(self):
        assert set(divisors(factor(Poly("x^2+x")))) == {ONE, X, X1, Poly("x^2+x")}
        assert set(divisors(factor(Poly("x^2")))) == {ONE, X, Poly("x^2")}
        assert len(divisors(factor(Poly("x^3+x^2")))) == 6

    def test_one(self):
        assert divisors(factor(ONE)) == [ONE]

    def test_mixed_radix_order(self):
        # First listed factor is the fastest-changing digit.
        got = divisors(factor(Poly("x^3+x^2")))
        assert got == [ONE, X, Poly("x^2"), X1, Poly("x^2+x"), Poly("x^3+x^2")]

    def test_counts_and_divisibility(self):
        for m in range(1, 1 << 9):
            a = Poly(m)
            fact = factor(a)
            ds = divisors(fact)
            expected = 1
            for _, e in fact:
                expected *= e + 1
            assert len(ds) == expected
            assert len(set(ds)) == len(ds)
            assert all(a % d == ZERO for d in ds)

    def test_limit(self):
        # (x(x+1))^1024 has 1025^2 > 2^20 divisors.
        with pytest.raises(ResourceLimitError):
            divisors(factor(Poly("x^2+x") ** 1024))


class TestUnitaryDivisors:
    def test_examples(self):
        assert set(unitary_divisors(factor(Poly("x^3+x^2")))) == {
            ONE, Poly("x^2"), X1, Poly("x^3+x^2"),
        }
        assert set(unitary_divisors(factor(Poly("x^4")))) == {ONE, Poly("x^4")}

    def test_squarefree_equals_all_divisors(self):
        a = X * X1 * Poly("x^2+x+1")
        assert set(unitary_divisors(factor(a))) == set(divisors(factor(a)))

    def test_definition(self):
        for m in range(1, 1 << 9):
            a = Poly(m)
            fact = factor(a)
            unitary = unitary_divisors(fact)
            assert len(unitary) == 1 << omega(fact)
            all_divs = set(divisors(fact))
            assert set(unitary) <= all_divs
            for d in all_divs:
                assert (d in set(unitary)) == (
                    d == ONE or gcd(d, a // d) == ONE if d != ZERO else False
                )

    def test_limit(self):
        primes = irreducibles_up_to(10)[:21]
        a = ONE
        for p in primes:
            a = a * p
        with pytest.raises(ResourceLimitError):
            unitary_divisors(factor(a))


class TestRadicalAndCounts:
    def test_radical_examples(self):
        assert radical(factor(Poly("x^3+x^2"))) == Poly("x^2+x")
        assert radical(factor(Poly("x^2+x+1") ** 2)) == Poly("x^2+x+1")
        assert radical(factor(ONE)) == ONE

    def test_radical_of_squarefree_is_identity(self):
        a = X * X1 * Poly("x^3+x+1")
        assert radical(factor(a)) == a

    def test_omega_examples(self):
        assert omega(factor(Poly("x^3+x^2"))) == 2
        assert big_omega(factor(Poly("x^3+x^2"))) == 3
        assert omega(factor(ONE)) == 0
        assert big_omega(factor(ONE)) == 0
        cube = Poly("x^2+x") ** 3
        assert omega(factor(cube)) == 2
        assert big_omega(factor(cube)) == 6


class TestIsSpecial:
    def test_examples(self):
        assert is_special(Poly("x^2+x+1") ** 2)
        assert not is_special(Poly("x^2+x+1") ** 4)
        assert is_special(Poly("x^2+x") ** 2)

    def test_one_is_vacuously_special(self):
        assert is_special(ONE)

    def test_non_square_is_not_special(self):
        assert not is_special(Poly("x^3"))
        assert not is_special(X)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            is_special(ZERO)
