"""Divisor-lattice queries on factored binary polynomials.

Divisor enumerations walk exponent vectors in mixed-radix counting
order (the first listed factor is the fastest digit), so output order
is reproducible.  Enumerations larger than DIVISOR_LIMIT entries are
refused rather than silently truncated.
"""

from .factorize import Factorization, factor
from .gf2poly import ONE, Poly, _mul_bits

__all__ = [
    "DIVISOR_LIMIT",
    "ResourceLimitError",
    "divisors",
    "unitary_divisors",
    "radical",
    "omega",
    "big_omega",
    "is_special",
]

DIVISOR_LIMIT = 1 << 20


class ResourceLimitError(RuntimeError):
    """An enumeration or search would exceed its configured size bound."""


def divisor_count(f: Factorization) -> int:
    count = 1
    for _, e in f:
        count *= e + 1
    return count


def _check_limit(count: int) -> None:
    if count > DIVISOR_LIMIT:
        raise ResourceLimitError(
            f"{count} divisors exceed the enumeration bound of {DIVISOR_LIMIT}"
        )


def _power_table(p_bits: int, e: int) -> list[int]:
    pows = [1]
    for _ in range(e):
        pows.append(_mul_bits(pows[-1], p_bits))
    return pows


def divisors(f: Factorization) -> list[Poly]:
    """All divisors in mixed-radix order over the exponent vectors."""
    _check_limit(divisor_count(f))
    masks = [1]
    for p, e in f:
        pows = _power_table(p.bits, e)
        masks = [_mul_bits(d, pw) for pw in pows for d in masks]
    return [Poly(m) for m in masks]


def unitary_divisors(f: Factorization) -> list[Poly]:
    """Divisors D with gcd(D, A/D) = 1: one subset of full prime powers each."""
    k = len(f.factors)
    _check_limit(1 << k)
    full = [(p**e).bits for p, e in f]
    out = []
    for subset in range(1 << k):
        acc = 1
        for i in range(k):
            if (subset >> i) & 1:
                acc = _mul_bits(acc, full[i])
        out.append(Poly(acc))
    return out


def radical(f: Factorization) -> Poly:
    """Product of the distinct irreducible factors."""
    acc = 1
    for p, _ in f:
        acc = _mul_bits(acc, p.bits)
    return Poly(acc)


def omega(f: Factorization) -> int:
    """Number of distinct irreducible factors."""
    return len(f.factors)


def big_omega(f: Factorization) -> int:
    """Number of irreducible factors counted with multiplicity."""
    return sum(e for _, e in f)


def is_special(a: Poly) -> bool:
    """True iff a = S**2 with S squarefree (every multiplicity equals 2)."""
    if a.bits == 0:
        raise ValueError("is_special is undefined for the zero polynomial")
    if a == ONE:
        return True
    return all(e == 2 for _, e in factor(a))
