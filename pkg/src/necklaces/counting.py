"""Necklace counting: dimension formulas and direct enumeration.

The two routes are independent: the formulas go through gcd sums and Moebius
inversion, the enumeration walks the prenecklace tree (FKM order) and never
canonicalizes a word.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .elements import Necklace
from .words import Letter, Word


def divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    """Moebius function by trial-division factorization."""
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def binomial(n: int, k) -> int:
    """C(n, k), defined as 0 for k < 0, k > n, or non-integral k."""
    if isinstance(k, Fraction):
        if k.denominator != 1:
            return 0
        k = int(k)
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(min(k, n - k)):
        out = out * (n - i) // (i + 1)
    return out


def necklace_dimension(d: int, k: int) -> int:
    """Number of necklaces of length k on 2d letters: (1/k) sum (2d)^gcd(k,i)."""
    if d < 1 or k < 0:
        raise ValueError("need d >= 1 and k >= 0")
    if k == 0:
        return 1  # the unit necklace; convention documented here
    total = sum((2 * d) ** gcd(k, i) for i in range(1, k + 1))
    assert total % k == 0
    return total // k


def lyndon_count(length: int, marked) -> int:
    """Aperiodic binary necklaces of given length with `marked` marked beads.

    (1/l) sum_{k | gcd(l, j)} mu(k) C(l/k, j/k); gcd(l, 0) = l.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    j = Fraction(marked)
    if j.denominator != 1:
        return 0
    j = int(j)
    if j < 0 or j > length:
        return 0
    total = 0
    for k in divisors(gcd(length, j) if j else length):
        total += mobius(k) * binomial(length // k, Fraction(j, k))
    assert total % length == 0
    return total // length


def binary_necklace_count(n: int, m) -> int:
    """Binary necklaces of length n with m marked beads, via aperiodic ones."""
    m = Fraction(m)
    if m.denominator != 1:
        return 0
    m = int(m)
    total = 0
    for ell in divisors(n):
        if (ell * m) % n == 0:
            total += lyndon_count(ell, ell * m // n)
    return total


def _prenecklace_walk(k: int, n: int, visit):
    """FKM traversal; calls visit(symbols) for each necklace, in lex order."""
    if n == 0:
        visit(())
        return
    a = [0] * (n + 1)

    def gen(t, p):
        if t > n:
            if n % p == 0:
                visit(tuple(a[1:]))
            return
        a[t] = a[t - p]
        gen(t + 1, p)
        for j in range(a[t - p] + 1, k):
            a[t] = j
            gen(t + 1, t)

    gen(1, 1)


def enumerate_necklaces(d: int, n: int) -> list[Necklace]:
    """All canonical necklaces of degree n on 2d letters, sorted."""
    if d < 1 or n < 0:
        raise ValueError("need d >= 1 and n >= 0")
    out: list[Necklace] = []
    letters = [Letter.from_code(c) for c in range(2 * d)]

    def visit(symbols):
        out.append(Necklace(Word(letters[s] for s in symbols)))

    _prenecklace_walk(2 * d, n, visit)
    return out


def necklace_count_by_enumeration(d: int, n: int) -> int:
    """Count necklaces by walking the FKM tree, without materializing words."""
    if n == 0:
        return 1
    k = 2 * d
    count = 0
    a = [0] * (n + 1)

    # same walk as _prenecklace_walk, kept allocation-free for large n
    def gen(t, p):
        nonlocal count
        if t > n:
            if n % p == 0:
                count += 1
            return
        a[t] = a[t - p]
        gen(t + 1, p)
        for j in range(a[t - p] + 1, k):
            a[t] = j
            gen(t + 1, t)

    gen(1, 1)
    return count
