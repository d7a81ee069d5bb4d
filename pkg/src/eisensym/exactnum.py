"""Exact arithmetic kernel: Bernoulli numbers, divisor power sums,
Kronecker symbols and Cohen's H-function.

All values are exact rationals (`fractions.Fraction`); nothing in this
module ever rounds.  Conventions fixed here once and for all:

* Bernoulli numbers use B_1 = -1/2.
* ``cohen_h(r, N)`` attaches the *negative* fundamental discriminant D
  with N = |D| f^2, which is the case needed for even-weight Eisenstein
  coefficients (r = k - 1 odd).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt

# Exact rational scalar used throughout the package.  Fraction already
# guarantees the invariants we need: lowest terms, positive denominator.
Rational = Fraction

__all__ = [
    "Rational",
    "bernoulli",
    "divisor_sigma",
    "divisors",
    "kronecker",
    "cohen_h",
    "factorize",
    "moebius",
    "rational_to_str",
    "rational_from_str",
]


@lru_cache(maxsize=None)
def _bernoulli_upto(n: int) -> tuple[Fraction, ...]:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1; yields B_1 = -1/2.
    vals: list[Fraction] = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(comb(m + 1, j) * vals[j] for j in range(m))
        vals.append(Fraction(-acc, m + 1))
    return tuple(vals)


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n in the convention B_1 = -1/2."""
    if n < 0:
        raise ValueError("bernoulli: n must be >= 0")
    return _bernoulli_upto(n)[n]


def divisors(n: int) -> list[int]:
    """Positive divisors of n >= 1, ascending."""
    if n < 1:
        raise ValueError("divisors: n must be >= 1")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def divisor_sigma(n: int, e: int) -> int:
    """sigma_e(n) = sum of d^e over positive divisors d of n."""
    if n < 1:
        raise ValueError("divisor_sigma: n must be >= 1")
    return sum(d ** e for d in divisors(n))


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs."""
    if n < 1:
        raise ValueError("factorize: n must be >= 1")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def moebius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a | n), extended to all integers n.

    (a | 0) is 1 for a = +-1 and 0 otherwise; (a | -1) is the sign
    character; (a | 2) follows the mod-8 rule.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    if a % 2 == 0 and n % 2 == 0:
        return 0
    # strip powers of two from n
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    k = 1
    if v % 2 == 1:
        # a is odd here; (a|2) = +1 for a = +-1 mod 8, -1 for +-3 mod 8
        k = 1 if a % 8 in (1, 7) else -1
    if n < 0:
        n = -n
        if a < 0:
            k = -k
    # Jacobi symbol for odd positive n via reciprocity
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                k = -k
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            k = -k
        a %= n
    return k if n == 1 else 0


def _fundamental_decomposition(N: int) -> tuple[int, int]:
    # N > 0 with N = 0, 3 mod 4; return (D, f) with D < 0 fundamental
    # and N = |D| f^2.
    sf, f = 1, 1
    for p, e in factorize(N):
        f *= p ** (e // 2)
        if e % 2:
            sf *= p
    if (-sf) % 4 == 1:
        return -sf, f
    if f % 2:
        raise ArithmeticError(f"no negative discriminant with |D| f^2 = {N}")
    return -4 * sf, f // 2


def _char_power_sums(D: int, r: int) -> list[int]:
    # S_e = sum_{a=1..|D|} kronecker(D, a) a^e for e = 0..r, all-integer.
    M = abs(D)
    sums = [0] * (r + 1)
    for a in range(1, M + 1):
        chi = kronecker(D, a)
        if chi == 0:
            continue
        pw = 1
        for e in range(r + 1):
            sums[e] += chi * pw
            pw *= a
    return sums


def _l_value_negative(r: int, D: int) -> Fraction:
    # L(1 - r, chi_D) = -B_{r, chi_D} / r with
    # B_{r, chi} = sum_j C(r, j) B_j M^{j-1} S_{r-j},  M = |D|.
    M = abs(D)
    S = _char_power_sums(D, r)
    acc = Fraction(0)
    for j in range(r + 1):
        bj = bernoulli(j)
        if bj == 0:
            continue
        acc += comb(r, j) * bj * Fraction(M) ** (j - 1) * S[r - j]
    return -acc / r


@lru_cache(maxsize=None)
def cohen_h(r: int, N: int) -> Fraction:
    """Cohen's function H(r, N) as an exact rational.

    H(r, 0) = zeta(1 - 2r); H(r, N) = 0 for N = 1, 2 mod 4; otherwise
    the finite expression through L(1 - r, chi_D) for the quadratic
    character of the negative fundamental discriminant D with
    N = |D| f^2, times a Moebius/divisor sum over f.
    """
    if r < 2:
        raise ValueError("cohen_h: r must be >= 2")
    if N < 0:
        raise ValueError("cohen_h: N must be >= 0")
    if N == 0:
        return -bernoulli(2 * r) / (2 * r)
    if N % 4 in (1, 2):
        return Fraction(0)
    D, f = _fundamental_decomposition(N)
    L = _l_value_negative(r, D)
    dsum = sum(
        moebius(d) * kronecker(D, d) * d ** (r - 1) * divisor_sigma(f // d, 2 * r - 1)
        for d in divisors(f)
    )
    return L * dsum


def rational_to_str(q: Fraction) -> str:
    """Serialize as "num/den", with "/1" omitted for integers."""
    return str(q)


def rational_from_str(text: str) -> Fraction:
    return Fraction(text)
