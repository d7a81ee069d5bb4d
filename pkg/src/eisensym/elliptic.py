"""One-variable modular-form engine: exact q-expansions, left-coset
representatives of determinant-l integer matrices, double-coset products
and the classical Hecke action on expansions.

Expansions carry an explicit truncation bound and all operations shrink
it honestly; nothing ever fabricates a coefficient beyond validity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, NamedTuple

from .exactnum import bernoulli, divisors, rational_from_str, rational_to_str

__all__ = [
    "QExpansion",
    "IntMatrix2",
    "HeckeElement",
    "eisenstein_qexp",
    "delta_qexp",
    "coset_reps_M",
    "hecke_compose",
    "hecke_Tn",
    "hecke_identity",
    "hecke_from_reps",
]


@dataclass(frozen=True)
class QExpansion:
    """Weight-tagged Fourier expansion n -> Rational, valid for n <= trunc.

    Absent indices within the truncation window are zero; looking up an
    index beyond the window raises instead of silently returning 0.
    """

    weight: int
    trunc: int
    coeffs: Mapping[int, Fraction]

    def __post_init__(self):
        if self.weight % 2:
            raise ValueError("QExpansion: weight must be even")
        if any(n > self.trunc or n < 0 for n in self.coeffs):
            raise ValueError("QExpansion: stored index outside truncation window")
        object.__setattr__(self, "coeffs", dict(self.coeffs))

    def coeff(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.trunc:
            raise ValueError(f"coefficient {n} beyond truncation {self.trunc}")
        return self.coeffs.get(n, Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QExpansion):
            return NotImplemented
        common = min(self.trunc, other.trunc)
        return (self.weight == other.weight
                and all(self.coeff(n) == other.coeff(n) for n in range(common + 1))
                and self.trunc == other.trunc)

    def agrees_with(self, other: "QExpansion") -> bool:
        """Coefficient-wise equality on the shared truncation window."""
        common = min(self.trunc, other.trunc)
        return all(self.coeff(n) == other.coeff(n) for n in range(common + 1))

    def scale(self, a: Fraction) -> "QExpansion":
        return QExpansion(self.weight, self.trunc,
                          {n: a * v for n, v in self.coeffs.items() if a * v})

    def to_json_dict(self) -> dict:
        items = sorted((n, v) for n, v in self.coeffs.items() if v)
        return {"weight": self.weight, "trunc": self.trunc,
                "coeffs": [[n, rational_to_str(v)] for n, v in items]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "QExpansion":
        coeffs = {int(n): rational_from_str(s) for n, s in data["coeffs"]}
        return cls(int(data["weight"]), int(data["trunc"]), coeffs)


def eisenstein_qexp(k: int, trunc: int) -> QExpansion:
    """Weight-k Eisenstein expansion, constant term 1, coefficient of
    q^n equal to (-2k / B_k) sigma_{k-1}(n) for n >= 1."""
    if k < 4 or k % 2:
        raise ValueError("eisenstein_qexp: k must be even and >= 4")
    if trunc < 0:
        raise ValueError("eisenstein_qexp: trunc must be >= 0")
    c = Fraction(-2 * k) / bernoulli(k)
    coeffs = {0: Fraction(1)}
    for n in range(1, trunc + 1):
        coeffs[n] = c * sum(d ** (k - 1) for d in divisors(n))
    return QExpansion(k, trunc, coeffs)


def delta_qexp(trunc: int) -> QExpansion:
    """Weight-12 cusp expansion q * prod_{n>=1} (1 - q^n)^24, by exact
    power-series product."""
    if trunc < 1:
        raise ValueError("delta_qexp: trunc must be >= 1")
    # product accurate through q^(trunc-1), then shifted by one power
    N = trunc - 1
    prod = [0] * (N + 1)
    prod[0] = 1
    for n in range(1, N + 1):
        for _ in range(24):
            for i in range(N, n - 1, -1):
                prod[i] -= prod[i - n]
    coeffs = {i + 1: Fraction(prod[i]) for i in range(N + 1) if prod[i]}
    return QExpansion(12, trunc, coeffs)


class IntMatrix2(NamedTuple):
    """Integer 2x2 matrix (a b; c d)."""

    a: int
    b: int
    c: int
    d: int

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "IntMatrix2") -> "IntMatrix2":
        return IntMatrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )


def coset_canonical(m: IntMatrix2) -> IntMatrix2:
    """Unique upper-triangular representative (a b; 0 d), a,d > 0,
    0 <= b < d, of the left SL2(Z)-coset of a det > 0 integer matrix."""
    if m.det <= 0:
        raise ValueError("coset_canonical: determinant must be positive")
    a, b, c, d = m
    while c:
        if abs(a) < abs(c) or a == 0:
            a, b, c, d = -c, -d, a, b   # row swap with sign, stays in SL2
            continue
        q = a // c
        a, b = a - q * c, b - q * d
        a, b, c, d = -c, -d, a, b
    # now c == 0 and a*d = det > 0
    if a < 0:
        a, b, d = -a, -b, -d
    b %= d
    return IntMatrix2(a, b, 0, d)


def coset_reps_M(l: int) -> list[IntMatrix2]:
    """Left-coset representatives of all determinant-l integer matrices:
    (a b; 0 d) with a d = l, 0 <= b < d.  Count is sigma_1(l)."""
    if l < 1:
        raise ValueError("coset_reps_M: l must be >= 1")
    reps = []
    for d in divisors(l):
        a = l // d
        for b in range(d):
            reps.append(IntMatrix2(a, b, 0, d))
    return reps


@dataclass(frozen=True)
class HeckeElement:
    """Formal rational combination of left cosets, keyed by canonical
    representatives (pairwise inequivalent by construction)."""

    terms: tuple[tuple[Fraction, IntMatrix2], ...]

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Fraction, IntMatrix2]]) -> "HeckeElement":
        acc: dict[IntMatrix2, Fraction] = {}
        for coef, rep in terms:
            if rep.det <= 0:
                raise ValueError("HeckeElement: representative must have det > 0")
            canon = coset_canonical(rep)
            acc[canon] = acc.get(canon, Fraction(0)) + coef
        kept = sorted((rep, c) for rep, c in acc.items() if c)
        return cls(tuple((c, rep) for rep, c in kept))

    def coset_multiset(self) -> dict[IntMatrix2, Fraction]:
        return {rep: c for c, rep in self.terms}


def hecke_identity() -> HeckeElement:
    return HeckeElement.from_terms([(Fraction(1), IntMatrix2(1, 0, 0, 1))])


def hecke_from_reps(reps: Iterable[IntMatrix2]) -> HeckeElement:
    return HeckeElement.from_terms((Fraction(1), r) for r in reps)


def hecke_compose(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    """Ring product: all pairwise products of representatives,
    re-collected into inequivalent left cosets with summed coefficients."""
    prods = []
    for cx, gx in x.terms:
        for cy, gy in y.terms:
            prods.append((cx * cy, gx @ gy))
    return HeckeElement.from_terms(prods)


def hecke_Tn(f: QExpansion, n: int) -> QExpansion:
    """Classical Hecke operator: coefficient of q^m in T_n f is
    sum over d | gcd(n, m) of d^(k-1) a_f(n m / d^2).

    The output window shrinks to floor(trunc / n); no coefficient beyond
    the input window is ever read.
    """
    if n < 1:
        raise ValueError("hecke_Tn: n must be >= 1")
    if n > f.trunc:
        raise ValueError(f"hecke_Tn: n = {n} exceeds truncation {f.trunc}")
    k = f.weight
    out_trunc = f.trunc // n
    coeffs = {}
    for m in range(out_trunc + 1):
        g = gcd(n, m) if m else n
        val = sum(Fraction(d) ** (k - 1) * f.coeff(n * m // (d * d))
                  for d in divisors(g))
        if val:
            coeffs[m] = val
    return QExpansion(k, out_trunc, coeffs)
