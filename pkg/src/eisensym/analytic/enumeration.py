"""Coset enumeration for the truncated lattice sums.

Degree 1: coprime pairs (c, d), one per translation-subgroup coset up to
sign.  Degree 2: coprime symmetric pairs (C, D) with C D^t symmetric and
the 2x4 block primitive, one canonical Hermite-form representative per
unimodular left-multiplication orbit.  Enumeration is truncated by the
maximal entry of any box representative and cached per height.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import NamedTuple

from .._backend import kernel
from ..elliptic import IntMatrix2
from ..exactnum import divisors

__all__ = [
    "SymPairRep",
    "ScaledMatrix",
    "coprime_pairs",
    "sym_pair_reps",
    "diag_double_coset_reps",
    "hnf_block",
]


class SymPairRep(NamedTuple):
    """Bottom block rows (C | D) of a degree-2 symplectic representative."""

    c11: int
    c12: int
    d11: int
    d12: int
    c21: int
    c22: int
    d21: int
    d22: int

    @property
    def C(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.c11, self.c12), (self.c21, self.c22))

    @property
    def D(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.d11, self.d12), (self.d21, self.d22))

    @property
    def symmetric(self) -> bool:
        # C D^t = D C^t reduces to one off-diagonal equation
        return (self.c11 * self.d21 + self.c12 * self.d22
                == self.c21 * self.d11 + self.c22 * self.d12)

    @property
    def minor_gcd(self) -> int:
        c11, c12, d11, d12, c21, c22, d21, d22 = self
        g = gcd(c11 * c22 - c12 * c21, c11 * d21 - c21 * d11)
        g = gcd(g, c11 * d22 - c21 * d12)
        g = gcd(g, c12 * d21 - c22 * d11)
        g = gcd(g, c12 * d22 - c22 * d12)
        return gcd(g, d11 * d22 - d12 * d21)


def hnf_block(rep: SymPairRep | tuple) -> SymPairRep:
    """Canonical Hermite form of the 2x4 block under left GL2(Z)."""
    t = tuple(rep)
    from .. import _kernel_py
    return SymPairRep(*_kernel_py._hnf2x4(list(t[:4]), list(t[4:])))


@lru_cache(maxsize=32)
def coprime_pairs(height: int) -> tuple[tuple[int, int], ...]:
    """Coprime (c, d) with |c|, |d| <= height, canonical sign (c > 0, or
    c = 0 and d > 0), sorted by (|c|, |d|, c, d)."""
    if height < 1:
        raise ValueError("coprime_pairs: height must be >= 1")
    out = [(0, 1)]
    for c in range(1, height + 1):
        for d in range(-height, height + 1):
            if gcd(c, abs(d)) == 1:
                out.append((c, d))
    out.sort(key=lambda cd: (abs(cd[0]), abs(cd[1]), cd[0], cd[1]))
    return tuple(out)


@lru_cache(maxsize=16)
def sym_pair_reps(height: int) -> tuple[SymPairRep, ...]:
    """Canonical degree-2 coset representatives at the given height."""
    if height < 1:
        raise ValueError("sym_pair_reps: height must be >= 1")
    return tuple(SymPairRep(*t) for t in kernel.sym_pair_cosets(height))


class ScaledMatrix(NamedTuple):
    """Rational matrix num / den with integer num."""

    num: IntMatrix2
    den: int

    @property
    def entries(self) -> tuple[float, float, float, float]:
        return (self.num.a / self.den, self.num.b / self.den,
                self.num.c / self.den, self.num.d / self.den)

    @property
    def det(self) -> float:
        return self.num.det / (self.den * self.den)


def diag_double_coset_reps(m: int) -> list[ScaledMatrix]:
    """Left-coset representatives of the double coset of diag(m, 1/m):
    (1/m) M over primitive upper-triangular M with det M = m^2."""
    if m < 1:
        raise ValueError("diag_double_coset_reps: m must be >= 1")
    out = []
    for a in divisors(m * m):
        d = m * m // a
        for b in range(d):
            if gcd(gcd(a, b), d) == 1:
                out.append(ScaledMatrix(IntMatrix2(a, b, 0, d), m))
    return out
