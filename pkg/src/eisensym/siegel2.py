"""Degree-2 holomorphic Fourier-expansion engine.

Coefficients are indexed by integer triples (n, r, m) encoding the
half-integral matrix (n, r/2; r/2, m).  Expansions are truncated by
trace: coefficients are valid for all indices with n + m <= trace_trunc.

The divisor-sum lift takes a one-variable coefficient sequence c(D),
D = 0, 3 mod 4, to the degree-2 expansion

    A(n, r, m) = sum over d | gcd(n, r, m) of d^(k-1) c((4 n m - r^2) / d^2)

and the degree-2 Eisenstein expansion is the lift of the normalized
Cohen H-sequence (see ``siegel_eisenstein2``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Mapping, NamedTuple

from .elliptic import QExpansion
from .exactnum import bernoulli, cohen_h, divisors, rational_from_str, rational_to_str

__all__ = [
    "HalfIntegralIndex",
    "SiegelExpansion",
    "TwoVarExpansion",
    "support_indices",
    "siegel_eisenstein2",
    "eisenstein_coeff_seq",
    "maass_lift",
    "phi_restrict",
    "diagonal_restrict",
    "tensor_expansion",
]


class HalfIntegralIndex(NamedTuple):
    """Triple (n, r, m) for the half-integral matrix (n, r/2; r/2, m)."""

    n: int
    r: int
    m: int

    @property
    def disc(self) -> int:
        return 4 * self.n * self.m - self.r * self.r

    @property
    def content(self) -> int:
        return gcd(gcd(self.n, self.r), self.m)

    @property
    def positive_semidefinite(self) -> bool:
        return self.n >= 0 and self.m >= 0 and self.disc >= 0


def support_indices(trace_trunc: int) -> list[HalfIntegralIndex]:
    """All indices in holomorphic support with n + m <= trace_trunc,
    both signs of r, lexicographically sorted."""
    out = []
    for n in range(trace_trunc + 1):
        for m in range(trace_trunc - n + 1):
            rmax = isqrt(4 * n * m)
            for r in range(-rmax, rmax + 1):
                if 4 * n * m - r * r >= 0:
                    out.append(HalfIntegralIndex(n, r, m))
    return out


@dataclass(frozen=True)
class SiegelExpansion:
    """Map (n, r, m) -> Rational with a trace truncation.

    ``psd`` marks expansions supported on positive-semidefinite indices
    only (the holomorphic case); coefficient difference operators may
    produce entries at indefinite indices and set it to False.
    """

    weight: int
    trace_trunc: int
    coeffs: Mapping[HalfIntegralIndex, Fraction]
    psd: bool = True

    def __post_init__(self):
        if self.weight % 2:
            raise ValueError("SiegelExpansion: weight must be even")
        cleaned = {}
        for idx, v in self.coeffs.items():
            idx = HalfIntegralIndex(*idx)
            if idx.n < 0 or idx.m < 0:
                raise ValueError(f"SiegelExpansion: negative diagonal in {idx}")
            if self.psd and not idx.positive_semidefinite:
                raise ValueError(f"SiegelExpansion: index {idx} not positive semidefinite")
            if idx.n + idx.m > self.trace_trunc:
                raise ValueError(f"SiegelExpansion: index {idx} beyond trace window")
            if v:
                cleaned[idx] = v
        object.__setattr__(self, "coeffs", cleaned)

    def coeff(self, n: int, r: int, m: int) -> Fraction:
        """Stored value, or the definitional zero for indices outside the
        support; raises only for in-support indices beyond the window."""
        idx = HalfIntegralIndex(n, r, m)
        if n < 0 or m < 0:
            return Fraction(0)
        if self.psd and not idx.positive_semidefinite:
            return Fraction(0)
        if n + m > self.trace_trunc:
            raise ValueError(f"index {idx} beyond trace window {self.trace_trunc}")
        return self.coeffs.get(idx, Fraction(0))

    def coeff_divided(self, n2: Fraction, r2: Fraction, m2: Fraction) -> Fraction:
        """Lookup with the vanishing rule for non-half-integral matrices:
        fractional entries contribute 0."""
        if n2.denominator != 1 or r2.denominator != 1 or m2.denominator != 1:
            return Fraction(0)
        return self.coeff(int(n2), int(r2), int(m2))

    def scale(self, a: Fraction) -> "SiegelExpansion":
        return SiegelExpansion(self.weight, self.trace_trunc,
                               {i: a * v for i, v in self.coeffs.items()}, self.psd)

    def add(self, other: "SiegelExpansion") -> "SiegelExpansion":
        if self.weight != other.weight:
            raise ValueError("add: weights differ")
        window = min(self.trace_trunc, other.trace_trunc)
        acc: dict[HalfIntegralIndex, Fraction] = {}
        for src in (self, other):
            for idx, v in src.coeffs.items():
                if idx.n + idx.m <= window:
                    acc[idx] = acc.get(idx, Fraction(0)) + v
        return SiegelExpansion(self.weight, window, acc, self.psd and other.psd)

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_json_dict(self) -> dict:
        items = sorted(self.coeffs.items())
        return {"weight": self.weight, "trace_trunc": self.trace_trunc,
                "coeffs": [[i.n, i.r, i.m, rational_to_str(v)] for i, v in items]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "SiegelExpansion":
        coeffs = {HalfIntegralIndex(int(n), int(r), int(m)): rational_from_str(s)
                  for n, r, m, s in data["coeffs"]}
        return cls(int(data["weight"]), int(data["trace_trunc"]), coeffs)


def maass_lift(c: Mapping[int, Fraction], c0: Fraction, k: int,
               trace_trunc: int) -> SiegelExpansion:
    """Divisor-sum lift of the sequence c(D) (D = 0, 3 mod 4) to a
    degree-2 expansion with constant term c0.

    Raises if c lacks a required discriminant.
    """
    if k % 2:
        raise ValueError("maass_lift: weight must be even")
    coeffs: dict[HalfIntegralIndex, Fraction] = {}
    for idx in support_indices(trace_trunc):
        if idx == (0, 0, 0):
            coeffs[idx] = Fraction(c0)
            continue
        disc, content = idx.disc, idx.content
        val = Fraction(0)
        for d in divisors(content):
            dd = disc // (d * d)
            if dd not in c:
                raise ValueError(f"maass_lift: coefficient map missing D = {dd}")
            val += Fraction(d) ** (k - 1) * c[dd]
        coeffs[idx] = val
    return SiegelExpansion(k, trace_trunc, coeffs)


def eisenstein_coeff_seq(k: int, max_disc: int) -> dict[int, Fraction]:
    """The lift input for the degree-2 Eisenstein series: c(D)
    proportional to H(k-1, D), scaled so the divisor-sum lift has
    restriction coefficients (-2k / B_k) sigma_{k-1}(n)."""
    c0 = Fraction(-2 * k) / bernoulli(k)
    h0 = cohen_h(k - 1, 0)
    return {D: c0 * cohen_h(k - 1, D) / h0
            for D in range(max_disc + 1) if D % 4 in (0, 3)}


def siegel_eisenstein2(k: int, trace_trunc: int) -> SiegelExpansion:
    """Degree-2 Eisenstein expansion of even weight k >= 4, normalized
    with constant term 1.

    The normalization is pinned by two oracles checked in the test
    suite: restriction to (n, 0, 0) reproduces ``eisenstein_qexp(k)``
    exactly, and the truncated coset sum of the analytic module matches
    the expansion numerically at s = 0.
    """
    if k < 4 or k % 2:
        raise ValueError("siegel_eisenstein2: k must be even and >= 4")
    max_disc = 4 * (trace_trunc // 2 + 1) ** 2
    c = eisenstein_coeff_seq(k, max_disc)
    return maass_lift(c, Fraction(1), k, trace_trunc)


def phi_restrict(F: SiegelExpansion) -> QExpansion:
    """Restriction to the first diagonal corner: n -> A(n, 0, 0)."""
    coeffs = {n: F.coeff(n, 0, 0) for n in range(F.trace_trunc + 1)}
    return QExpansion(F.weight, F.trace_trunc,
                      {n: v for n, v in coeffs.items() if v})


@dataclass(frozen=True)
class TwoVarExpansion:
    """Fourier expansion in two variables, box-truncated per variable."""

    weight: int
    trunc1: int
    trunc2: int
    coeffs: Mapping[tuple[int, int], Fraction]

    def __post_init__(self):
        for (n, m), _ in self.coeffs.items():
            if n < 0 or m < 0 or n > self.trunc1 or m > self.trunc2:
                raise ValueError(f"TwoVarExpansion: index ({n}, {m}) out of window")
        object.__setattr__(self, "coeffs",
                           {k: v for k, v in self.coeffs.items() if v})

    def coeff(self, n: int, m: int) -> Fraction:
        if n < 0 or m < 0:
            return Fraction(0)
        if n > self.trunc1 or m > self.trunc2:
            raise ValueError(f"index ({n}, {m}) beyond window")
        return self.coeffs.get((n, m), Fraction(0))

    def scale(self, a: Fraction) -> "TwoVarExpansion":
        return TwoVarExpansion(self.weight, self.trunc1, self.trunc2,
                               {k: a * v for k, v in self.coeffs.items()})

    def add(self, other: "TwoVarExpansion") -> "TwoVarExpansion":
        if self.weight != other.weight:
            raise ValueError("add: weights differ")
        t1 = min(self.trunc1, other.trunc1)
        t2 = min(self.trunc2, other.trunc2)
        acc: dict[tuple[int, int], Fraction] = {}
        for src in (self, other):
            for (n, m), v in src.coeffs.items():
                if n <= t1 and m <= t2:
                    acc[(n, m)] = acc.get((n, m), Fraction(0)) + v
        return TwoVarExpansion(self.weight, t1, t2, acc)

    def is_zero(self) -> bool:
        return not self.coeffs


def tensor_expansion(g: QExpansion, h: QExpansion) -> TwoVarExpansion:
    """Pure tensor b(n, m) = a_g(n) a_h(m)."""
    if g.weight != h.weight:
        raise ValueError("tensor_expansion: weights differ")
    coeffs = {}
    for n, gv in g.coeffs.items():
        for m, hv in h.coeffs.items():
            if gv and hv:
                coeffs[(n, m)] = gv * hv
    return TwoVarExpansion(g.weight, g.trunc, h.trunc, coeffs)


def diagonal_restrict(F: SiegelExpansion) -> TwoVarExpansion:
    """Restriction to the diagonal: b(n, m) = sum over r of A(n, r, m).

    Returned with the conservative box window n, m <= trace_trunc // 2,
    inside which every needed index satisfies the trace bound.
    """
    half = F.trace_trunc // 2
    coeffs: dict[tuple[int, int], Fraction] = {}
    for n in range(half + 1):
        for m in range(half + 1):
            rmax = isqrt(4 * n * m)
            val = sum(F.coeff(n, r, m) for r in range(-rmax, rmax + 1))
            if val:
                coeffs[(n, m)] = val
    return TwoVarExpansion(F.weight, half, half, coeffs)
