"""Coefficient-level strong-symmetry checks for degree-2 expansions.

For a prime p the difference operator acts on Fourier coefficients by

    B(n, r, m) = p^(k-1) A(n/p, r/p, m) + A(pn, r, m)
               - p^(k-1) A(n, r/p, m/p) - A(n, r, pm)

with any term whose index is not half-integral contributing 0.  An
expansion has the strong symmetry property at p exactly when B vanishes
identically; the divisor-sum lifts of ``siegel2`` do, a Klingen-type
combination does not.

Consuming indices up to trace p*t certifies the output up to trace t;
every report states the certified window explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .elliptic import delta_qexp, eisenstein_qexp
from .exactnum import factorize, rational_to_str
from .siegel2 import HalfIntegralIndex, SiegelExpansion, TwoVarExpansion, tensor_expansion

__all__ = [
    "BowtieReport",
    "bowtie_apply",
    "bowtie_sides",
    "check_strong_symmetry",
    "two_var_hecke",
    "klingen_difference",
]


def _require_prime(p: int) -> None:
    if p < 2 or factorize(p) != [(p, 1)]:
        raise ValueError(f"p = {p} is not prime")


@dataclass(frozen=True)
class BowtieReport:
    """Outcome of one coefficient-identity check at a single prime."""

    weight: int
    prime: int
    window: int
    violations: tuple[tuple[HalfIntegralIndex, Fraction, Fraction], ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "weight": self.weight,
            "prime": self.prime,
            "window": self.window,
            "violations": [[i.n, i.r, i.m, rational_to_str(l), rational_to_str(r)]
                           for i, l, r in self.violations],
            "pass": self.passed,
        }


def _output_indices(window: int, p: int):
    # B(n, r, m) can be nonzero only if one of the four reads lies in the
    # holomorphic support, which forces r^2 <= 4 p n m.
    for n in range(window + 1):
        for m in range(window - n + 1):
            rmax = isqrt(4 * p * n * m)
            for r in range(-rmax, rmax + 1):
                yield HalfIntegralIndex(n, r, m)


def bowtie_sides(F: SiegelExpansion, p: int, idx: HalfIntegralIndex
                 ) -> tuple[Fraction, Fraction]:
    """The two sides of the coefficient identity at one index."""
    n, r, m = idx
    pk = Fraction(p) ** (F.weight - 1)
    lhs = (pk * F.coeff_divided(Fraction(n, p), Fraction(r, p), Fraction(m))
           + F.coeff(p * n, r, m))
    rhs = (pk * F.coeff_divided(Fraction(n), Fraction(r, p), Fraction(m, p))
           + F.coeff(n, r, p * m))
    return lhs, rhs


def bowtie_apply(F: SiegelExpansion, p: int) -> SiegelExpansion:
    """Difference expansion of the two sides; identically zero on the
    certified window iff F has the strong symmetry property at p.

    The output window is floor(trace_trunc / p) and may contain entries
    at indefinite indices, so the result is not flagged psd.
    """
    _require_prime(p)
    if F.trace_trunc < p:
        raise ValueError(f"bowtie_apply: trace window {F.trace_trunc} < p = {p}")
    window = F.trace_trunc // p
    coeffs = {}
    for idx in _output_indices(window, p):
        lhs, rhs = bowtie_sides(F, p, idx)
        if lhs != rhs:
            coeffs[idx] = lhs - rhs
    return SiegelExpansion(F.weight, window, coeffs, psd=False)


def check_strong_symmetry(F: SiegelExpansion, primes: list[int]) -> list[BowtieReport]:
    """Exact identity check at each prime; violations carry both sides."""
    for p in primes:
        _require_prime(p)
        if p > F.trace_trunc:
            raise ValueError(f"prime {p} exceeds trace window {F.trace_trunc}")
    reports = []
    for p in primes:
        window = F.trace_trunc // p
        violations = []
        for idx in _output_indices(window, p):
            lhs, rhs = bowtie_sides(F, p, idx)
            if lhs != rhs:
                violations.append((idx, lhs, rhs))
        violations.sort(key=lambda t: t[0])
        reports.append(BowtieReport(F.weight, p, window, tuple(violations)))
    return reports


def two_var_hecke(f: TwoVarExpansion, p: int, slot: str) -> TwoVarExpansion:
    """Classical weight-k Hecke operator at a prime in one variable:
    b'(n, m) = p^(k-1) b(n/p, m) + b(pn, m) for the first slot (indices
    that fail to be integral contribute 0), analogously for the second."""
    _require_prime(p)
    if slot not in ("first", "second"):
        raise ValueError("slot must be 'first' or 'second'")
    k, pk = f.weight, Fraction(p) ** (f.weight - 1)
    if slot == "first":
        if f.trunc1 < p:
            raise ValueError("two_var_hecke: first-slot window smaller than p")
        t1, t2 = f.trunc1 // p, f.trunc2
    else:
        if f.trunc2 < p:
            raise ValueError("two_var_hecke: second-slot window smaller than p")
        t1, t2 = f.trunc1, f.trunc2 // p
    coeffs = {}
    for n in range(t1 + 1):
        for m in range(t2 + 1):
            if slot == "first":
                val = f.coeff(p * n, m)
                if n % p == 0:
                    val += pk * f.coeff(n // p, m)
            else:
                val = f.coeff(n, p * m)
                if m % p == 0:
                    val += pk * f.coeff(n, m // p)
            if val:
                coeffs[(n, m)] = val
    return TwoVarExpansion(k, t1, t2, coeffs)


def klingen_difference(alpha: Fraction, p: int, trunc: int) -> TwoVarExpansion:
    """Two-variable Klingen-type combination

        f = E12 (x) Delta + Delta (x) E12 + alpha * Delta (x) Delta

    slashed with the prime-p Hecke operator in each slot separately;
    returns the first-slot minus second-slot result.  The difference is
    nonzero (the two tensor factors have different eigenvalues) and does
    not depend on alpha.
    """
    _require_prime(p)
    if trunc < p:
        raise ValueError("klingen_difference: trunc must be >= p")
    e12 = eisenstein_qexp(12, trunc)
    dlt = delta_qexp(trunc)
    f = tensor_expansion(e12, dlt).add(tensor_expansion(dlt, e12)).add(
        tensor_expansion(dlt, dlt).scale(Fraction(alpha)))
    first = two_var_hecke(f, p, "first")
    second = two_var_hecke(f, p, "second")
    return first.add(second.scale(Fraction(-1)))
