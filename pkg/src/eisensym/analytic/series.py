"""Truncated-sum evaluators for the real-analytic series and the numeric
Hecke action through the two corner embeddings.

Every evaluator consumes a fixed, sorted enumeration and sums with
compensated accumulation, so results are bit-identical across runs for a
given policy and backend.
"""

from __future__ import annotations

import cmath
from math import log, pi
from typing import Callable, Mapping

from .._backend import kernel
from ..elliptic import QExpansion
from ..siegel2 import SiegelExpansion
from .enumeration import coprime_pairs, sym_pair_reps
from .points import SiegelPoint, TruncationPolicy

__all__ = [
    "eval_E1",
    "eval_E2",
    "eval_A",
    "eval_B",
    "bullet_point",
    "tp_rep_matrices",
    "apply_hecke_bullet",
    "apply_hecke_deg1",
    "evaluate_qexp",
    "evaluate_siegel",
]

ComplexFn = Callable[[complex, complex, complex], complex]


def _pow_cs(base: float, s: complex) -> complex:
    # base^s for base > 0
    if s == 0:
        return 1.0 + 0.0j
    return cmath.exp(s * log(base))


def eval_E1(tau: complex, s: complex, k: int, policy: TruncationPolicy) -> complex:
    """Degree-1 series: sum over coprime (c, d) of
    (c tau + d)^(-k) Im(g tau)^s, truncated at policy.height."""
    if tau.imag <= 0:
        raise ValueError("eval_E1: Im(tau) must be positive")
    if 2 * s.real + k <= 2:
        raise ValueError("eval_E1: need 2 Re(s) + k > 2")
    pairs = coprime_pairs(policy.height)
    return kernel.sum_e1(pairs, tau, s, k) * _pow_cs(tau.imag, s)


def eval_E2(P: SiegelPoint, k: int, policy: TruncationPolicy) -> complex:
    """Degree-2 series: sum over canonical coprime symmetric pairs of
    det(C Z + D)^(-k) (det Im(g Z))^s, truncated at policy.height."""
    P.require_weight(k)
    reps = sym_pair_reps(policy.height)
    bare = kernel.sum_e2(reps, P.tau, P.z, P.tau2, P.s, k)
    return bare * _pow_cs(P.delta_y, P.s)


def eval_A(P: SiegelPoint, k: int, policy: TruncationPolicy) -> complex:
    """Double subseries over pairs of degree-1 cosets embedded in the two
    corners; the cocycle of the pair (g, h) is

        c c' det(Z) + c d' tau + c' d tau2 + d d'.
    """
    P.require_weight(k)
    pairs = coprime_pairs(policy.height)
    bare = kernel.sum_a(pairs, P.tau, P.z, P.tau2, P.s, k)
    return bare * _pow_cs(P.delta_y, P.s)


def base_solution(c: int, d: int) -> tuple[int, int]:
    """Some (a0, b0) with a0 d - b0 c = 1."""
    from .._kernel_py import _egcd

    g, x, y = _egcd(d, c)
    if g != 1:
        raise ValueError(f"({c}, {d}) not coprime")
    return x, -y


def eval_B(P: SiegelPoint, k: int, policy: TruncationPolicy,
           base_shifts: Mapping[tuple[int, int], int] | None = None) -> complex:
    """Full-group subseries: for each coprime (c, d), both signs and all
    translations a = a0 + t c, b = b0 + t d with |t| <= shift_bound, sum
    phi(gZ)^(-k) |phi(gZ)|^(-2s) chi(g, Z) with phi the entry sum of the
    second-corner transport.

    The value does not depend on the choice of base solutions beyond the
    truncation window; ``base_shifts`` exists to let tests verify that.
    """
    P.require_weight(k)
    rows = []
    for c, d in coprime_pairs(policy.height):
        a0, b0 = base_solution(c, d)
        if base_shifts:
            t0 = base_shifts.get((c, d), 0)
            a0, b0 = a0 + t0 * c, b0 + t0 * d
        rows.append((c, d, a0, b0))
    bare = kernel.sum_b(rows, P.tau, P.z, P.tau2, P.s, k, policy.shift_bound)
    return bare * _pow_cs(P.delta_y, P.s)


def bullet_point(entries: tuple[float, float, float, float],
                 tau: complex, z: complex, tau2: complex,
                 slot: str) -> tuple[tuple[complex, complex, complex], complex]:
    """Image of Z under the corner embedding of a real det-1 matrix and
    the cocycle value j of the embedded element."""
    a, b, c, d = entries
    if slot == "first":
        j = c * tau + d
        return ((a * tau + b) / j, z / j, tau2 - c * z * z / j), j
    if slot == "second":
        j = c * tau2 + d
        return (tau - c * z * z / j, z / j, (a * tau2 + b) / j), j
    raise ValueError("slot must be 'first' or 'second'")


def tp_rep_matrices(p: int) -> list[tuple[int, int, int, int]]:
    """Left-coset representatives of the determinant-p double coset."""
    return [(p, 0, 0, 1)] + [(1, a, 0, p) for a in range(p)]


def apply_hecke_bullet(fn: ComplexFn, tau: complex, z: complex, tau2: complex,
                       s: complex, k: int, p: int, slot: str,
                       variant: str = "pure") -> complex:
    """Normalized prime Hecke operator through one corner embedding,
    applied to a numeric evaluator fn(tau, z, tau2).

    variant "pure" slashes with j^(-k); variant "chi" additionally
    carries |j|^(-2s).
    """
    sq = p ** 0.5
    total = 0j
    for (a, b, c, d) in tp_rep_matrices(p):
        W, j = bullet_point((a / sq, b / sq, c / sq, d / sq), tau, z, tau2, slot)
        fac = j ** (-k)
        if variant == "chi":
            fac *= _pow_cs(abs(j), -2 * s)
        elif variant != "pure":
            raise ValueError("variant must be 'pure' or 'chi'")
        total += fac * fn(*W)
    return total


def apply_hecke_deg1(fn: Callable[[complex], complex], tau: complex,
                     s: complex, k: int, p: int, variant: str = "pure") -> complex:
    """Degree-1 counterpart of ``apply_hecke_bullet``."""
    sq = p ** 0.5
    total = 0j
    for (a, b, c, d) in tp_rep_matrices(p):
        at, bt, ct, dt = a / sq, b / sq, c / sq, d / sq
        j = ct * tau + dt
        fac = j ** (-k)
        if variant == "chi":
            fac *= _pow_cs(abs(j), -2 * s)
        elif variant != "pure":
            raise ValueError("variant must be 'pure' or 'chi'")
        total += fac * fn((at * tau + bt) / j)
    return total


def evaluate_qexp(f: QExpansion, tau: complex) -> complex:
    """Partial sum of the expansion at q = exp(2 pi i tau)."""
    q = cmath.exp(2j * pi * tau)
    total = 0j
    for n in sorted(f.coeffs, reverse=True):
        total += float(f.coeffs[n]) * q ** n
    return total


def evaluate_siegel(F: SiegelExpansion, tau: complex, z: complex,
                    tau2: complex) -> complex:
    """Partial sum of a degree-2 expansion at Z."""
    total = 0j
    for (n, r, m), v in sorted(F.coeffs.items(), reverse=True):
        total += float(v) * cmath.exp(2j * pi * (n * tau + r * z + m * tau2))
    return total
