"""Numeric verification functionals: the prime coefficient-symmetry
residual, the subseries decomposition residual, and eigen-ratio checks.

Truncation error is estimated empirically; reports carry the policy and
the residual at half height so a reader can judge convergence.
"""

from __future__ import annotations

from ..bowtie import _require_prime
from ..elliptic import delta_qexp, eisenstein_qexp
from .enumeration import diag_double_coset_reps
from .points import SiegelPoint, TruncationPolicy
from .series import (ComplexFn, apply_hecke_bullet, apply_hecke_deg1,
                     bullet_point, eval_A, eval_B, eval_E1, eval_E2,
                     evaluate_qexp)

__all__ = [
    "bowtie_residual_numeric",
    "klingen_control_fn",
    "decomposition_residual",
    "eigen_ratio_bullet",
    "eigen_ratio_deg1",
    "value_report",
]


def _scaled_points(P: SiegelPoint, p: int):
    tau, z, tau2 = P.tau, P.z, P.tau2
    pts = [(p * tau, p * z, tau2), (tau, p * z, p * tau2)]
    pts += [((tau + lam) / p, z, tau2) for lam in range(p)]
    pts += [(tau, z, (tau2 + mu) / p) for mu in range(p)]
    return pts


def bowtie_residual_numeric(k: int, s: complex, P: SiegelPoint, p: int,
                            policy: TruncationPolicy,
                            series: ComplexFn | None = None,
                            y_floor: float = 0.05) -> float:
    """Relative size of

        p^(k-1) F(p tau, p z; ., tau2) + (1/p) sum F((tau+l)/p, z; ., tau2)
      - p^(k-1) F(tau, p z; ., p tau2) - (1/p) sum F(tau, z; ., (tau2+m)/p)

    normalized by |F(Z)|; zero in exact arithmetic for series with the
    strong symmetry property.  All evaluation points must keep the
    minimal eigenvalue of Im(Z) above ``y_floor``.
    """
    if p != 1:
        _require_prime(p)
    P = SiegelPoint(P.tau, P.z, P.tau2, complex(s))
    if series is None:
        series = lambda t1, zz, t2: eval_E2(SiegelPoint(t1, zz, t2, complex(s)),
                                            k, policy)
    for (t1, zz, t2) in _scaled_points(P, p) + [(P.tau, P.z, P.tau2)]:
        probe = SiegelPoint(t1, zz, t2, complex(s))
        if probe.y_min_eigenvalue < y_floor:
            raise ValueError(
                f"evaluation point {t1, zz, t2} below the Y-eigenvalue floor "
                f"{y_floor}")
    pk = float(p) ** (k - 1)
    tau, z, tau2 = P.tau, P.z, P.tau2
    lhs = pk * series(p * tau, p * z, tau2)
    for lam in range(p):
        lhs += series((tau + lam) / p, z, tau2) / p
    rhs = pk * series(tau, p * z, p * tau2)
    for mu in range(p):
        rhs += series(tau, z, (tau2 + mu) / p) / p
    return abs(lhs - rhs) / abs(series(tau, z, tau2))


def klingen_control_fn(alpha: float, qtrunc: int = 40) -> ComplexFn:
    """Numeric evaluator of the weight-12 two-variable control function
    (tensor combination of the weight-12 Eisenstein and cusp expansions);
    depends on (tau, tau2) only, the middle entry is ignored."""
    e12 = eisenstein_qexp(12, qtrunc)
    dlt = delta_qexp(qtrunc)
    a = float(alpha)

    def fn(tau: complex, z: complex, tau2: complex) -> complex:
        ev1, ev2 = evaluate_qexp(e12, tau), evaluate_qexp(e12, tau2)
        dv1, dv2 = evaluate_qexp(dlt, tau), evaluate_qexp(dlt, tau2)
        return ev1 * dv2 + ev2 * dv1 + a * dv1 * dv2

    return fn


def decomposition_residual(k: int, s: complex, P: SiegelPoint,
                           policy: TruncationPolicy,
                           slot: str = "first") -> dict:
    """Relative defect of the subseries decomposition

        E = A + sum_m (B | [diag(m, 1/m) double coset] corner) m^(-2s-k)

    computed under both slash conventions for the coset action on the
    non-holomorphic factor ("pure": j^-k, "chi": j^-k |j|^-2s).  The
    corner embedding carrying the correction sum is selectable (the two
    choices agree up to truncation error).  Returns a report with
    per-variant residuals.
    """
    P = SiegelPoint(P.tau, P.z, P.tau2, complex(s))
    P.require_weight(k)
    E = eval_E2(P, k, policy)
    A = eval_A(P, k, policy)
    tau, z, tau2 = P.tau, P.z, P.tau2
    corrections: dict[str, complex] = {"pure": 0j, "chi": 0j}
    for m in range(1, policy.m_max + 1):
        acc = {"pure": 0j, "chi": 0j}
        for rep in diag_double_coset_reps(m):
            W, j = bullet_point(rep.entries, tau, z, tau2, slot)
            Bv = eval_B(SiegelPoint(*W, complex(s)), k, policy)
            acc["pure"] += j ** (-k) * Bv
            acc["chi"] += j ** (-k) * abs(j) ** (-2 * s) * Bv
        scale = complex(m) ** (-2 * complex(s) - k)
        for variant in corrections:
            corrections[variant] += acc[variant] * scale
    residuals = {variant: abs(E - A - corr) / abs(E)
                 for variant, corr in corrections.items()}
    return {
        "residuals": residuals,
        "E": E,
        "A": A,
        "slot": slot,
        "policy": policy.to_json_dict(),
    }


def eigen_ratio_bullet(k: int, s: complex, P: SiegelPoint, p: int,
                       policy: TruncationPolicy, slot: str = "first") -> complex:
    """Ratio of the corner-embedded prime Hecke image of the double
    subseries to the subseries itself; constant in Z for an eigenfunction."""
    P = SiegelPoint(P.tau, P.z, P.tau2, complex(s))
    fn = lambda t1, zz, t2: eval_A(SiegelPoint(t1, zz, t2, complex(s)), k, policy)
    image = apply_hecke_bullet(fn, P.tau, P.z, P.tau2, complex(s), k, p, slot)
    return image / fn(P.tau, P.z, P.tau2)


def eigen_ratio_deg1(k: int, s: complex, tau: complex, p: int,
                     policy: TruncationPolicy) -> complex:
    """Degree-1 Hecke ratio of the weight-k series at parameter s."""
    fn = lambda t: eval_E1(t, complex(s), k, policy)
    return apply_hecke_deg1(fn, tau, complex(s), k, p) / fn(tau)


_SERIES = {"E2": eval_E2, "A": eval_A, "B": eval_B}


def value_report(series: str, k: int, s: complex, P: SiegelPoint,
                 policy: TruncationPolicy) -> dict:
    """Machine-readable evaluation record: value at the policy plus the
    empirical truncation estimate from recomputation at half height."""
    if series not in _SERIES:
        raise ValueError(f"unknown series {series!r} (expected one of {sorted(_SERIES)})")
    P = SiegelPoint(P.tau, P.z, P.tau2, complex(s))
    fn = _SERIES[series]
    v = fn(P, k, policy)
    v_half = fn(P, k, policy.halved())
    return {
        "series": series,
        "k": k,
        "s": [P.s.real, P.s.imag],
        "Z": [[w.real, w.imag] for w in (P.tau, P.z, P.tau2)],
        "policy": policy.to_json_dict(),
        "value": [v.real, v.imag],
        "residuals": {"half_height_delta": abs(v - v_half) / abs(v)},
    }
