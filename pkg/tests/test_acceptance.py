"""Acceptance suite: every criterion at its stated tolerance, one
printed pass/fail line per criterion.

Criterion 4a (the degree-1 cross-oracle at height 200 with relative
tolerance 1e-6) is implemented exactly as stated and is a known honest
failure: the truncation tail of the pair sum at height 200 is measured
at 1.31e-6 and decays like height^-2, so the stated tolerance is not
attainable at the stated height (height ~250 would pass).  It is marked
strict-xfail so any change in this situation is flagged loudly.
"""

import random
from fractions import Fraction

import pytest

from eisensym.analytic import (SiegelPoint, TruncationPolicy,
                               bowtie_residual_numeric,
                               decomposition_residual, eigen_ratio_bullet,
                               eigen_ratio_deg1, eval_E1, eval_E2,
                               evaluate_qexp, evaluate_siegel,
                               klingen_control_fn)
from eisensym.bowtie import check_strong_symmetry, klingen_difference
from eisensym.elliptic import (coset_reps_M, eisenstein_qexp, hecke_Tn,
                               hecke_compose, hecke_from_reps)
from eisensym.exactnum import divisor_sigma
from eisensym.siegel2 import maass_lift, siegel_eisenstein2

Z_STD = SiegelPoint(1.6j, 0.1 + 0.1j, 1.5j, 0.75 + 0j)
S_STD = 0.75 + 0j


def report(criterion, ok, detail=""):
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'}"
          + (f" ({detail})" if detail else ""))
    return ok


def test_criterion_1_exact_coefficient_identity():
    """Exact identity suite: k in 4..12, p in {2,3,5,7}, trace window 24."""
    ok = True
    for k in (4, 6, 8, 10, 12):
        F = siegel_eisenstein2(k, 24)
        for rep in check_strong_symmetry(F, [2, 3, 5, 7]):
            ok &= rep.passed and rep.window == 24 // rep.prime
    assert report("1 (exact identity, k=4..12, p=2,3,5,7, trace 24)", ok)


def test_criterion_2_lifts_annihilated():
    """100 seeded random lift inputs, exactly annihilated at p = 2, 3."""
    rng = random.Random(1)
    trace = 10
    max_disc = 4 * (trace // 2 + 1) ** 2
    discs = [D for D in range(max_disc + 1) if D % 4 in (0, 3)]
    ok = True
    for _ in range(100):
        c = {D: Fraction(rng.randint(-10 ** 6, 10 ** 6)) for D in discs}
        F = maass_lift(c, Fraction(rng.randint(-10 ** 6, 10 ** 6)), 8, trace)
        for rep in check_strong_symmetry(F, [2, 3]):
            ok &= rep.passed
    assert report("2 (100 seeded lifts annihilated at p=2,3)", ok)


def test_criterion_3_counterexample():
    """The weight-12 tensor combination violates the symmetry: nonzero,
    (0,1) coefficient exactly 2073, diagonal zero, alpha-independent."""
    alphas = [Fraction(0), Fraction(3, 2), Fraction(-11)]
    diffs = [klingen_difference(a, 2, 12) for a in alphas]
    d = diffs[0]
    ok = not d.is_zero()
    ok &= d.coeff(0, 1) == 2073
    ok &= all(d.coeff(n, n) == 0 for n in range(d.trunc1 + 1))
    ok &= all(d.add(o.scale(Fraction(-1))).is_zero() for o in diffs[1:])
    assert report("3 (counterexample: nonzero, (0,1)=2073, alpha-free)", ok)


@pytest.mark.xfail(strict=True,
                   reason="measured truncation error 1.31e-6 at height 200 "
                          "(decays like height^-2); stated tolerance 1e-6 is "
                          "unattainable at the stated height")
def test_criterion_4a_deg1_cross_oracle():
    """Degree-1 dual representation at tau = 1.3i, height 200, rel 1e-6."""
    ref = evaluate_qexp(eisenstein_qexp(4, 40), 1.3j)
    v = eval_E1(1.3j, 0j, 4, TruncationPolicy(200))
    rel = abs(v - ref) / abs(ref)
    assert report("4a (deg-1 cross-oracle @height 200, tol 1e-6)",
                  rel <= 1e-6, f"measured {rel:.3e}")


def test_criterion_4b_deg2_cross_oracle():
    """Degree-2 dual representation at the standard point, documented
    height 2, rel 1e-3, decreasing under height doubling."""
    F = siegel_eisenstein2(8, 10)
    ref = evaluate_siegel(F, Z_STD.tau, Z_STD.z, Z_STD.tau2)
    P0 = SiegelPoint(Z_STD.tau, Z_STD.z, Z_STD.tau2, 0j)
    rel2 = abs(eval_E2(P0, 8, TruncationPolicy(2)) - ref) / abs(ref)
    rel4 = abs(eval_E2(P0, 8, TruncationPolicy(4)) - ref) / abs(ref)
    ok = rel2 <= 1e-3 and rel4 < rel2
    assert report("4b (deg-2 cross-oracle @height 2, tol 1e-3, doubling)",
                  ok, f"rel@2={rel2:.3e} rel@4={rel4:.3e}")


def test_criterion_5_numeric_prime_symmetry():
    """Numeric residual at k=8, s=0.75, p=2 below 1e-2 and two orders of
    magnitude under the weight-12 control at matched parameters."""
    pol = TruncationPolicy(2)
    res = bowtie_residual_numeric(8, S_STD, Z_STD, 2, pol)
    ctrl = bowtie_residual_numeric(12, S_STD, Z_STD, 2, pol,
                                   series=klingen_control_fn(1.0))
    ok = res <= 1e-2 and ctrl >= 100 * res
    assert report("5 (numeric symmetry residual + 100x separation)",
                  ok, f"residual={res:.3e} control={ctrl:.3e}")


def test_criterion_6_eigenfunction_ratios():
    """Corner-Hecke ratio of the double subseries: constant over three
    sample points to rel 1e-2 and equal to the degree-1 ratio to 1e-2."""
    pol = TruncationPolicy(10)
    points = [Z_STD,
              SiegelPoint(1.9j, 0.2 + 0.05j, 1.4j, S_STD),
              SiegelPoint(0.3 + 1.7j, 0.15j, 0.1 + 1.8j, S_STD)]
    ratios = [eigen_ratio_bullet(8, S_STD, P, 2, pol) for P in points]
    spread = max(abs(r - ratios[0]) / abs(ratios[0]) for r in ratios)
    deg1 = eigen_ratio_deg1(8, S_STD, 1.3j, 2, TruncationPolicy(60))
    match = abs(ratios[0] - deg1) / abs(deg1)
    ok = spread <= 1e-2 and match <= 1e-2
    assert report("6 (eigen-ratio constant and matches degree 1)",
                  ok, f"spread={spread:.2e} deg1-match={match:.2e}")


def test_criterion_7_decomposition():
    """Subseries decomposition at k=8, s=0.75, m_max=3: at least one
    slash variant below 5e-2, stable under height doubling."""
    pol = TruncationPolicy(3, shift_bound=8, m_max=3)
    rep = decomposition_residual(8, S_STD, Z_STD, pol)
    best = min(rep["residuals"], key=rep["residuals"].get)
    rep2 = decomposition_residual(8, S_STD, Z_STD, pol.doubled())
    ok = rep["residuals"][best] <= 5e-2 and rep2["residuals"][best] <= 5e-2
    assert report("7 (decomposition residual, both variants reported)",
                  ok, f"variant={best} resid={rep['residuals'][best]:.3e} "
                      f"doubled={rep2['residuals'][best]:.3e} "
                      f"other={rep['residuals'][{'pure': 'chi', 'chi': 'pure'}[best]]:.3e}")


def test_criterion_8_hecke_algebra():
    """Coset counts, ring identities, and eigenvalues on expansions."""
    ok = True
    for p in (2, 3, 5, 7):
        ok &= len(coset_reps_M(p)) == p + 1
    ok &= len(coset_reps_M(4)) == 7
    t2 = hecke_from_reps(coset_reps_M(2))
    t3 = hecke_from_reps(coset_reps_M(3))
    t6 = hecke_from_reps(coset_reps_M(6))
    ok &= hecke_compose(t2, t3) == t6 == hecke_compose(t3, t2)
    for k in (4, 6, 8, 10, 12):
        f = eisenstein_qexp(k, 40)
        for n in range(1, 21):
            ok &= hecke_Tn(f, n).agrees_with(
                f.scale(Fraction(divisor_sigma(n, k - 1))))
    assert report("8 (Hecke algebra: counts, T2*T3=T6, eigenvalues)", ok)
