"""Coefficient-level strong-symmetry operator and the Klingen-type
counterexample."""

import random
from fractions import Fraction

import pytest

from eisensym.bowtie import (bowtie_apply, bowtie_sides,
                             check_strong_symmetry, klingen_difference,
                             two_var_hecke)
from eisensym.elliptic import delta_qexp, eisenstein_qexp, hecke_Tn
from eisensym.exactnum import divisor_sigma
from eisensym.siegel2 import (HalfIntegralIndex, SiegelExpansion, maass_lift,
                              siegel_eisenstein2, tensor_expansion)


def random_lift(rng, k, trace):
    max_disc = 4 * (trace // 2 + 1) ** 2
    c = {D: Fraction(rng.randint(-10 ** 6, 10 ** 6))
         for D in range(max_disc + 1) if D % 4 in (0, 3)}
    return maass_lift(c, Fraction(rng.randint(-10 ** 6, 10 ** 6)), k, trace)


def test_zero_expansion_maps_to_zero():
    zero = SiegelExpansion(8, 8, {})
    out = bowtie_apply(zero, 2)
    assert out.is_zero() and out.trace_trunc == 4 and not out.psd


@pytest.mark.parametrize("k", [4, 6])
@pytest.mark.parametrize("p", [2, 3])
def test_eisenstein_annihilated(k, p):
    F = siegel_eisenstein2(k, 9)
    assert bowtie_apply(F, p).is_zero()


def test_maass_lifts_annihilated_seeded():
    rng = random.Random(42)
    for _ in range(10):
        F = random_lift(rng, 8, 8)
        for p in (2, 3):
            assert bowtie_apply(F, p).is_zero()


def test_formula_instance_on_generic_expansion():
    # an arbitrary (non-lift) expansion: both divided terms at (1,1,1)
    # vanish as non-half-integral, leaving the two undivided reads
    coeffs = {}
    rng = random.Random(6)
    from eisensym.siegel2 import support_indices
    for idx in support_indices(4):
        coeffs[idx] = Fraction(rng.randint(-50, 50))
    F = SiegelExpansion(4, 4, coeffs)
    lhs, rhs = bowtie_sides(F, 2, HalfIntegralIndex(1, 1, 1))
    assert lhs == F.coeff(2, 1, 1)
    assert rhs == F.coeff(1, 1, 2)


def test_check_strong_symmetry_reports():
    F = siegel_eisenstein2(4, 8)
    reports = check_strong_symmetry(F, [2, 3])
    assert [r.window for r in reports] == [4, 2]
    assert all(r.passed for r in reports)

    # breaking one coefficient makes the p = 2 identity fail visibly
    broken = dict(F.coeffs)
    broken[HalfIntegralIndex(2, 1, 1)] = broken[HalfIntegralIndex(2, 1, 1)] + 1
    G = SiegelExpansion(4, 8, broken)
    bad = check_strong_symmetry(G, [2])[0]
    assert not bad.passed
    assert any(idx == (1, 1, 1) for idx, _, _ in bad.violations)
    data = bad.to_json_dict()
    assert set(data) == {"weight", "prime", "window", "violations", "pass"}
    assert data["pass"] is False


def test_window_and_prime_guards():
    F = siegel_eisenstein2(4, 6)
    assert bowtie_apply(F, 3).trace_trunc == 2
    with pytest.raises(ValueError):
        bowtie_apply(F, 4)
    with pytest.raises(ValueError):
        bowtie_apply(F, 7)
    with pytest.raises(ValueError):
        check_strong_symmetry(F, [7])


def test_linearity_randomized():
    rng = random.Random(99)
    F = random_lift(rng, 6, 6)
    G = random_lift(rng, 6, 6)
    a = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    b = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    combo = F.scale(a).add(G.scale(b))
    lhs = bowtie_apply(combo, 2)
    rhs = bowtie_apply(F, 2).scale(a).add(bowtie_apply(G, 2).scale(b))
    assert lhs.add(rhs.scale(Fraction(-1))).is_zero()


# ------------------------------------------------------ two-variable side


def test_two_var_hecke_zero_and_guards():
    zero = tensor_expansion(eisenstein_qexp(4, 6), eisenstein_qexp(4, 6)).scale(Fraction(0))
    assert two_var_hecke(zero, 2, "first").is_zero()
    with pytest.raises(ValueError):
        two_var_hecke(zero, 4, "first")
    with pytest.raises(ValueError):
        two_var_hecke(zero, 2, "third")


def test_two_var_hecke_pure_tensor():
    g = eisenstein_qexp(12, 12)
    h = delta_qexp(12)
    f = tensor_expansion(g, h)
    for p, slot in ((2, "first"), (3, "first"), (2, "second")):
        out = two_var_hecke(f, p, slot)
        ref = (tensor_expansion(hecke_Tn(g, p), h) if slot == "first"
               else tensor_expansion(g, hecke_Tn(h, p)))
        for n in range(out.trunc1 + 1):
            for m in range(out.trunc2 + 1):
                assert out.coeff(n, m) == ref.coeff(n, m)


def test_two_var_hecke_divided_term_vanishes():
    f = tensor_expansion(delta_qexp(8), delta_qexp(8))
    out = two_var_hecke(f, 2, "first")
    for m in range(9):
        assert out.coeff(1, m) == f.coeff(2, m)


# ------------------------------------------------------------- Klingen


def test_klingen_difference_golden():
    d = klingen_difference(Fraction(1), 2, 12)
    assert d.coeff(0, 1) == divisor_sigma(2, 11) - (-24)
    assert d.coeff(0, 1) == 2073


def test_klingen_diagonal_and_antisymmetry():
    d = klingen_difference(Fraction(2, 3), 2, 10)
    for n in range(d.trunc1 + 1):
        assert d.coeff(n, n) == 0
    for (n, m), v in d.coeffs.items():
        if m <= d.trunc1 and n <= d.trunc2:
            assert d.coeff(m, n) == -v


def test_klingen_alpha_independent_and_nonzero():
    alphas = [Fraction(0), Fraction(7, 3), Fraction(-5)]
    diffs = [klingen_difference(a, 2, 10) for a in alphas]
    assert not diffs[0].is_zero()
    for other in diffs[1:]:
        assert diffs[0].add(other.scale(Fraction(-1))).is_zero()


def test_klingen_restricted_expansion_fails_checker():
    # embed the two-variable combination on the r = 0 stratum; the
    # coefficient checker must fail, and its violations must reproduce
    # the slot-difference expansion entry for entry
    trunc, p = 12, 2
    e12, dlt = eisenstein_qexp(12, trunc), delta_qexp(trunc)
    f = tensor_expansion(e12, dlt).add(tensor_expansion(dlt, e12)).add(
        tensor_expansion(dlt, dlt).scale(Fraction(2)))
    coeffs = {}
    for n in range(trunc + 1):
        for m in range(trunc - n + 1):
            v = f.coeff(n, m)
            if v:
                coeffs[HalfIntegralIndex(n, 0, m)] = v
    G = SiegelExpansion(12, trunc, coeffs)
    report = check_strong_symmetry(G, [p])[0]
    assert not report.passed
    d = klingen_difference(Fraction(2), p, trunc)
    for idx, lhs, rhs in report.violations:
        assert idx.r == 0
        assert lhs - rhs == d.coeff(idx.n, idx.m)
    violated = {(i.n, i.m) for i, _, _ in report.violations}
    assert (0, 1) in violated
