"""Floating-point evaluation of the real-analytic series and their
subseries by truncated coset sums, with empirical convergence reporting.

Hot summation/enumeration loops run in the compiled kernel when it is
available and in a pure-Python twin otherwise; see ``eisensym._backend``.
"""

from .enumeration import (ScaledMatrix, SymPairRep, coprime_pairs,
                          diag_double_coset_reps, hnf_block, sym_pair_reps)
from .points import SiegelPoint, TruncationPolicy
from .residuals import (bowtie_residual_numeric, decomposition_residual,
                        eigen_ratio_bullet, eigen_ratio_deg1,
                        klingen_control_fn, value_report)
from .series import (apply_hecke_bullet, apply_hecke_deg1, bullet_point,
                     eval_A, eval_B, eval_E1, eval_E2, evaluate_qexp,
                     evaluate_siegel, tp_rep_matrices)

__all__ = [
    "SiegelPoint", "TruncationPolicy",
    "SymPairRep", "ScaledMatrix",
    "coprime_pairs", "sym_pair_reps", "diag_double_coset_reps", "hnf_block",
    "eval_E1", "eval_E2", "eval_A", "eval_B",
    "bullet_point", "tp_rep_matrices",
    "apply_hecke_bullet", "apply_hecke_deg1",
    "evaluate_qexp", "evaluate_siegel",
    "bowtie_residual_numeric", "decomposition_residual",
    "eigen_ratio_bullet", "eigen_ratio_deg1", "klingen_control_fn",
    "value_report",
]
