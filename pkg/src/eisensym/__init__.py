"""eisensym: verification workbench for the strong symmetry property of
degree-2 Eisenstein series.

Exact side: rational Fourier expansions (degree 1 and 2), divisor-sum
lifts, Hecke coset algebra, and the prime coefficient-identity checker.
Numeric side: truncated coset sums for the real-analytic series and
their subseries, with residual-based verification suites.
"""

from ._backend import backend_name

__version__ = "0.1.0"

__all__ = ["backend_name", "__version__"]
