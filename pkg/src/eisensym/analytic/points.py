"""Evaluation points and truncation policies for the numeric module."""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

__all__ = ["SiegelPoint", "TruncationPolicy"]


@dataclass(frozen=True)
class SiegelPoint:
    """Point Z = (tau, z; z, tau2) of the degree-2 upper half-space,
    paired with the series parameter s.

    The imaginary part must be positive definite; with a weight k the
    parameter must satisfy 2 Re(s) + k > 3 (absolute convergence).
    """

    tau: complex
    z: complex
    tau2: complex
    s: complex = 0j

    def __post_init__(self):
        if self.tau.imag <= 0 or self.tau2.imag <= 0 or self.delta_y <= 0:
            raise ValueError("SiegelPoint: imaginary part must be positive definite")

    @property
    def delta_y(self) -> float:
        """det Im(Z)."""
        return self.tau.imag * self.tau2.imag - self.z.imag ** 2

    @property
    def y_min_eigenvalue(self) -> float:
        a, b, c = self.tau.imag, self.z.imag, self.tau2.imag
        return ((a + c) - sqrt((a - c) ** 2 + 4 * b * b)) / 2

    def require_weight(self, k: int) -> None:
        if 2 * self.s.real + k <= 3:
            raise ValueError(
                f"s = {self.s} outside the convergence domain for weight {k} "
                "(need 2 Re(s) + k > 3)")

    def with_z(self, tau: complex, z: complex, tau2: complex) -> "SiegelPoint":
        return SiegelPoint(tau, z, tau2, self.s)


@dataclass(frozen=True)
class TruncationPolicy:
    """Explicit truncation bounds for the lattice sums.

    height bounds every entry of the coset representatives (of (c, d) in
    degree 1); shift_bound bounds the translation index in the full-group
    sum; m_max bounds the decomposition correction sum.
    """

    height: int
    shift_bound: int = 8
    m_max: int = 3

    def __post_init__(self):
        if self.height < 1 or self.shift_bound < 1 or self.m_max < 0:
            raise ValueError("TruncationPolicy: bounds must be positive")

    def halved(self) -> "TruncationPolicy":
        return TruncationPolicy(max(1, self.height // 2),
                                max(1, self.shift_bound // 2), self.m_max)

    def doubled(self) -> "TruncationPolicy":
        return TruncationPolicy(2 * self.height, 2 * self.shift_bound, self.m_max)

    def to_json_dict(self) -> dict:
        return {"height": self.height, "shift_bound": self.shift_bound,
                "m_max": self.m_max}
