"""Pure-Python twin of the compiled summation/enumeration kernels.

Selected at import time when the Cython extension is unavailable (or
when EISENSYM_PURE_PYTHON is set).  Both backends implement the exact
same term formulas and the exact same compensated summation in the same
order, so results agree to the last few ulps; within one backend results
are bit-identical across runs.
"""

from __future__ import annotations

from math import ceil, cos, exp, floor, gcd, hypot, log, sin

BACKEND = "python"


def _hnf2x4(r0: list[int], r1: list[int]) -> tuple[int, ...]:
    # Hermite form of a rank-2 integer 2x4 block under left GL2(Z):
    # unique representative per unimodular row-operation orbit.
    piv = 0
    while r0[piv] == 0 and r1[piv] == 0:
        piv += 1
    while r1[piv]:
        q = r0[piv] // r1[piv]
        r0 = [x - q * y for x, y in zip(r0, r1)]
        r0, r1 = r1, r0
    if r0[piv] < 0:
        r0 = [-x for x in r0]
    piv2 = piv + 1
    while r1[piv2] == 0:
        piv2 += 1
    if r1[piv2] < 0:
        r1 = [-x for x in r1]
    q = r0[piv2] // r1[piv2]
    r0 = [x - q * y for x, y in zip(r0, r1)]
    return (*r0, *r1)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, x, y) with a x + b y = g and g = gcd(a, b) >= 0
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _egcd(b, a % b)
    return (g, y, x - (a // b) * y)


def sym_pair_cosets(height: int) -> list[tuple[int, ...]]:
    """Canonical representatives (c11, c12, d11, d12, c21, c22, d21, d22)
    of the left cosets of coprime symmetric pairs having at least one
    representative with all entries bounded by ``height``; sorted."""
    H = height
    rng = range(-H, H + 1)
    seen = set()
    for c11 in rng:
        for c12 in rng:
            g12 = gcd(abs(c11), abs(c12))
            for c21 in rng:
                for c22 in rng:
                    for d11 in rng:
                        for d12 in rng:
                            # C D^t symmetric: c11 d21 + c12 d22 = c21 d11 + c22 d12
                            K = c21 * d11 + c22 * d12
                            if g12 == 0:
                                if K != 0:
                                    continue
                                sols = [(x, y) for x in rng for y in rng]
                            else:
                                if K % g12:
                                    continue
                                _, x0, y0 = _egcd(c11, c12)
                                x0 *= K // g12
                                y0 *= K // g12
                                sx, sy = c12 // g12, -c11 // g12
                                lo, hi = -(10 ** 9), 10 ** 9
                                if sx:
                                    b1 = (-H - x0) / sx
                                    b2 = (H - x0) / sx
                                    if b1 > b2:
                                        b1, b2 = b2, b1
                                    lo, hi = max(lo, b1), min(hi, b2)
                                elif not -H <= x0 <= H:
                                    continue
                                if sy:
                                    b1 = (-H - y0) / sy
                                    b2 = (H - y0) / sy
                                    if b1 > b2:
                                        b1, b2 = b2, b1
                                    lo, hi = max(lo, b1), min(hi, b2)
                                elif not -H <= y0 <= H:
                                    continue
                                sols = [(x0 + t * sx, y0 + t * sy)
                                        for t in range(ceil(lo), floor(hi) + 1)]
                            for d21, d22 in sols:
                                # primitivity: gcd of the six 2x2 minors is 1
                                g = gcd(c11 * c22 - c12 * c21, c11 * d21 - c21 * d11)
                                g = gcd(g, c11 * d22 - c21 * d12)
                                g = gcd(g, c12 * d21 - c22 * d11)
                                g = gcd(g, c12 * d22 - c22 * d12)
                                g = gcd(g, d11 * d22 - d12 * d21)
                                if g != 1:
                                    continue
                                seen.add(_hnf2x4([c11, c12, d11, d12],
                                                 [c21, c22, d21, d22]))
    return sorted(seen, key=lambda t: (max(abs(x) for x in t), t))


def _term(j: complex, k: int, s: complex) -> complex:
    # j^(-k) |j|^(-2s); the integer power by plain repeated multiply and
    # the modulus power through exp/log, identically in both backends.
    inv = 1.0 / j
    acc = complex(1.0, 0.0)
    for _ in range(k):
        acc *= inv
    if s != 0:
        lg = log(hypot(j.real, j.imag))
        xr = -2.0 * s.real * lg
        xi = -2.0 * s.imag * lg
        sc = exp(xr)
        acc *= complex(sc * cos(xi), sc * sin(xi))
    return acc


class _CompensatedSum:
    # Neumaier variant of Kahan summation, per component.
    __slots__ = ("sr", "cr", "si", "ci")

    def __init__(self):
        self.sr = self.cr = self.si = self.ci = 0.0

    def add(self, v: complex) -> None:
        x = v.real
        t = self.sr + x
        if abs(self.sr) >= abs(x):
            self.cr += (self.sr - t) + x
        else:
            self.cr += (x - t) + self.sr
        self.sr = t
        y = v.imag
        t = self.si + y
        if abs(self.si) >= abs(y):
            self.ci += (self.si - t) + y
        else:
            self.ci += (y - t) + self.si
        self.si = t

    def value(self) -> complex:
        return complex(self.sr + self.cr, self.si + self.ci)


def sum_e1(pairs, tau: complex, s: complex, k: int) -> complex:
    acc = _CompensatedSum()
    for c, d in pairs:
        acc.add(_term(c * tau + d, k, s))
    return acc.value()


def sum_e2(reps, tau: complex, z: complex, tau2: complex,
           s: complex, k: int) -> complex:
    acc = _CompensatedSum()
    for (c11, c12, d11, d12, c21, c22, d21, d22) in reps:
        m11 = c11 * tau + c12 * z + d11
        m12 = c11 * z + c12 * tau2 + d12
        m21 = c21 * tau + c22 * z + d21
        m22 = c21 * z + c22 * tau2 + d22
        acc.add(_term(m11 * m22 - m12 * m21, k, s))
    return acc.value()


def sum_a(pairs, tau: complex, z: complex, tau2: complex,
          s: complex, k: int) -> complex:
    det = tau * tau2 - z * z
    acc = _CompensatedSum()
    for c1, d1 in pairs:          # first-corner factor
        u = c1 * det + d1 * tau2  # coefficient of c2
        v = c1 * tau + d1         # coefficient of d2
        for c2, d2 in pairs:      # second-corner factor
            acc.add(_term(c2 * u + d2 * v, k, s))
    return acc.value()


def sum_b(rows, tau: complex, z: complex, tau2: complex,
          s: complex, k: int, shift: int) -> complex:
    acc = _CompensatedSum()
    for (c, d, a0, b0) in rows:
        jh = c * tau2 + d
        chi = _term(jh, k, s)
        w11 = tau - c * z * z / jh
        wz = z / jh
        gt = (a0 * tau2 + b0) / jh
        for sign in (1.0, -1.0):
            base = w11 + 2.0 * sign * wz + gt
            for t in range(-shift, shift + 1):
                phi = _term(base + t, k, s)
                acc.add(complex(phi.real * chi.real - phi.imag * chi.imag,
                                phi.real * chi.imag + phi.imag * chi.real))
    return acc.value()
