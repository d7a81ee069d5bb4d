# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure-Python kernels in ``_kernel_py``.

Same enumeration, same term formulas, same compensated summation in the
same order; only the execution speed differs.
"""

import array

from libc.math cimport cos, exp, fabs, hypot, log, sin

BACKEND = "cython"


cdef inline long long _gcd_ll(long long a, long long b) noexcept:
    if a < 0: a = -a
    if b < 0: b = -b
    while b:
        a, b = b, a % b
    return a


cdef inline long long _floor_div(long long a, long long b) noexcept:
    cdef long long q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline long long _ceil_div(long long a, long long b) noexcept:
    return -_floor_div(-a, b)


cdef void _hnf2x4_c(long long* r0, long long* r1) noexcept:
    # Hermite form of a rank-2 integer 2x4 block under left GL2(Z).
    cdef int piv = 0, piv2, i
    cdef long long q, tmp
    while r0[piv] == 0 and r1[piv] == 0:
        piv += 1
    while r1[piv] != 0:
        q = _floor_div(r0[piv], r1[piv])
        for i in range(4):
            tmp = r0[i] - q * r1[i]
            r0[i] = r1[i]
            r1[i] = tmp
    if r0[piv] < 0:
        for i in range(4):
            r0[i] = -r0[i]
    piv2 = piv + 1
    while r1[piv2] == 0:
        piv2 += 1
    if r1[piv2] < 0:
        for i in range(4):
            r1[i] = -r1[i]
    q = _floor_div(r0[piv2], r1[piv2])
    for i in range(4):
        r0[i] = r0[i] - q * r1[i]


cdef void _egcd_c(long long a, long long b, long long* x, long long* y) noexcept:
    cdef long long old_r = a, r = b
    cdef long long old_s = 1, s = 0
    cdef long long old_t = 0, t = 1
    cdef long long q, tmp
    while r != 0:
        q = _floor_div(old_r, r)
        tmp = old_r - q * r; old_r = r; r = tmp
        tmp = old_s - q * s; old_s = s; s = tmp
        tmp = old_t - q * t; old_t = t; t = tmp
    if old_r < 0:
        old_s = -old_s
        old_t = -old_t
    x[0] = old_s
    y[0] = old_t


cdef inline bint _minors_coprime(long long c11, long long c12, long long c21,
                                 long long c22, long long d11, long long d12,
                                 long long d21, long long d22) noexcept:
    cdef long long g = _gcd_ll(c11 * c22 - c12 * c21, c11 * d21 - c21 * d11)
    g = _gcd_ll(g, c11 * d22 - c21 * d12)
    g = _gcd_ll(g, c12 * d21 - c22 * d11)
    g = _gcd_ll(g, c12 * d22 - c22 * d12)
    g = _gcd_ll(g, d11 * d22 - d12 * d21)
    return g == 1


def _sort_key(t):
    return (max(abs(x) for x in t), t)


def sym_pair_cosets(int height):
    """Canonical coset representatives of coprime symmetric pairs having
    a representative with all entries bounded by ``height``; sorted."""
    cdef int H = height
    cdef long long c11, c12, c21, c22, d11, d12, d21, d22
    cdef long long K, g12, x0, y0, sx, sy, t, lo, hi, nlo, nhi
    cdef long long r0[4]
    cdef long long r1[4]
    seen = set()
    for c11 in range(-H, H + 1):
        for c12 in range(-H, H + 1):
            g12 = _gcd_ll(c11, c12)
            for c21 in range(-H, H + 1):
                for c22 in range(-H, H + 1):
                    for d11 in range(-H, H + 1):
                        for d12 in range(-H, H + 1):
                            K = c21 * d11 + c22 * d12
                            if g12 == 0:
                                if K != 0:
                                    continue
                                for d21 in range(-H, H + 1):
                                    for d22 in range(-H, H + 1):
                                        if _minors_coprime(c11, c12, c21, c22,
                                                           d11, d12, d21, d22):
                                            r0[0] = c11; r0[1] = c12; r0[2] = d11; r0[3] = d12
                                            r1[0] = c21; r1[1] = c22; r1[2] = d21; r1[3] = d22
                                            _hnf2x4_c(r0, r1)
                                            seen.add((r0[0], r0[1], r0[2], r0[3],
                                                      r1[0], r1[1], r1[2], r1[3]))
                                continue
                            if K % g12 != 0:
                                continue
                            _egcd_c(c11, c12, &x0, &y0)
                            x0 *= K / g12
                            y0 *= K / g12
                            # solution family: d21 = x0 + t*sx, d22 = y0 + t*sy
                            sx = c12 / g12
                            sy = -(c11 / g12)
                            lo = -1000000000
                            hi = 1000000000
                            if sx != 0:
                                if sx > 0:
                                    nlo = _ceil_div(-H - x0, sx)
                                    nhi = _floor_div(H - x0, sx)
                                else:
                                    nlo = _ceil_div(H - x0, sx)
                                    nhi = _floor_div(-H - x0, sx)
                                if nlo > lo: lo = nlo
                                if nhi < hi: hi = nhi
                            elif x0 < -H or x0 > H:
                                continue
                            if sy != 0:
                                if sy > 0:
                                    nlo = _ceil_div(-H - y0, sy)
                                    nhi = _floor_div(H - y0, sy)
                                else:
                                    nlo = _ceil_div(H - y0, sy)
                                    nhi = _floor_div(-H - y0, sy)
                                if nlo > lo: lo = nlo
                                if nhi < hi: hi = nhi
                            elif y0 < -H or y0 > H:
                                continue
                            for t in range(lo, hi + 1):
                                d21 = x0 + t * sx
                                d22 = y0 + t * sy
                                if _minors_coprime(c11, c12, c21, c22,
                                                   d11, d12, d21, d22):
                                    r0[0] = c11; r0[1] = c12; r0[2] = d11; r0[3] = d12
                                    r1[0] = c21; r1[1] = c22; r1[2] = d21; r1[3] = d22
                                    _hnf2x4_c(r0, r1)
                                    seen.add((r0[0], r0[1], r0[2], r0[3],
                                              r1[0], r1[1], r1[2], r1[3]))
    return sorted(seen, key=_sort_key)


cdef inline double complex _term(double complex j, int k, double complex s) noexcept:
    cdef double complex inv = 1.0 / j
    cdef double complex acc = 1.0
    cdef int i
    cdef double lg, xr, xi, sc
    for i in range(k):
        acc = acc * inv
    if s != 0:
        lg = log(hypot(j.real, j.imag))
        xr = -2.0 * s.real * lg
        xi = -2.0 * s.imag * lg
        sc = exp(xr)
        acc = acc * (sc * cos(xi) + 1j * (sc * sin(xi)))
    return acc


cdef struct CompSum:
    double sr
    double cr
    double si
    double ci


cdef inline void _comp_add(CompSum* a, double complex v) noexcept:
    cdef double x = v.real, t
    t = a.sr + x
    if fabs(a.sr) >= fabs(x):
        a.cr += (a.sr - t) + x
    else:
        a.cr += (x - t) + a.sr
    a.sr = t
    x = v.imag
    t = a.si + x
    if fabs(a.si) >= fabs(x):
        a.ci += (a.si - t) + x
    else:
        a.ci += (x - t) + a.si
    a.si = t


def sum_e1(pairs, double complex tau, double complex s, int k):
    cdef CompSum acc
    acc.sr = acc.cr = acc.si = acc.ci = 0.0
    cdef long long c, d
    for c, d in pairs:
        _comp_add(&acc, _term(c * tau + d, k, s))
    return complex(acc.sr + acc.cr, acc.si + acc.ci)


def sum_e2(reps, double complex tau, double complex z, double complex tau2,
           double complex s, int k):
    cdef CompSum acc
    acc.sr = acc.cr = acc.si = acc.ci = 0.0
    cdef long long c11, c12, d11, d12, c21, c22, d21, d22
    cdef double complex m11, m12, m21, m22
    for (c11, c12, d11, d12, c21, c22, d21, d22) in reps:
        m11 = c11 * tau + c12 * z + d11
        m12 = c11 * z + c12 * tau2 + d12
        m21 = c21 * tau + c22 * z + d21
        m22 = c21 * z + c22 * tau2 + d22
        _comp_add(&acc, _term(m11 * m22 - m12 * m21, k, s))
    return complex(acc.sr + acc.cr, acc.si + acc.ci)


def sum_a(pairs, double complex tau, double complex z, double complex tau2,
          double complex s, int k):
    cdef double complex det = tau * tau2 - z * z
    cdef CompSum acc
    acc.sr = acc.cr = acc.si = acc.ci = 0.0
    cdef Py_ssize_t i, j2, n = len(pairs)
    cdef double complex u, v
    cdef long long c1, d1
    cs_arr = array.array("q", [p[0] for p in pairs])
    ds_arr = array.array("q", [p[1] for p in pairs])
    cdef long long[::1] cs = cs_arr
    cdef long long[::1] ds = ds_arr
    for i in range(n):
        c1 = cs[i]; d1 = ds[i]
        u = c1 * det + d1 * tau2
        v = c1 * tau + d1
        for j2 in range(n):
            _comp_add(&acc, _term(cs[j2] * u + ds[j2] * v, k, s))
    return complex(acc.sr + acc.cr, acc.si + acc.ci)


def sum_b(rows, double complex tau, double complex z, double complex tau2,
          double complex s, int k, int shift):
    cdef CompSum acc
    acc.sr = acc.cr = acc.si = acc.ci = 0.0
    cdef long long c, d, a0, b0
    cdef double complex jh, chi, w11, wz, gt, base, phi
    cdef double sign
    cdef int t, si
    for (c, d, a0, b0) in rows:
        jh = c * tau2 + d
        chi = _term(jh, k, s)
        w11 = tau - c * z * z / jh
        wz = z / jh
        gt = (a0 * tau2 + b0) / jh
        for si in range(2):
            sign = 1.0 if si == 0 else -1.0
            base = w11 + 2.0 * sign * wz + gt
            for t in range(-shift, shift + 1):
                phi = _term(base + t, k, s)
                _comp_add(&acc, phi * chi)
    return complex(acc.sr + acc.cr, acc.si + acc.ci)
