# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled certification kernel; same contract as ``_kernels_py.certify_block``.

Complex arithmetic is spelled out on real and imaginary parts, and moduli
are compared squared, which keeps the loop free of libm calls.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport isfinite, sqrt

cnp.import_array()


def certify_block(u1_in, u2_in, system, double h2, double h3, double bound_a2,
                  double bound_a3, nus_in, fs_bounds_in, double slack):
    cdef double[:, ::1] u1 = np.ascontiguousarray(u1_in, dtype=np.complex128).view(np.float64).reshape(-1, 2)
    cdef double[:, ::1] u2 = np.ascontiguousarray(u2_in, dtype=np.complex128).view(np.float64).reshape(-1, 2)
    cdef double[::1] nus = np.ascontiguousarray(nus_in, dtype=np.float64)
    cdef Py_ssize_t n = u1.shape[0], m = nus.shape[0], i, j
    inv_fs_sq = np.zeros(m, dtype=np.float64)
    cdef double[::1] ifs2 = inv_fs_sq
    cdef bint[64] fs_on
    if m > 64:
        raise ValueError("at most 64 nu values per block")
    fsb = np.ascontiguousarray(fs_bounds_in, dtype=np.float64)
    for j in range(m):
        fs_on[j] = isfinite(fsb[j])
        if fs_on[j]:
            ifs2[j] = 1.0 / (fsb[j] * fsb[j])
    max_fs_sq_arr = np.zeros(m, dtype=np.float64)
    cdef double[::1] max_fs_sq = max_fs_sq_arr

    cdef double inv_c1 = 1.0 / system[0], inv_e1 = 1.0 / system[1], e2 = system[2]
    cdef double f1 = system[3], f2 = system[4], inv_h2 = 1.0 / h2
    cdef bint a2_on = isfinite(bound_a2), a3_on = isfinite(bound_a3), bad
    cdef double ib2 = 1.0 / (bound_a2 * bound_a2) if a2_on else 0.0
    cdef double ib3 = 1.0 / (bound_a3 * bound_a3) if a3_on else 0.0
    cdef double lim2 = (1.0 + 1e-12) ** 2, top2 = (1.0 + slack) ** 2
    cdef double max_a2 = 0.0, max_a3 = 0.0, r
    cdef double xr, xi, yr, yi, sr, si, a2r, a2i, qr, qi, a3r, a3i, vr, vi
    cdef long admissible = 0, violations = 0

    with nogil:
        for i in range(n):
            xr = u1[i, 0]; xi = u1[i, 1]
            yr = u2[i, 0]; yi = u2[i, 1]
            if xr * xr + xi * xi > lim2 or yr * yr + yi * yi > lim2:
                continue
            sr = xr * xr - xi * xi; si = 2.0 * xr * xi          # u1^2
            a2r = h2 * xr * inv_c1; a2i = h2 * xi * inv_c1
            qr = a2r * a2r - a2i * a2i; qi = 2.0 * a2r * a2i    # a2^2
            a3r = (h2 * yr + h3 * sr - e2 * qr) * inv_e1
            a3i = (h2 * yi + h3 * si - e2 * qi) * inv_e1
            vr = (f1 * qr + f2 * a3r - h3 * sr) * inv_h2
            vi = (f1 * qi + f2 * a3i - h3 * si) * inv_h2
            if vr * vr + vi * vi > lim2:
                continue
            admissible += 1
            bad = False
            if a2_on:
                r = (a2r * a2r + a2i * a2i) * ib2
                if r > max_a2:
                    max_a2 = r
                bad = bad or r > top2
            if a3_on:
                r = (a3r * a3r + a3i * a3i) * ib3
                if r > max_a3:
                    max_a3 = r
                bad = bad or r > top2
            for j in range(m):
                if not fs_on[j]:
                    continue
                vr = a3r - nus[j] * qr
                vi = a3i - nus[j] * qi
                r = (vr * vr + vi * vi) * ifs2[j]
                if r > max_fs_sq[j]:
                    max_fs_sq[j] = r
                bad = bad or r > top2
            if bad:
                violations += 1
    return admissible, violations, sqrt(max_a2), sqrt(max_a3), np.sqrt(max_fs_sq_arr)
