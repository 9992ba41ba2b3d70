# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled batch kernels.

Line-for-line mirror of spinorlab._pure with identical evaluation order;
the error term of each two-product is obtained with C fma, which yields the
same exact value as the Veltkamp split used on the pure path.
"""
import numpy as np

cimport numpy as cnp
from libc.math cimport fma, sqrt

cnp.import_array()


cdef inline double _dot4(double a0, double b0, double a1, double b1,
                         double a2, double b2, double a3, double b3) nogil:
    cdef double s, err, p, pe, se, t
    s = a0 * b0
    err = fma(a0, b0, -s)
    p = a1 * b1
    pe = fma(a1, b1, -p)
    t = s
    s = t + p
    se = (t - (s - (s - t))) + (p - (s - t))
    err = err + (pe + se)
    p = a2 * b2
    pe = fma(a2, b2, -p)
    t = s
    s = t + p
    se = (t - (s - (s - t))) + (p - (s - t))
    err = err + (pe + se)
    p = a3 * b3
    pe = fma(a3, b3, -p)
    t = s
    s = t + p
    se = (t - (s - (s - t))) + (p - (s - t))
    err = err + (pe + se)
    return s + err


def bilinears(cnp.ndarray psi_in):
    cdef cnp.ndarray[cnp.complex128_t, ndim=2, mode="c"] psi = \
        np.ascontiguousarray(psi_in, dtype=np.complex128)
    cdef Py_ssize_t n = psi.shape[0], i
    cdef cnp.ndarray[cnp.float64_t, ndim=1] sigma = np.empty(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] omega = np.empty(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] j = np.empty((n, 4))
    cdef cnp.ndarray[cnp.float64_t, ndim=2] k = np.empty((n, 4))
    cdef cnp.ndarray[cnp.float64_t, ndim=2] s = np.empty((n, 6))
    cdef double ar, ai, br, bi, cr, ci, dr, di
    cdef double z_re, z_im, r, l, r1, r2, r3, l1, l2, l3
    cdef double w1_re, w1_im, w3_re, w3_im, q_re, q_im
    for i in range(n):
        ar = psi[i, 0].real; ai = psi[i, 0].imag
        br = psi[i, 1].real; bi = psi[i, 1].imag
        cr = psi[i, 2].real; ci = psi[i, 2].imag
        dr = psi[i, 3].real; di = psi[i, 3].imag

        z_re = (ar * cr + ai * ci) + (br * dr + bi * di)
        z_im = (ar * ci - ai * cr) + (br * di - bi * dr)
        sigma[i] = 2.0 * z_re
        omega[i] = 2.0 * z_im

        r = (ar * ar + ai * ai) + (br * br + bi * bi)
        l = (cr * cr + ci * ci) + (dr * dr + di * di)
        r1 = 2.0 * (ar * br + ai * bi)
        r2 = 2.0 * (ar * bi - ai * br)
        r3 = (ar * ar + ai * ai) - (br * br + bi * bi)
        l1 = 2.0 * (cr * dr + ci * di)
        l2 = 2.0 * (cr * di - ci * dr)
        l3 = (cr * cr + ci * ci) - (dr * dr + di * di)

        j[i, 0] = r + l; j[i, 1] = r1 - l1; j[i, 2] = r2 - l2; j[i, 3] = r3 - l3
        k[i, 0] = r - l; k[i, 1] = r1 + l1; k[i, 2] = r2 + l2; k[i, 3] = r3 + l3

        w1_re = (cr * br + ci * bi) + (dr * ar + di * ai)
        w1_im = (cr * bi - ci * br) + (dr * ai - di * ar)
        w3_re = (cr * ar + ci * ai) - (dr * br + di * bi)
        w3_im = (cr * ai - ci * ar) - (dr * bi - di * br)
        q_re = (cr * br + ci * bi) - (dr * ar + di * ai)
        q_im = (cr * bi - ci * br) - (dr * ai - di * ar)

        s[i, 0] = -2.0 * w1_im
        s[i, 1] = 2.0 * q_re
        s[i, 2] = -2.0 * w3_im
        s[i, 3] = 2.0 * w3_re
        s[i, 4] = -2.0 * q_im
        s[i, 5] = 2.0 * w1_re
    return sigma, omega, j, k, s


def helicity_residuals(cnp.ndarray psi_in, cnp.ndarray ct_in,
                       cnp.ndarray sre_in, cnp.ndarray sim_in):
    cdef cnp.ndarray[cnp.complex128_t, ndim=2, mode="c"] psi = \
        np.ascontiguousarray(psi_in, dtype=np.complex128)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ct = np.ascontiguousarray(ct_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] sre = np.ascontiguousarray(sre_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] sim = np.ascontiguousarray(sim_in, dtype=np.float64)
    cdef Py_ssize_t n = psi.shape[0], i, lo, block
    cdef cnp.ndarray[cnp.float64_t, ndim=1] rp_r = np.empty(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] rm_r = np.empty(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] nr_r = np.empty(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] rp_l = np.empty(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] rm_l = np.empty(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] nr_l = np.empty(n)
    cdef double x0r, x0i, x1r, x1i, m0r, m0i, m1r, m1i, c, ur, ui
    for block in range(2):
        lo = 2 * block
        for i in range(n):
            x0r = psi[i, lo].real; x0i = psi[i, lo].imag
            x1r = psi[i, lo + 1].real; x1i = psi[i, lo + 1].imag
            c = ct[i]; ur = sre[i]; ui = sim[i]
            m0r = c * x0r + (ur * x1r + ui * x1i)
            m0i = c * x0i + (ur * x1i - ui * x1r)
            m1r = (ur * x0r - ui * x0i) - c * x1r
            m1i = (ur * x0i + ui * x0r) - c * x1i
            if block == 0:
                rp_r[i] = sqrt(((m0r - x0r) ** 2 + (m0i - x0i) ** 2)
                               + ((m1r - x1r) ** 2 + (m1i - x1i) ** 2))
                rm_r[i] = sqrt(((m0r + x0r) ** 2 + (m0i + x0i) ** 2)
                               + ((m1r + x1r) ** 2 + (m1i + x1i) ** 2))
                nr_r[i] = sqrt((x0r * x0r + x0i * x0i) + (x1r * x1r + x1i * x1i))
            else:
                rp_l[i] = sqrt(((m0r - x0r) ** 2 + (m0i - x0i) ** 2)
                               + ((m1r - x1r) ** 2 + (m1i - x1i) ** 2))
                rm_l[i] = sqrt(((m0r + x0r) ** 2 + (m0i + x0i) ** 2)
                               + ((m1r + x1r) ** 2 + (m1i + x1i) ** 2))
                nr_l[i] = sqrt((x0r * x0r + x0i * x0i) + (x1r * x1r + x1i * x1i))
    return rp_r, rm_r, nr_r, rp_l, rm_l, nr_l


def dirac_apply_shift(cnp.ndarray psi_in, cnp.ndarray e_in, cnp.ndarray m_in,
                      cnp.ndarray px_in, cnp.ndarray py_in, cnp.ndarray pz_in,
                      cnp.ndarray shift_in):
    cdef cnp.ndarray[cnp.complex128_t, ndim=2, mode="c"] psi = \
        np.ascontiguousarray(psi_in, dtype=np.complex128)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] e = np.ascontiguousarray(e_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] m = np.ascontiguousarray(m_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] px = np.ascontiguousarray(px_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] py = np.ascontiguousarray(py_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] pz = np.ascontiguousarray(pz_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] shift = np.ascontiguousarray(shift_in, dtype=np.float64)
    cdef Py_ssize_t n = psi.shape[0], i
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] out = np.empty((n, 4), dtype=np.complex128)
    cdef double mt2, ezp, ezm, sh
    cdef double p0r, p0i, p1r, p1i, p2r, p2i, p3r, p3i
    for i in range(n):
        mt2 = m[i] * m[i] + (px[i] * px[i] + py[i] * py[i])
        if pz[i] >= 0.0:
            ezp = e[i] + pz[i]
        else:
            ezp = mt2 / (e[i] - pz[i])
        if pz[i] <= 0.0:
            ezm = e[i] - pz[i]
        else:
            ezm = mt2 / (e[i] + pz[i])
        sh = shift[i]
        p0r = psi[i, 0].real; p0i = psi[i, 0].imag
        p1r = psi[i, 1].real; p1i = psi[i, 1].imag
        p2r = psi[i, 2].real; p2i = psi[i, 2].imag
        p3r = psi[i, 3].real; p3i = psi[i, 3].imag
        out[i, 0] = complex(
            _dot4(ezp, p2r, px[i], p3r, py[i], p3i, -sh, p0r),
            _dot4(ezp, p2i, px[i], p3i, -py[i], p3r, -sh, p0i))
        out[i, 1] = complex(
            _dot4(px[i], p2r, -py[i], p2i, ezm, p3r, -sh, p1r),
            _dot4(px[i], p2i, py[i], p2r, ezm, p3i, -sh, p1i))
        out[i, 2] = complex(
            _dot4(ezm, p0r, -px[i], p1r, -py[i], p1i, -sh, p2r),
            _dot4(ezm, p0i, -px[i], p1i, py[i], p1r, -sh, p2i))
        out[i, 3] = complex(
            _dot4(-px[i], p0r, py[i], p0i, ezp, p1r, -sh, p3r),
            _dot4(-px[i], p0i, -py[i], p0r, ezp, p1i, -sh, p3i))
    return out
