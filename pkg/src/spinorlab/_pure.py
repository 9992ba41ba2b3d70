"""Pure-numpy batch kernels.

Mirrors ``spinorlab._core`` operation for operation, with the same evaluation
order and the same explicit real/imaginary expansion, so the two backends
produce bit-identical results (asserted by tests/test_backend_parity.py).

Kernel contracts
----------------
bilinears(psi)            psi (N,4) complex128 -> sigma, omega (N,), j, k (N,4), s (N,6)
helicity_residuals(...)   per-block eigen-residual numerators and block norms
dirac_apply_shift(...)    gamma_mu p^mu psi - shift psi with compensated products
"""
import numpy as np

_SPLIT = 134217729.0  # 2**27 + 1 (Veltkamp splitting constant)


def _two_prod(a, b):
    # exact product: a*b = p + e
    p = a * b
    ca = _SPLIT * a
    ah = ca - (ca - a)
    al = a - ah
    cb = _SPLIT * b
    bh = cb - (cb - b)
    bl = b - bh
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


def _two_sum(a, b):
    s = a + b
    t = s - a
    e = (a - (s - t)) + (b - t)
    return s, e


def _dot4(a0, b0, a1, b1, a2, b2, a3, b3):
    # compensated a0*b0 + a1*b1 + a2*b2 + a3*b3
    s, err = _two_prod(a0, b0)
    p, pe = _two_prod(a1, b1)
    s, se = _two_sum(s, p)
    err = err + (pe + se)
    p, pe = _two_prod(a2, b2)
    s, se = _two_sum(s, p)
    err = err + (pe + se)
    p, pe = _two_prod(a3, b3)
    s, se = _two_sum(s, p)
    err = err + (pe + se)
    return s + err


def bilinears(psi):
    psi = np.ascontiguousarray(psi, dtype=np.complex128)
    ar, ai = psi[:, 0].real.copy(), psi[:, 0].imag.copy()
    br, bi = psi[:, 1].real.copy(), psi[:, 1].imag.copy()
    cr, ci = psi[:, 2].real.copy(), psi[:, 2].imag.copy()
    dr, di = psi[:, 3].real.copy(), psi[:, 3].imag.copy()

    z_re = (ar * cr + ai * ci) + (br * dr + bi * di)
    z_im = (ar * ci - ai * cr) + (br * di - bi * dr)
    sigma = 2.0 * z_re
    omega = 2.0 * z_im

    r = (ar * ar + ai * ai) + (br * br + bi * bi)
    l = (cr * cr + ci * ci) + (dr * dr + di * di)
    r1 = 2.0 * (ar * br + ai * bi)
    r2 = 2.0 * (ar * bi - ai * br)
    r3 = (ar * ar + ai * ai) - (br * br + bi * bi)
    l1 = 2.0 * (cr * dr + ci * di)
    l2 = 2.0 * (cr * di - ci * dr)
    l3 = (cr * cr + ci * ci) - (dr * dr + di * di)

    j = np.stack([r + l, r1 - l1, r2 - l2, r3 - l3], axis=1)
    k = np.stack([r - l, r1 + l1, r2 + l2, r3 + l3], axis=1)

    w1_re = (cr * br + ci * bi) + (dr * ar + di * ai)
    w1_im = (cr * bi - ci * br) + (dr * ai - di * ar)
    w3_re = (cr * ar + ci * ai) - (dr * br + di * bi)
    w3_im = (cr * ai - ci * ar) - (dr * bi - di * br)
    q_re = (cr * br + ci * bi) - (dr * ar + di * ai)
    q_im = (cr * bi - ci * br) - (dr * ai - di * ar)

    s = np.stack(
        [
            -2.0 * w1_im,  # S^{01}
            2.0 * q_re,    # S^{02}
            -2.0 * w3_im,  # S^{03}
            2.0 * w3_re,   # S^{12}
            -2.0 * q_im,   # S^{13}
            2.0 * w1_re,   # S^{23}
        ],
        axis=1,
    )
    return sigma, omega, j, k, s


def helicity_residuals(psi, ct, sre, sim):
    """Eigen-residual numerators of sigma.n on each chiral block.

    ct = cos(theta), sre = sin(theta) cos(phi), sim = sin(theta) sin(phi).
    Returns ||M b - b||, ||M b + b|| and ||b|| for the right block, then the
    same three for the left block (all 2-norms).
    """
    psi = np.ascontiguousarray(psi, dtype=np.complex128)
    out = []
    for lo in (0, 2):
        x0r, x0i = psi[:, lo].real.copy(), psi[:, lo].imag.copy()
        x1r, x1i = psi[:, lo + 1].real.copy(), psi[:, lo + 1].imag.copy()
        m0r = ct * x0r + (sre * x1r + sim * x1i)
        m0i = ct * x0i + (sre * x1i - sim * x1r)
        m1r = (sre * x0r - sim * x0i) - ct * x1r
        m1i = (sre * x0i + sim * x0r) - ct * x1i
        res_p = np.sqrt(
            ((m0r - x0r) ** 2 + (m0i - x0i) ** 2)
            + ((m1r - x1r) ** 2 + (m1i - x1i) ** 2)
        )
        res_m = np.sqrt(
            ((m0r + x0r) ** 2 + (m0i + x0i) ** 2)
            + ((m1r + x1r) ** 2 + (m1i + x1i) ** 2)
        )
        nrm = np.sqrt((x0r * x0r + x0i * x0i) + (x1r * x1r + x1i * x1i))
        out.extend([res_p, res_m, nrm])
    return tuple(out)


def dirac_apply_shift(psi, e, m, px, py, pz, shift):
    """gamma_mu p^mu psi - shift psi, one momentum per row.

    Matrix entries E +- pz are evaluated through (m^2 + px^2 + py^2)/(E -+ pz)
    when the direct form would cancel, and every output component is a
    compensated four-term dot product, so the result stays accurate at
    pmag/m ratios of order 1e3.
    """
    psi = np.ascontiguousarray(psi, dtype=np.complex128)
    e = np.asarray(e, dtype=np.float64)
    m = np.asarray(m, dtype=np.float64)
    px = np.asarray(px, dtype=np.float64)
    py = np.asarray(py, dtype=np.float64)
    pz = np.asarray(pz, dtype=np.float64)
    shift = np.asarray(shift, dtype=np.float64)

    mt2 = m * m + (px * px + py * py)
    ezp = np.where(pz >= 0.0, e + pz, mt2 / (e - pz))
    ezm = np.where(pz <= 0.0, e - pz, mt2 / (e + pz))

    p0r, p0i = psi[:, 0].real.copy(), psi[:, 0].imag.copy()
    p1r, p1i = psi[:, 1].real.copy(), psi[:, 1].imag.copy()
    p2r, p2i = psi[:, 2].real.copy(), psi[:, 2].imag.copy()
    p3r, p3i = psi[:, 3].real.copy(), psi[:, 3].imag.copy()

    out = np.empty_like(psi)
    # top block: (E + sigma.p) acting on (psi2, psi3)
    out[:, 0] = _dot4(ezp, p2r, px, p3r, py, p3i, -shift, p0r) + 1j * _dot4(
        ezp, p2i, px, p3i, -py, p3r, -shift, p0i
    )
    out[:, 1] = _dot4(px, p2r, -py, p2i, ezm, p3r, -shift, p1r) + 1j * _dot4(
        px, p2i, py, p2r, ezm, p3i, -shift, p1i
    )
    # bottom block: (E - sigma.p) acting on (psi0, psi1)
    out[:, 2] = _dot4(ezm, p0r, -px, p1r, -py, p1i, -shift, p2r) + 1j * _dot4(
        ezm, p0i, -px, p1i, py, p1r, -shift, p2i
    )
    out[:, 3] = _dot4(-px, p0r, py, p0i, ezp, p1r, -shift, p3r) + 1j * _dot4(
        -px, p0i, -py, p0r, ezp, p1i, -shift, p3i
    )
    return out
