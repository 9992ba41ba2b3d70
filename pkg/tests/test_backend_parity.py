"""The compiled and pure kernels must agree bit for bit.

Golden reports and the determinism contract rely on this: a report generated
on one install must match byte-wise on another regardless of which backend
got selected.
"""
import numpy as np
import pytest

from spinorlab.backend import available_backends

BACKENDS = available_backends()

pytestmark = pytest.mark.skipif(
    len(BACKENDS) < 2, reason="compiled extension not built"
)


@pytest.fixture(scope="module")
def corpus():
    rng = np.random.default_rng(7)
    n = 5000
    psis = rng.uniform(-1, 1, size=(n, 4)) + 1j * rng.uniform(-1, 1, size=(n, 4))
    m = np.exp(rng.uniform(np.log(0.1), np.log(10), size=n))
    pmag = m * np.exp(rng.uniform(np.log(1e-3), np.log(1e3), size=n))
    theta = np.arccos(rng.uniform(-1, 1, size=n))
    phi = rng.uniform(0, 2 * np.pi, size=n)
    e = np.hypot(m, pmag)
    px = pmag * np.sin(theta) * np.cos(phi)
    py = pmag * np.sin(theta) * np.sin(phi)
    pz = pmag * np.cos(theta)
    shift = rng.uniform(-2, 2, size=n) * m
    return psis, e, m, px, py, pz, shift, theta, phi


def test_bilinears_bitwise(corpus):
    psis = corpus[0]
    for lhs, rhs in zip(
        BACKENDS["pure"].bilinears(psis), BACKENDS["compiled"].bilinears(psis)
    ):
        np.testing.assert_array_equal(lhs, rhs)


def test_dirac_apply_bitwise(corpus):
    psis, e, m, px, py, pz, shift, _, _ = corpus
    lhs = BACKENDS["pure"].dirac_apply_shift(psis, e, m, px, py, pz, shift)
    rhs = BACKENDS["compiled"].dirac_apply_shift(psis, e, m, px, py, pz, shift)
    np.testing.assert_array_equal(lhs, rhs)


def test_helicity_residuals_bitwise(corpus):
    psis, _, _, _, _, _, _, theta, phi = corpus
    ct = np.cos(theta)
    sre = np.sin(theta) * np.cos(phi)
    sim = np.sin(theta) * np.sin(phi)
    for lhs, rhs in zip(
        BACKENDS["pure"].helicity_residuals(psis, ct, sre, sim),
        BACKENDS["compiled"].helicity_residuals(psis, ct, sre, sim),
    ):
        np.testing.assert_array_equal(lhs, rhs)


def test_compensated_dirac_apply_beats_plain_matmul():
    # at high boost the kernel's compensated products keep the worst-case
    # residual of Dirac-type spinors below plain matrix evaluation
    from spinorlab import FourMomentum, build_parity_linked, dirac_matrix, dirac_residual

    rng = np.random.default_rng(13)
    worst_kernel = worst_plain = 0.0
    for _ in range(100):
        p = FourMomentum(1.0, 1e3, float(np.arccos(rng.uniform(-1, 1))),
                         float(rng.uniform(0, 2 * np.pi)))
        psi = build_parity_linked(1, p)
        worst_kernel = max(worst_kernel, dirac_residual(psi, p, 1))
        plain = np.linalg.norm(
            dirac_matrix(p) @ psi.array - psi.array
        ) / np.linalg.norm(psi.array)
        worst_plain = max(worst_plain, plain)
    assert worst_kernel < 1e-12
    assert worst_kernel < worst_plain
