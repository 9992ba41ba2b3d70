"""Fixed-size complex linear algebra for chiral bispinors.

Constant operators (Pauli matrices, gamma matrices, the antisymmetric 2x2
time-reversal matrix) plus the boost and rotation blocks that act on
two-component amplitudes.  Conventions used throughout the package:

* metric signature (+, -, -, -)
* chiral ordering with the right-handed block on top
* gamma0 = offdiag(I, I), gamma^k = [[0, -sigma_k], [sigma_k, 0]]
* gamma5 = i gamma0 gamma1 gamma2 gamma3 = diag(+1, +1, -1, -1)

Boost entries are evaluated through cancellation-free forms (``E - p`` is
rewritten as ``m^2 / (E + p)`` and friends) so that boosted spinors stay
accurate up to momentum/mass ratios of order 1e3.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import MasslessError

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
SIGMA = (SIGMA_X, SIGMA_Y, SIGMA_Z)

_I2 = np.eye(2, dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)

_GAMMA = (
    np.block([[_Z2, _I2], [_I2, _Z2]]),
    np.block([[_Z2, -SIGMA_X], [SIGMA_X, _Z2]]),
    np.block([[_Z2, -SIGMA_Y], [SIGMA_Y, _Z2]]),
    np.block([[_Z2, -SIGMA_Z], [SIGMA_Z, _Z2]]),
)
_GAMMA5 = np.diag([1.0, 1.0, -1.0, -1.0]).astype(complex)


def gamma(mu: int) -> np.ndarray:
    """Gamma matrix with index mu in {0, 1, 2, 3}, chiral basis."""
    if mu not in (0, 1, 2, 3):
        raise ValueError(f"gamma index must be in 0..3, got {mu!r}")
    return _GAMMA[mu].copy()


def gamma5() -> np.ndarray:
    """Chirality operator, +1 on the right-handed (top) block."""
    return _GAMMA5.copy()


def pauli_dot(theta: float, phi: float) -> np.ndarray:
    """sigma . n for the unit vector with polar angles (theta, phi).

    Hermitian and squares to the identity; its +1/-1 eigenvectors are the
    helicity eigenstates along that direction.
    """
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta!r}")
    ct, st = math.cos(theta), math.sin(theta)
    e = complex(math.cos(phi), math.sin(phi))
    return np.array([[ct, st * e.conjugate()], [st * e, -ct]], dtype=complex)


def wigner_theta() -> np.ndarray:
    """Antisymmetric 2x2 time-reversal matrix [[0, -1], [1, 0]]."""
    return np.array([[0.0, -1.0], [1.0, 0.0]], dtype=complex)


def theta_conjugate(block: np.ndarray) -> np.ndarray:
    """Theta . conj(block); flips the helicity of any sigma.n eigenvector."""
    b = np.asarray(block, dtype=complex)
    return np.array([-np.conj(b[1]), np.conj(b[0])])


def rotation_block(angle: float, axis) -> np.ndarray:
    """Spin-1/2 rotation cos(angle/2) I + i sin(angle/2) sigma.axis.

    The axis must be a unit 3-vector.  Unitary with determinant one; a full
    2 pi turn gives -identity.
    """
    n = np.asarray(axis, dtype=float)
    if n.shape != (3,) or abs(float(n @ n) - 1.0) > 1e-9:
        raise ValueError("axis must be a unit 3-vector")
    ns = n[0] * SIGMA_X + n[1] * SIGMA_Y + n[2] * SIGMA_Z
    half = 0.5 * angle
    return math.cos(half) * _I2 + 1j * math.sin(half) * ns


@dataclass(frozen=True)
class FourMomentum:
    """On-shell momentum (m, |p|, theta, phi) with E = sqrt(m^2 + |p|^2).

    The direction angles are retained even at pmag = 0, matching the
    rest-limit momentum used to label rest-frame spinors.
    """

    m: float
    pmag: float
    theta: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        if not (self.m >= 0.0 and math.isfinite(self.m)):
            raise ValueError(f"mass must be finite and >= 0, got {self.m!r}")
        if not (self.pmag >= 0.0 and math.isfinite(self.pmag)):
            raise ValueError(f"pmag must be finite and >= 0, got {self.pmag!r}")
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta!r}")
        if not math.isfinite(self.phi):
            raise ValueError("phi must be finite")

    @property
    def energy(self) -> float:
        return math.hypot(self.m, self.pmag)

    @property
    def direction(self) -> tuple[float, float]:
        return (self.theta, self.phi)

    @property
    def vector(self) -> np.ndarray:
        """Spatial momentum (px, py, pz)."""
        st, ct = math.sin(self.theta), math.cos(self.theta)
        return self.pmag * np.array([st * math.cos(self.phi), st * math.sin(self.phi), ct])

    @property
    def four_vector(self) -> np.ndarray:
        return np.concatenate([[self.energy], self.vector])

    def reflected(self) -> "FourMomentum":
        """Same energy and magnitude, spatial direction reversed."""
        return FourMomentum(self.m, self.pmag, math.pi - self.theta,
                            math.remainder(self.phi + math.pi, math.tau))


def minkowski_dot(u, v) -> float:
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3]


def _diag_entry(q: float, e: float, m: float, pxy2: float) -> float:
    # 1 + q/(E+m) for q in [-pmag, pmag]; for negative q the naive form
    # cancels at high boost, so use (E + m + q)/(E + m) with
    # E + q = (m^2 + pxy2)/(E - q), pxy2 = pmag^2 - q^2.
    if q >= 0.0:
        return 1.0 + q / (e + m)
    return (m + (m * m + pxy2) / (e - q)) / (e + m)


def _check_handedness(handedness: str) -> int:
    if handedness == "right":
        return 1
    if handedness == "left":
        return -1
    raise ValueError(f"handedness must be 'right' or 'left', got {handedness!r}")


def boost_block(handedness: str, p: FourMomentum) -> np.ndarray:
    """Pure boost acting on one chiral block.

    sqrt((E+m)/2m) (I + sigma.p/(E+m)) for the right-handed block and the
    sign-flipped generator for the left-handed one.  Right and left boosts
    at the same momentum are exact inverses of each other.
    """
    sign = _check_handedness(handedness)
    if p.m <= 0.0:
        raise MasslessError("boost requires m > 0")
    e, m = p.energy, p.m
    px, py, pz = p.vector
    pxy2 = px * px + py * py
    pref = math.sqrt((e + m) / (2.0 * m))
    off = complex(px, py) / (e + m)
    d0 = _diag_entry(sign * pz, e, m, pxy2)
    d1 = _diag_entry(-sign * pz, e, m, pxy2)
    return pref * np.array([[d0, sign * off.conjugate()], [sign * off, d1]])


def boost_factor(handedness: str, p: FourMomentum, helicity: int) -> float:
    """Scalar by which the boost multiplies a helicity eigenblock.

    For a block with sigma.p eigenvalue ``helicity * pmag`` the boost acts as
    multiplication by sqrt((E+m)/2m) (1 +- helicity pmag/(E+m)).
    """
    sign = _check_handedness(handedness)
    if helicity not in (1, -1):
        raise ValueError(f"helicity must be +1 or -1, got {helicity!r}")
    if p.m <= 0.0:
        raise MasslessError("boost requires m > 0")
    e, m = p.energy, p.m
    pref = math.sqrt((e + m) / (2.0 * m))
    return pref * _diag_entry(sign * helicity * p.pmag, e, m, 0.0)


def bloch_direction(block) -> tuple[float, float]:
    """Polar angles of the direction along which a 2-spinor has helicity +1."""
    b = np.asarray(block, dtype=complex)
    cross = np.conj(b[0]) * b[1]
    nx, ny = 2.0 * cross.real, 2.0 * cross.imag
    nz = (b[0].real ** 2 + b[0].imag ** 2) - (b[1].real ** 2 + b[1].imag ** 2)
    theta = math.atan2(math.hypot(nx, ny), nz)
    phi = math.atan2(ny, nx) % math.tau
    return (theta, phi)


def angles_match(t1: float, p1: float, t2: float, p2: float, tol: float = 1e-12) -> bool:
    """Whether two spherical directions coincide (phi compared modulo 2 pi)."""
    if abs(t1 - t2) > tol:
        return False
    if min(t1, t2) <= tol or max(t1, t2) >= math.pi - tol:
        return True  # at a pole the azimuth is immaterial
    return abs(math.remainder(p1 - p2, math.tau)) <= tol
