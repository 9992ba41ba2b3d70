"""Discrete-symmetry operations and Dirac-operator diagnostics.

Charge conjugation acts blockwise as (i Theta conj(lower), -i Theta
conj(upper)) and is an exact involution.  Parity is realized at the spinor
level as gamma0 composed with momentum reflection (intrinsic phase +1): the
rest blocks recorded in a spinor's provenance are re-boosted at the
reflected momentum, which swaps the handedness of the boost factors.  All
Dirac-operator residuals are normalized by m ||psi|| so that one threshold
covers every momentum scale.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import backend
from .algebra import FourMomentum, angles_match, boost_block, theta_conjugate
from .errors import MasslessError, ProvenanceError, ZeroSpinorError
from .factory import (
    DEFAULT_PHASE_MINUS,
    DEFAULT_PHASE_PLUS,
    BiSpinor,
    bispinor_from_blocks,
    dual_helicity_partner,
)
from .tolerances import DEFAULT_TOLERANCES, Tolerances


def charge_conjugate(psi: BiSpinor) -> BiSpinor:
    """Charge conjugation: off-diagonal +-i Theta blocks composed with
    complex conjugation.  Applying it twice returns the input exactly."""
    a, b, c, d = psi.a, psi.b, psi.c, psi.d
    return BiSpinor(
        -1j * d.conjugate(),
        1j * c.conjugate(),
        1j * b.conjugate(),
        -1j * a.conjugate(),
    )


def charge_conjugate_batch(psis: np.ndarray) -> np.ndarray:
    """Vectorized :func:`charge_conjugate` for an (N, 4) component array."""
    psis = np.asarray(psis, dtype=complex)
    out = np.empty_like(psis)
    out[:, 0] = -1j * np.conj(psis[:, 3])
    out[:, 1] = 1j * np.conj(psis[:, 2])
    out[:, 2] = 1j * np.conj(psis[:, 1])
    out[:, 3] = -1j * np.conj(psis[:, 0])
    return out


@dataclass(frozen=True)
class CEigenCheck:
    """Outcome of testing C psi = +-psi, with per-constraint residuals.

    ``constraints`` maps constraint names to normalized residuals:

    * ``norm_ad`` / ``norm_bc``  -- | |x|^2 - |y|^2 | / psi^dag psi for the
      component-norm conditions |a| = |d| and |b| = |c|
    * ``phase_ad_plus`` etc.     -- alignment of the component phases with
      the +1 or -1 eigenspinor pattern, magnitudes factored out

    A flag-dipole-style spinor typically satisfies the phase pattern of one
    branch while violating the norm conditions; ``violated`` names the
    offenders.
    """

    eigenvalue: Optional[int]
    residual_plus: float
    residual_minus: float
    constraints: dict

    @property
    def residual(self) -> float:
        return min(self.residual_plus, self.residual_minus)

    def violated(self, tol: Tolerances = DEFAULT_TOLERANCES) -> tuple:
        return tuple(
            name for name, value in sorted(self.constraints.items())
            if value > tol.exact
        )


def _phase_alignment(x: complex, y: complex) -> float:
    # 0 when x and y share a phase (magnitudes ignored); in [0, 2]
    ax, ay = abs(x), abs(y)
    if ax == 0.0 and ay == 0.0:
        return 0.0
    if ax == 0.0 or ay == 0.0:
        return 1.0
    return abs(x * ay - y * ax) / (ax * ay)


def c_eigen_check(psi: BiSpinor,
                  tol: Tolerances = DEFAULT_TOLERANCES) -> CEigenCheck:
    """Test whether psi is a charge-conjugation eigenspinor.

    On top of the eigen-residuals, the component constraints behind the
    eigenspinor structure are measured individually so a failure can name
    which condition broke.
    """
    if psi.is_zero():
        raise ZeroSpinorError("conjugacy of the zero spinor is undefined")
    arr = psi.array
    carr = charge_conjugate(psi).array
    nrm = float(np.linalg.norm(arr))
    res_plus = float(np.linalg.norm(carr - arr)) / nrm
    res_minus = float(np.linalg.norm(carr + arr)) / nrm
    eigenvalue: Optional[int] = None
    if res_plus <= tol.exact:
        eigenvalue = 1
    elif res_minus <= tol.exact:
        eigenvalue = -1
    a, b, c, d = psi.a, psi.b, psi.c, psi.d
    n2 = psi.norm_sq
    constraints = {
        "norm_ad": abs(abs(a) ** 2 - abs(d) ** 2) / n2,
        "norm_bc": abs(abs(b) ** 2 - abs(c) ** 2) / n2,
        "phase_ad_plus": _phase_alignment(a, -1j * d.conjugate()),
        "phase_bc_plus": _phase_alignment(b, 1j * c.conjugate()),
        "phase_ad_minus": _phase_alignment(a, 1j * d.conjugate()),
        "phase_bc_minus": _phase_alignment(b, -1j * c.conjugate()),
    }
    return CEigenCheck(eigenvalue, res_plus, res_minus, constraints)


def parity_apply(psi: BiSpinor, p: Optional[FourMomentum] = None) -> BiSpinor:
    """gamma0 composed with momentum reflection.

    Uses the rest blocks stored in the spinor's provenance: at the reflected
    momentum each block picks up the opposite-handed boost, and gamma0 then
    exchanges the blocks.  Raw spinors without provenance are rejected, and
    a supplied momentum must be the one the spinor was built at (or rest).
    """
    prov = psi.provenance
    if prov is None or prov.rest_right is None or prov.rest_left is None:
        raise ProvenanceError(
            "parity needs the construction record of the spinor; raw spinors "
            "cannot be rebuilt at the reflected momentum"
        )
    built_at = prov.momentum
    if p is not None:
        if built_at is None:
            if p.pmag != 0.0:
                raise ProvenanceError(
                    "spinor was not built at a momentum; parity at pmag > 0 "
                    "is undefined for it"
                )
        elif not (
            math.isclose(built_at.m, p.m, rel_tol=1e-12)
            and math.isclose(built_at.pmag, p.pmag, rel_tol=1e-12, abs_tol=1e-300)
            and angles_match(built_at.theta, built_at.phi, p.theta, p.phi)
        ):
            raise ProvenanceError("supplied momentum differs from the build momentum")
    if built_at is None or built_at.pmag == 0.0:
        # rest frame: reflection leaves the momentum unchanged, gamma0 only
        return BiSpinor(psi.c, psi.d, psi.a, psi.b, None)
    refl = built_at.reflected()
    right_new = boost_block("right", refl) @ np.asarray(prov.rest_right)
    left_new = boost_block("left", refl) @ np.asarray(prov.rest_left)
    return bispinor_from_blocks(left_new, right_new, None)  # gamma0 swap


def parity_eigen_check(psi: BiSpinor, p: Optional[FourMomentum] = None,
                       tol: Tolerances = DEFAULT_TOLERANCES):
    """(eigenvalue or None, residual) of psi under the parity operation."""
    par = parity_apply(psi, p).array
    arr = psi.array
    nrm = float(np.linalg.norm(arr))
    if nrm == 0.0:
        raise ZeroSpinorError("parity eigencheck of the zero spinor is undefined")
    res_plus = float(np.linalg.norm(par - arr)) / nrm
    res_minus = float(np.linalg.norm(par + arr)) / nrm
    if res_plus <= tol.exact:
        return 1, res_plus
    if res_minus <= tol.exact:
        return -1, res_minus
    return None, min(res_plus, res_minus)


def dirac_matrix(p: FourMomentum) -> np.ndarray:
    """gamma_mu p^mu as an explicit 4x4 matrix."""
    e = p.energy
    px, py, pz = p.vector
    mt2 = p.m * p.m + (px * px + py * py)
    ezp = e + pz if pz >= 0.0 else mt2 / (e - pz)
    ezm = e - pz if pz <= 0.0 else mt2 / (e + pz)
    pm = complex(px, -py)
    top = np.array([[ezp, pm], [pm.conjugate(), ezm]])
    bot = np.array([[ezm, -pm], [-pm.conjugate(), ezp]])
    z = np.zeros((2, 2), dtype=complex)
    return np.block([[z, top], [bot, z]])


def dirac_apply(psi: BiSpinor, p: FourMomentum,
                shift: float = 0.0) -> np.ndarray:
    """gamma_mu p^mu psi - shift psi via the compensated backend kernel."""
    px, py, pz = p.vector
    out = backend.dirac_apply_shift(
        psi.array[None, :],
        np.array([p.energy]),
        np.array([p.m]),
        np.array([px]),
        np.array([py]),
        np.array([pz]),
        np.array([shift]),
    )
    return out[0]


def dirac_residual(psi: BiSpinor, p: FourMomentum, sign: int = 1) -> float:
    """|| gamma_mu p^mu psi - sign m psi || / (m ||psi||).

    Zero for spinors obeying the Dirac dynamics with the chosen mass branch;
    at least one for dual-helicity spinors, whose Dirac image is orthogonal
    to them.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    if p.m <= 0.0:
        raise MasslessError("Dirac residual requires m > 0")
    if psi.is_zero():
        raise ZeroSpinorError("Dirac residual of the zero spinor is undefined")
    out = dirac_apply(psi, p, shift=sign * p.m)
    return float(np.linalg.norm(out)) / (p.m * float(np.linalg.norm(psi.array)))


def dirac_flip_residual(psi_from: BiSpinor, psi_onto: BiSpinor,
                        p: FourMomentum) -> float:
    """Collinearity defect of gamma_mu p^mu psi_from against psi_onto.

    || v - proj_w v || / ||v|| with v the Dirac image of psi_from and
    w = psi_onto; near zero confirms that the Dirac operator carries
    psi_from onto the line spanned by psi_onto.  For a dual-helicity spinor
    the partner with flipped helicity pair and swapped amplitudes makes this
    vanish in both directions (see :func:`factory.dual_helicity_partner`).
    """
    if psi_from.is_zero() or psi_onto.is_zero():
        raise ZeroSpinorError("flip residual needs two nonzero spinors")
    if p.m <= 0.0:
        raise MasslessError("flip residual requires m > 0 (the image vanishes "
                            "on the light cone)")
    v = dirac_apply(psi_from, p)
    w = psi_onto.array
    coeff = (np.conj(w) @ v) / (np.conj(w) @ w)
    vnorm = float(np.linalg.norm(v))
    return float(np.linalg.norm(v - coeff * w)) / vnorm


def theta_link_check(phi_left_rest, p: FourMomentum, zeta: complex = 1.0) -> float:
    """Residual of the Theta-conjugation route between the chiral spaces.

    Boosting a left-handed block and Theta-conjugating must equal
    Theta-conjugating first and boosting with the right-handed factor:
    zeta Theta conj(B_left block) = B_right (zeta Theta conj(block)).
    The unit phase zeta passes through both sides and cannot change the
    residual.
    """
    block = np.asarray(phi_left_rest, dtype=complex)
    if block[0] == 0 and block[1] == 0:
        raise ZeroSpinorError("theta-link check needs a nonzero block")
    if abs(abs(complex(zeta)) - 1.0) > 1e-12:
        raise ValueError("zeta must be a unit phase")
    lhs = complex(zeta) * theta_conjugate(boost_block("left", p) @ block)
    rhs = boost_block("right", p) @ (complex(zeta) * theta_conjugate(block))
    return float(np.linalg.norm(lhs - rhs)) / float(np.linalg.norm(lhs))


@dataclass(frozen=True, eq=False)
class SymmetryReport:
    """Residuals and verdicts for the discrete-symmetry diagnostics.

    Eigenvalues are reported only when the matching residual is below the
    exact-algebra tolerance; otherwise they are None and the residual still
    records how far the spinor is from the nearest eigenspinor.
    """

    parity_eigenvalue: Optional[int]
    parity_residual: Optional[float]
    c_eigenvalue: Optional[int]
    c_residual: float
    c_constraints: dict
    c_involution_residual: float
    dirac_residual_plus: Optional[float]
    dirac_residual_minus: Optional[float]
    dirac_flip_residual: Optional[float]
    theta_link_residual: Optional[float]
    phases: tuple
    findings: tuple = field(default_factory=tuple)


def symmetry_report(psi: BiSpinor, p: Optional[FourMomentum] = None,
                    tol: Tolerances = DEFAULT_TOLERANCES,
                    zeta1: complex = 1.0, zeta2: complex = 1.0,
                    theta1: float = DEFAULT_PHASE_PLUS,
                    theta2: float = DEFAULT_PHASE_MINUS) -> SymmetryReport:
    """Run every applicable symmetry diagnostic on one spinor.

    Checks that need information the input does not carry (parity without
    provenance, Dirac residuals without a momentum) are skipped with a
    finding rather than raised.
    """
    if psi.is_zero():
        raise ZeroSpinorError("symmetry report of the zero spinor is undefined")
    findings: list[str] = []

    cres = c_eigen_check(psi, tol)
    cc = charge_conjugate(charge_conjugate(psi)).array
    involution = float(np.linalg.norm(cc - psi.array)) / float(
        np.linalg.norm(psi.array)
    )

    parity_eigenvalue = None
    parity_residual = None
    try:
        parity_eigenvalue, parity_residual = parity_eigen_check(psi, p, tol)
    except ProvenanceError as exc:
        findings.append(f"parity check skipped: {exc}")

    dplus = dminus = None
    flip = None
    if p is None:
        findings.append("no momentum supplied; Dirac diagnostics skipped")
    elif p.m <= 0.0:
        findings.append("massless momentum; Dirac diagnostics skipped")
    else:
        dplus = dirac_residual(psi, p, 1)
        dminus = dirac_residual(psi, p, -1)
        prov = psi.provenance
        if prov is not None and prov.family == "dual_helicity":
            partner = dual_helicity_partner(psi)
            flip = dirac_flip_residual(psi, partner, p)

    theta_link = None
    if p is None:
        findings.append("no momentum supplied; theta-link check skipped")
    elif p.m <= 0.0:
        findings.append("massless momentum; theta-link check skipped")
    elif psi.c == 0 and psi.d == 0:
        findings.append("left block is null; theta-link check skipped")
    else:
        theta_link = theta_link_check(psi.left, p, zeta1)

    return SymmetryReport(
        parity_eigenvalue=parity_eigenvalue,
        parity_residual=parity_residual,
        c_eigenvalue=cres.eigenvalue,
        c_residual=cres.residual,
        c_constraints=cres.constraints,
        c_involution_residual=involution,
        dirac_residual_plus=dplus,
        dirac_residual_minus=dminus,
        dirac_flip_residual=flip,
        theta_link_residual=theta_link,
        phases=(theta1, theta2, complex(zeta1), complex(zeta2)),
        findings=tuple(findings),
    )
