"""Lounesto class assignment and per-block helicity profiling.

The six classes are decided by which of sigma, omega, K, S vanish:

====== ======== ======== ====== ====== =====================
class  sigma    omega    K      S      annotation
====== ======== ======== ====== ====== =====================
1      nonzero  nonzero  any    any    single-helicity
2      nonzero  0        any    any    single-helicity
3      0        nonzero  any    any    single-helicity
4      0        0        != 0   != 0   dual-helicity
5      0        0        0      != 0   dual-helicity
6      0        0        != 0   0      Not well defined
====== ======== ======== ====== ====== =====================

sigma = omega = K = S = 0 with J != 0 is algebraically impossible for a true
spinor, so that pattern is reported as unclassifiable together with the
measured bilinears for diagnosis rather than raised as an error.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import backend
from .bilinears import BilinearSet, bilinear_set, fpk_residuals
from .errors import ZeroSpinorError
from .factory import BiSpinor
from .tolerances import DEFAULT_TOLERANCES, Tolerances

ANNOTATION_SINGLE = "single-helicity"
ANNOTATION_DUAL = "dual-helicity"
ANNOTATION_CLASS6 = "Not well defined"
ANNOTATION_NONE = "unclassifiable"


@dataclass(frozen=True)
class LounestoClass:
    """Class index 1..6, or None when the zero pattern matches no class."""

    index: Optional[int]

    @property
    def annotation(self) -> str:
        if self.index in (1, 2, 3):
            return ANNOTATION_SINGLE
        if self.index in (4, 5):
            return ANNOTATION_DUAL
        if self.index == 6:
            return ANNOTATION_CLASS6
        return ANNOTATION_NONE


def _zero_scalar(x, scale):
    return np.abs(x) <= scale


def lounesto_classes(sigma, omega, j, k, s,
                     tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Vectorized decision tree; returns (N,) int8, 0 = unclassifiable."""
    scale = tol.eps_class * j[:, 0]
    sig0 = _zero_scalar(sigma, scale)
    om0 = _zero_scalar(omega, scale)
    k0 = np.max(np.abs(k), axis=1) <= scale
    s0 = np.max(np.abs(s), axis=1) <= scale
    out = np.zeros(len(sigma), dtype=np.int8)
    out[~sig0 & ~om0] = 1
    out[~sig0 & om0] = 2
    out[sig0 & ~om0] = 3
    singular = sig0 & om0
    out[singular & ~k0 & ~s0] = 4
    out[singular & k0 & ~s0] = 5
    out[singular & ~k0 & s0] = 6
    return out


def lounesto_class(bset: BilinearSet,
                   tol: Tolerances = DEFAULT_TOLERANCES) -> LounestoClass:
    """Class of one spinor's bilinear set; total and deterministic."""
    idx = lounesto_classes(
        np.array([bset.sigma]),
        np.array([bset.omega]),
        bset.j[None, :],
        bset.k[None, :],
        bset.s[None, :],
        tol,
    )[0]
    return LounestoClass(int(idx) if idx != 0 else None)


RIGHT_PLUS = "plus"
RIGHT_MINUS = "minus"
NULL_BLOCK = "null-block"
NOT_EIGEN = "not-eigen"

CATEGORY_SINGLE = "single"
CATEGORY_DUAL = "dual"
CATEGORY_NOT_WELL_DEFINED = "not-well-defined"
CATEGORY_NON_EIGEN = "non-eigen"


@dataclass(frozen=True)
class HelicityProfile:
    """Helicity verdict of each chiral block along a supplied direction.

    A block is a null block when its squared norm is below
    eps_class * psi^dag psi; otherwise it is plus/minus when the relative
    eigen-residual against sigma.n is below eps_helicity, else not-eigen.
    Residuals are NaN for null blocks.  For a class-6 spinor the nonzero
    block's helicity is still reported per block even though the category
    stays not-well-defined.
    """

    right: str
    left: str
    right_residual: float
    left_residual: float

    @property
    def category(self) -> str:
        states = (self.right, self.left)
        if (self.right == NULL_BLOCK) != (self.left == NULL_BLOCK):
            return CATEGORY_NOT_WELL_DEFINED
        eigen = {RIGHT_PLUS, RIGHT_MINUS}
        if self.right in eigen and self.left in eigen:
            return CATEGORY_SINGLE if self.right == self.left else CATEGORY_DUAL
        return CATEGORY_NON_EIGEN


def helicity_profiles(psis: np.ndarray, theta, phi,
                      tol: Tolerances = DEFAULT_TOLERANCES):
    """Vectorized block verdicts.

    Returns (right_state, left_state, right_res, left_res) where states are
    int8 codes: 0 null, +1 plus, -1 minus, 2 not-eigen.
    """
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    ct = np.cos(theta)
    st = np.sin(theta)
    sre = st * np.cos(phi)
    sim = st * np.sin(phi)
    rp, rm, rn, lp, lm, ln = backend.helicity_residuals(psis, ct, sre, sim)
    total = rn**2 + ln**2
    null_scale = np.sqrt(tol.eps_class * total)

    def _block(res_p, res_m, nrm):
        state = np.full(len(nrm), 2, dtype=np.int8)
        res = np.full(len(nrm), np.nan)
        null = nrm <= null_scale
        state[null] = 0
        live = ~null
        with np.errstate(invalid="ignore", divide="ignore"):
            rel_p = np.where(live, res_p / nrm, np.inf)
            rel_m = np.where(live, res_m / nrm, np.inf)
        plus = live & (rel_p < tol.eps_helicity)
        minus = live & (rel_m < tol.eps_helicity)
        state[plus] = 1
        state[minus] = -1
        res[plus] = rel_p[plus]
        res[minus] = rel_m[minus]
        nearest = live & ~plus & ~minus
        res[nearest] = np.minimum(rel_p, rel_m)[nearest]
        return state, res

    rstate, rres = _block(rp, rm, rn)
    lstate, lres = _block(lp, lm, ln)
    return rstate, lstate, rres, lres


#: integer category codes used by the batch helpers
CAT_SINGLE, CAT_DUAL, CAT_NOT_WELL_DEFINED, CAT_NON_EIGEN = 0, 1, 2, 3
CATEGORY_NAMES = {
    CAT_SINGLE: CATEGORY_SINGLE,
    CAT_DUAL: CATEGORY_DUAL,
    CAT_NOT_WELL_DEFINED: CATEGORY_NOT_WELL_DEFINED,
    CAT_NON_EIGEN: CATEGORY_NON_EIGEN,
}


def helicity_categories(rstate, lstate) -> np.ndarray:
    """Category codes from batch block states (same rules as the scalar
    :class:`HelicityProfile`.category)."""
    rstate = np.asarray(rstate)
    lstate = np.asarray(lstate)
    out = np.full(len(rstate), CAT_NON_EIGEN, dtype=np.int8)
    eigen_r = np.abs(rstate) == 1
    eigen_l = np.abs(lstate) == 1
    both = eigen_r & eigen_l
    out[both & (rstate == lstate)] = CAT_SINGLE
    out[both & (rstate != lstate)] = CAT_DUAL
    out[(rstate == 0) ^ (lstate == 0)] = CAT_NOT_WELL_DEFINED
    return out


_STATE_NAME = {0: NULL_BLOCK, 1: RIGHT_PLUS, -1: RIGHT_MINUS, 2: NOT_EIGEN}


def helicity_profile(psi: BiSpinor, theta: float, phi: float,
                     tol: Tolerances = DEFAULT_TOLERANCES) -> HelicityProfile:
    """Helicity profile of one spinor along (theta, phi)."""
    if psi.is_zero():
        raise ZeroSpinorError("helicity profile of the zero spinor is undefined")
    rs, ls, rr, lr = helicity_profiles(
        psi.array[None, :], np.array([theta]), np.array([phi]), tol
    )
    return HelicityProfile(
        _STATE_NAME[int(rs[0])], _STATE_NAME[int(ls[0])], float(rr[0]), float(lr[0])
    )


_CATEGORY_FOR_ANNOTATION = {
    ANNOTATION_SINGLE: CATEGORY_SINGLE,
    ANNOTATION_DUAL: CATEGORY_DUAL,
    ANNOTATION_CLASS6: CATEGORY_NOT_WELL_DEFINED,
}


@dataclass(frozen=True, eq=False)
class ClassifyReport:
    """Bilinears, constraint residuals, class and helicity in one record."""

    bilinears: BilinearSet
    fpk: np.ndarray
    lounesto: LounestoClass
    helicity: Optional[HelicityProfile]
    direction: Optional[tuple[float, float]]
    findings: tuple = field(default_factory=tuple)


def classify_report(psi: BiSpinor,
                    direction: Optional[tuple[float, float]] = None,
                    tol: Tolerances = DEFAULT_TOLERANCES) -> ClassifyReport:
    """Full classification record for one spinor.

    The helicity direction defaults to the constructor's; raw spinors with
    no supplied direction get no helicity profile (a direction will not be
    guessed) and the omission is recorded as a finding.  A mismatch between
    the class annotation and the measured helicity category is likewise a
    flagged finding, never an error: an arbitrary regular spinor need not be
    an eigenstate along any particular axis.
    """
    if psi.is_zero():
        raise ZeroSpinorError("cannot classify the zero spinor")
    findings: list[str] = []
    if direction is None and psi.provenance is not None:
        direction = psi.provenance.direction
    bset = bilinear_set(psi)
    fpk = fpk_residuals(bset)
    cls = lounesto_class(bset, tol)
    profile = None
    if direction is None:
        findings.append("no direction supplied; helicity profile skipped")
    else:
        profile = helicity_profile(psi, direction[0], direction[1], tol)
        expected = _CATEGORY_FOR_ANNOTATION.get(cls.annotation)
        if profile.category == CATEGORY_NON_EIGEN:
            findings.append("helicity not aligned with supplied direction")
        elif expected is not None and profile.category != expected:
            findings.append(
                f"class annotation '{cls.annotation}' does not match measured "
                f"helicity category '{profile.category}'"
            )
    if cls.index is None:
        findings.append(
            "all of sigma, omega, K, S test zero with J != 0: numerically "
            "degenerate input"
        )
    return ClassifyReport(bset, fpk, cls, profile, direction, tuple(findings))
