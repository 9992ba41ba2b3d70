"""Constructors for every bispinor family the workbench analyzes.

All constructors return :class:`BiSpinor` values carrying a
:class:`Provenance` record (family name, construction parameters, direction,
unboosted blocks) so that reports can state how a spinor was generated and
the parity operation can rebuild it at a reflected momentum.

Component conventions: a bispinor is (a, b, c, d) with right-handed block
(a, b) on top and left-handed block (c, d) below.  Helicity labels are
relative to the construction direction (theta, phi).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .algebra import (
    FourMomentum,
    angles_match,
    bloch_direction,
    boost_block,
    boost_factor,
)
from .errors import (
    DirectionMismatchError,
    MasslessError,
    SingularAngleError,
    ZeroSpinorError,
)

#: default scalar phases on the rest-frame helicity eigenstates; this pair is
#: the choice under which the charge-conjugation eigenspinor constructions
#: close.  Use (0, 0) for the parity-profile preset.
DEFAULT_PHASE_PLUS = 0.0
DEFAULT_PHASE_MINUS = math.pi

_POLE_TOL = 0.0  # singular angles are rejected exactly; callers may rotate coordinates


@dataclass(frozen=True, eq=False)
class Provenance:
    """How a bispinor was built: family, parameters and unboosted blocks."""

    family: str
    params: dict = field(default_factory=dict)
    theta: Optional[float] = None
    phi: Optional[float] = None
    momentum: Optional[FourMomentum] = None
    rest_right: Optional[tuple[complex, complex]] = None
    rest_left: Optional[tuple[complex, complex]] = None
    helicities: Optional[tuple[Optional[int], Optional[int]]] = None

    @property
    def direction(self) -> Optional[tuple[float, float]]:
        if self.theta is None:
            return None
        return (self.theta, self.phi)


@dataclass(frozen=True, eq=False)
class BiSpinor:
    """Four complex amplitudes in chiral ordering, right-handed block first."""

    a: complex
    b: complex
    c: complex
    d: complex
    provenance: Optional[Provenance] = None

    @property
    def array(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c, self.d], dtype=complex)

    @property
    def right(self) -> np.ndarray:
        return np.array([self.a, self.b], dtype=complex)

    @property
    def left(self) -> np.ndarray:
        return np.array([self.c, self.d], dtype=complex)

    @property
    def norm_sq(self) -> float:
        return (
            abs(self.a) ** 2 + abs(self.b) ** 2 + abs(self.c) ** 2 + abs(self.d) ** 2
        )

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    @staticmethod
    def from_array(arr, provenance: Optional[Provenance] = None) -> "BiSpinor":
        arr = np.asarray(arr, dtype=complex)
        if arr.shape != (4,):
            raise ValueError(f"expected 4 components, got shape {arr.shape}")
        return BiSpinor(complex(arr[0]), complex(arr[1]), complex(arr[2]),
                        complex(arr[3]), provenance)


def bispinor_from_blocks(right, left, provenance: Optional[Provenance] = None) -> BiSpinor:
    right = np.asarray(right, dtype=complex)
    left = np.asarray(left, dtype=complex)
    return BiSpinor(complex(right[0]), complex(right[1]),
                    complex(left[0]), complex(left[1]), provenance)


@dataclass(frozen=True)
class RestSpinorSpec:
    """Rest-frame helicity eigenstate: sign, direction, mass and scalar phase.

    ``phase=None`` selects the default for that helicity sign
    (DEFAULT_PHASE_PLUS / DEFAULT_PHASE_MINUS).
    """

    helicity: int
    theta: float
    phi: float
    m: float
    phase: Optional[float] = None

    def __post_init__(self):
        if self.helicity not in (1, -1):
            raise ValueError(f"helicity must be +1 or -1, got {self.helicity!r}")
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta!r}")

    @property
    def resolved_phase(self) -> float:
        if self.phase is not None:
            return self.phase
        return DEFAULT_PHASE_PLUS if self.helicity > 0 else DEFAULT_PHASE_MINUS


def rest_spinor(spec: RestSpinorSpec) -> np.ndarray:
    """Two-component rest spinor, sqrt(m)-normalized helicity eigenstate.

    Helicity +1: sqrt(m) e^{i phase} (cos(theta/2) e^{-i phi/2},
    sin(theta/2) e^{i phi/2}); helicity -1 swaps the trigonometric factors
    and flips the lower sign.  Vanishes in the massless limit because there
    is no rest frame to build it in.
    """
    if spec.m <= 0.0:
        raise MasslessError("rest spinor requires m > 0")
    half_t = 0.5 * spec.theta
    eph = complex(math.cos(0.5 * spec.phi), math.sin(0.5 * spec.phi))
    pref = math.sqrt(spec.m) * complex(
        math.cos(spec.resolved_phase), math.sin(spec.resolved_phase)
    )
    if spec.helicity > 0:
        return pref * np.array(
            [math.cos(half_t) * eph.conjugate(), math.sin(half_t) * eph]
        )
    return pref * np.array(
        [math.sin(half_t) * eph.conjugate(), -math.cos(half_t) * eph]
    )


def boosted_block(spec: RestSpinorSpec, handedness: str, p: FourMomentum) -> np.ndarray:
    """Rest spinor taken to momentum p by the chiral boost.

    The boost axis must coincide with the spinor's direction, so the boost
    acts as the scalar eigenfactor; this equals the matrix form
    ``boost_block(handedness, p) @ rest_spinor(spec)`` but stays accurate
    at large pmag/m.
    """
    if not angles_match(spec.theta, spec.phi, p.theta, p.phi):
        raise DirectionMismatchError(
            "momentum direction must equal the rest spinor direction"
        )
    if not math.isclose(spec.m, p.m, rel_tol=1e-12, abs_tol=0.0):
        raise DirectionMismatchError("mass of spec and momentum differ")
    return boost_factor(handedness, p, spec.helicity) * rest_spinor(spec)


def _helicity_fraction(sign: int, theta: float, phi: float) -> complex:
    # b/a ratio for a helicity eigenblock: +: sin t e^{i phi}/(1+cos t),
    # -: -sin t e^{i phi}/(1-cos t).  Rejects the pole of the chosen form.
    ct, st = math.cos(theta), math.sin(theta)
    eph = complex(math.cos(phi), math.sin(phi))
    if sign > 0:
        den = 1.0 + ct
        if den == 0.0 or theta == math.pi:
            raise SingularAngleError("helicity + form diverges at theta = pi")
        return st * eph / den
    den = 1.0 - ct
    if den == 0.0 or theta == 0.0:
        raise SingularAngleError("helicity - form diverges at theta = 0")
    return -st * eph / den


_PAIRS_SINGLE = {"++": 1, "--": -1}
_PAIRS_DUAL = {"+-": (1, -1), "-+": (-1, 1)}


def build_single_helicity(pair: str, a: complex, c: complex,
                          theta: float, phi: float) -> BiSpinor:
    """Bispinor whose two blocks carry the same helicity along (theta, phi).

    pair is "++" or "--"; a and c are the free amplitudes of the right and
    left blocks.  The dependent components follow the eigenvector ratio for
    the common helicity sign.
    """
    if pair not in _PAIRS_SINGLE:
        raise ValueError(f"pair must be '++' or '--', got {pair!r}")
    a, c = complex(a), complex(c)
    if a == 0 and c == 0:
        raise ZeroSpinorError("at least one of a, c must be nonzero")
    h = _PAIRS_SINGLE[pair]
    t = _helicity_fraction(h, theta, phi)
    prov = Provenance(
        family="single_helicity",
        params={"pair": pair, "a": a, "c": c},
        theta=theta,
        phi=phi,
        rest_right=(a, a * t),
        rest_left=(c, c * t),
        helicities=(h, h),
    )
    return BiSpinor(a, a * t, c, c * t, prov)


def build_dual_helicity(pair: str, a: complex, c: complex,
                        theta: float, phi: float) -> BiSpinor:
    """Bispinor whose blocks carry opposite helicities along (theta, phi).

    pair is "+-" (right block +, left block -) or "-+".  Both forms diverge
    at the poles, and a vanishing amplitude would degenerate the spinor to a
    single-block (class 6) shape, so a = 0 and c = 0 are rejected.
    """
    if pair not in _PAIRS_DUAL:
        raise ValueError(f"pair must be '+-' or '-+', got {pair!r}")
    a, c = complex(a), complex(c)
    if a == 0 or c == 0:
        raise ZeroSpinorError("dual-helicity amplitudes must both be nonzero")
    hr, hl = _PAIRS_DUAL[pair]
    tr = _helicity_fraction(hr, theta, phi)
    tl = _helicity_fraction(hl, theta, phi)
    prov = Provenance(
        family="dual_helicity",
        params={"pair": pair, "a": a, "c": c},
        theta=theta,
        phi=phi,
        rest_right=(a, a * tr),
        rest_left=(c, c * tl),
        helicities=(hr, hl),
    )
    return BiSpinor(a, a * tr, c, c * tl, prov)


def dual_helicity_partner(psi: BiSpinor) -> BiSpinor:
    """The dual-helicity spinor the Dirac operator maps psi onto.

    Flips the helicity pair and swaps the free amplitudes; gamma_mu p^mu
    sends each member of the pair onto a multiple of the other.
    """
    prov = psi.provenance
    if prov is None or prov.family != "dual_helicity":
        raise ValueError("partner is defined for dual_helicity spinors only")
    pair = prov.params["pair"]
    flipped = "-+" if pair == "+-" else "+-"
    partner = build_dual_helicity(
        flipped, prov.params["c"], prov.params["a"], prov.theta, prov.phi
    )
    if prov.momentum is not None:
        partner = boost_bispinor(partner, prov.momentum)
    return partner


def build_singular_form(b: complex, c: complex, d: complex) -> BiSpinor:
    """Singular-structure spinor (-b c conj(d)/|c|^2, b, c, d).

    The leading component is forced so that the scalar and pseudoscalar
    bilinears vanish identically; requires c != 0.
    """
    b, c, d = complex(b), complex(c), complex(d)
    if c == 0:
        raise ZeroSpinorError("singular form requires c != 0")
    a = -b * c * d.conjugate() / (abs(c) ** 2)
    right = (a, b)
    theta, phi = bloch_direction(right if (a != 0 or b != 0) else (c, d))
    prov = Provenance(
        family="singular_form",
        params={"b": b, "c": c, "d": d},
        theta=theta,
        phi=phi,
        rest_right=right,
        rest_left=(c, d),
    )
    return BiSpinor(a, b, c, d, prov)


def build_self_conjugate(sign: int, c: complex, d: complex) -> BiSpinor:
    """Eigenspinor of charge conjugation with eigenvalue sign.

    The right block is fixed by the left one: (-i s conj(d), i s conj(c), c, d)
    with s = sign, which satisfies C psi = sign psi exactly and forces
    |a| = |d|, |b| = |c|.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    c, d = complex(c), complex(d)
    if c == 0 and d == 0:
        raise ZeroSpinorError("left block (c, d) must be nonzero")
    a = -1j * sign * d.conjugate()
    b = 1j * sign * c.conjugate()
    theta, phi = bloch_direction((c, d))
    prov = Provenance(
        family="self_conjugate",
        params={"sign": sign, "c": c, "d": d},
        theta=theta,
        phi=phi,
        rest_right=(a, b),
        rest_left=(c, d),
        helicities=(-1, 1),  # left block sets the axis; Theta-conjugation flips it
    )
    return BiSpinor(a, b, c, d, prov)


def build_weyl(which: str, block) -> BiSpinor:
    """Single-block bispinor: the other chiral block is null.

    which is "right" or "left".  The stored direction is the Bloch direction
    of the nonzero block, along which that block has helicity +1.
    """
    if which not in ("right", "left"):
        raise ValueError(f"which must be 'right' or 'left', got {which!r}")
    blk = np.asarray(block, dtype=complex)
    if blk.shape != (2,):
        raise ValueError("block must have two components")
    if blk[0] == 0 and blk[1] == 0:
        raise ZeroSpinorError("block must be nonzero")
    theta, phi = bloch_direction(blk)
    b0, b1 = complex(blk[0]), complex(blk[1])
    if which == "right":
        comps = (b0, b1, 0j, 0j)
        hel = (1, None)
        rest_r, rest_l = (b0, b1), (0j, 0j)
    else:
        comps = (0j, 0j, b0, b1)
        hel = (None, 1)
        rest_r, rest_l = (0j, 0j), (b0, b1)
    prov = Provenance(
        family="weyl",
        params={"which": which, "block": (b0, b1)},
        theta=theta,
        phi=phi,
        rest_right=rest_r,
        rest_left=rest_l,
        helicities=hel,
    )
    return BiSpinor(*comps, prov)


def build_parity_linked(helicity: int, p: FourMomentum,
                        phase: Optional[float] = None) -> BiSpinor:
    """Dirac-type spinor: one rest eigenstate boosted into both chiral slots.

    Because the two representation spaces share the same rest block and are
    connected by opposite-handed boosts, the result satisfies
    gamma_mu p^mu psi = m psi.
    """
    spec = RestSpinorSpec(helicity, p.theta, p.phi, p.m, phase)
    rest = rest_spinor(spec)
    right = boost_factor("right", p, helicity) * rest
    left = boost_factor("left", p, helicity) * rest
    prov = Provenance(
        family="parity_linked",
        params={"helicity": helicity, "phase": spec.resolved_phase},
        theta=p.theta,
        phi=p.phi,
        momentum=p,
        rest_right=(complex(rest[0]), complex(rest[1])),
        rest_left=(complex(rest[0]), complex(rest[1])),
        helicities=(helicity, helicity),
    )
    return bispinor_from_blocks(right, left, prov)


def boost_bispinor(psi: BiSpinor, p: FourMomentum) -> BiSpinor:
    """Apply the chiral block boosts to a bispinor.

    If the spinor records a construction direction it must match the boost
    direction (helicity structure is only preserved along the spinor's own
    axis); already-boosted spinors are rejected.
    """
    if psi.is_zero():
        raise ZeroSpinorError("cannot boost the zero spinor")
    prov = psi.provenance
    if prov is not None and prov.momentum is not None:
        raise DirectionMismatchError("spinor already carries a momentum")
    if prov is not None and prov.theta is not None:
        if not angles_match(prov.theta, prov.phi, p.theta, p.phi):
            raise DirectionMismatchError(
                "boost direction must match the construction direction"
            )
    right = boost_block("right", p) @ psi.right
    left = boost_block("left", p) @ psi.left
    new_prov = None
    if prov is not None:
        new_prov = Provenance(
            family=prov.family,
            params=prov.params,
            theta=prov.theta,
            phi=prov.phi,
            momentum=p,
            rest_right=(psi.a, psi.b),
            rest_left=(psi.c, psi.d),
            helicities=prov.helicities,
        )
    return bispinor_from_blocks(right, left, new_prov)
