"""Centralized floating-point comparison thresholds.

All zero tests on bilinear quantities are relative to psi^dag psi (they are
homogeneous of degree two in the spinor), so the thresholds are scale-free.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    #: absolute threshold for exact-algebra checks (matrix identities, eigenvalues)
    exact: float = 1e-12
    #: a bilinear quantity q counts as zero iff |q| <= eps_class * (psi^dag psi);
    #: vectors and tensors use the max-norm of their components
    eps_class: float = 1e-9
    #: relative eigen-residual below which a block counts as a helicity eigenvector
    eps_helicity: float = 1e-9


DEFAULT_TOLERANCES = Tolerances()
