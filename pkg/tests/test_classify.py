"""Lounesto class decision tree and helicity profiling."""
import math

import numpy as np
import pytest

import oracles
from conftest import random_bispinor
from spinorlab import (
    BiSpinor,
    ZeroSpinorError,
    bilinear_set,
    build_dual_helicity,
    build_self_conjugate,
    build_single_helicity,
    build_weyl,
    classify_report,
    helicity_profile,
    lounesto_class,
)
from spinorlab.bilinears import BilinearSet
from spinorlab.classify import (
    ANNOTATION_CLASS6,
    ANNOTATION_DUAL,
    ANNOTATION_SINGLE,
    CATEGORY_DUAL,
    CATEGORY_NON_EIGEN,
    CATEGORY_NOT_WELL_DEFINED,
    CATEGORY_SINGLE,
    HelicityProfile,
    helicity_categories,
)


class TestLounestoClass:
    @pytest.mark.parametrize(
        "psi,expected",
        [
            (BiSpinor(1, 0, 1, 0), 2),
            (BiSpinor(-1j, 0, 0, 1), 5),
            (BiSpinor(1, 0, 0, 0), 6),
        ],
    )
    def test_pinned_examples(self, psi, expected):
        assert lounesto_class(bilinear_set(psi)).index == expected
        assert oracles.brute_force_class(psi.array) == expected

    def test_matches_brute_force_on_random_spinors(self, rng):
        for _ in range(500):
            psi = random_bispinor(rng)
            got = lounesto_class(bilinear_set(psi)).index
            assert got == oracles.brute_force_class(psi.array)

    def test_annotations(self):
        from spinorlab import LounestoClass

        for idx, note in [(1, ANNOTATION_SINGLE), (2, ANNOTATION_SINGLE),
                          (3, ANNOTATION_SINGLE), (4, ANNOTATION_DUAL),
                          (5, ANNOTATION_DUAL), (6, ANNOTATION_CLASS6)]:
            assert LounestoClass(idx).annotation == note
        assert LounestoClass(None).annotation == "unclassifiable"

    def test_unclassifiable_pattern_returns_none(self):
        degenerate = BilinearSet(
            sigma=0.0, omega=0.0, j=np.array([1.0, 0, 0, 0]),
            k=np.zeros(4), s=np.zeros(6),
        )
        assert lounesto_class(degenerate).index is None

    def test_scale_invariance_of_class(self, rng):
        for _ in range(100):
            psi = random_bispinor(rng)
            lam = complex(*rng.normal(size=2))
            if abs(lam) < 1e-3:
                continue
            scaled = BiSpinor(*(lam * psi.array))
            assert (
                lounesto_class(bilinear_set(psi)).index
                == lounesto_class(bilinear_set(scaled)).index
            )

    def test_steering_rule(self, rng):
        # conj(a)*c real -> class 2, imaginary -> class 3, generic -> class 1
        for _ in range(200):
            t = math.acos(rng.uniform(-0.99, 0.99))
            f = rng.uniform(0, 2 * math.pi)
            a = complex(*rng.normal(size=2))
            if abs(a) < 0.1:
                continue
            rho = rng.uniform(0.2, 2.0)
            for c, expected in [
                (a * (1.0 + 0.7j), 1),
                (rho * a, 2),
                (1j * rho * a, 3),
            ]:
                psi = build_single_helicity("++", a, c, t, f)
                assert lounesto_class(bilinear_set(psi)).index == expected
                assert oracles.brute_force_class(psi.array) == expected


class TestHelicityProfile:
    def test_single_helicity_profile(self):
        psi = build_single_helicity("++", 1.0, 2.0 + 1j, 1.0, 0.3)
        prof = helicity_profile(psi, 1.0, 0.3)
        assert (prof.right, prof.left) == ("plus", "plus")
        assert prof.category == CATEGORY_SINGLE
        assert prof.right_residual < 1e-12

    def test_dual_helicity_profile(self):
        psi = build_dual_helicity("+-", 1.0, 1.0, 1.0, 0.3)
        prof = helicity_profile(psi, 1.0, 0.3)
        assert (prof.right, prof.left) == ("plus", "minus")
        assert prof.category == CATEGORY_DUAL

    def test_weyl_profile_reports_nonnull_block_helicity(self):
        psi = build_weyl("right", (1.0, 0.0))
        prof = helicity_profile(psi, 0.0, 0.0)
        assert prof.right == "plus"
        assert prof.left == "null-block"
        assert prof.category == CATEGORY_NOT_WELL_DEFINED

    def test_self_conjugate_is_dual_along_bloch_axis(self, rng):
        for _ in range(50):
            c = complex(*rng.normal(size=2))
            d = complex(*rng.normal(size=2))
            if abs(c) < 1e-3 or abs(d) < 1e-3:
                continue
            psi = build_self_conjugate(1, c, d)
            t, f = psi.provenance.direction
            assert helicity_profile(psi, t, f).category == CATEGORY_DUAL

    def test_generic_spinor_not_eigen(self, rng):
        psi = BiSpinor(1.0, 0.5 + 0.2j, -0.3, 0.8j)
        prof = helicity_profile(psi, 0.7, 0.7)
        assert prof.category == CATEGORY_NON_EIGEN

    def test_zero_spinor_rejected(self):
        with pytest.raises(ZeroSpinorError):
            helicity_profile(BiSpinor(0, 0, 0, 0), 0.0, 0.0)

    def test_batch_categories_agree_with_scalar_rule(self, rng):
        states = rng.choice(np.array([0, 1, -1, 2], dtype=np.int8), size=(300, 2))
        names = {0: "null-block", 1: "plus", -1: "minus", 2: "not-eigen"}
        cats = helicity_categories(states[:, 0], states[:, 1])
        lookup = {
            CATEGORY_SINGLE: "single", CATEGORY_DUAL: "dual",
            CATEGORY_NOT_WELL_DEFINED: "not-well-defined",
            CATEGORY_NON_EIGEN: "non-eigen",
        }
        from spinorlab.classify import CATEGORY_NAMES

        for (r, l), code in zip(states, cats):
            prof = HelicityProfile(names[int(r)], names[int(l)], 0.0, 0.0)
            assert prof.category == CATEGORY_NAMES[int(code)]


class TestClassifyReport:
    def test_class2_consistent(self):
        psi = build_single_helicity("++", 1.0, 2.0, 1.2, 0.1)
        rep = classify_report(psi)
        assert rep.lounesto.index == 2
        assert rep.helicity.category == CATEGORY_SINGLE
        assert rep.findings == ()

    def test_class5_consistent(self):
        psi = build_self_conjugate(1, 1.0, 0.5 + 0.5j)
        rep = classify_report(psi)
        assert rep.lounesto.index == 5
        assert rep.helicity.category == CATEGORY_DUAL
        assert rep.findings == ()

    def test_random_regular_spinor_flagged_non_eigen(self, rng):
        while True:
            psi = random_bispinor(rng)
            rep = classify_report(psi, direction=(0.5, 0.5))
            if rep.lounesto.index in (1, 2, 3):
                break
        assert rep.helicity.category == CATEGORY_NON_EIGEN
        assert "helicity not aligned with supplied direction" in rep.findings

    def test_raw_spinor_without_direction_skips_profile(self):
        rep = classify_report(BiSpinor(1, 0, 1, 0))
        assert rep.helicity is None
        assert any("no direction supplied" in f for f in rep.findings)

    def test_profile_direction_defaults_to_provenance(self):
        psi = build_dual_helicity("-+", 0.5, 1.0, 0.9, 2.2)
        rep = classify_report(psi)
        assert rep.direction == (0.9, 2.2)
        assert rep.helicity.category == CATEGORY_DUAL
