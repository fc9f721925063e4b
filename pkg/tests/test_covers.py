"""Branched double cover invariants and the signature-rank consistency test."""

from __future__ import annotations

import random

import pytest

from excess_kit.covers import (
    CoverProfile,
    branched_double_cover,
    consistency_check,
    signature_defect,
)
from excess_kit.errors import (
    DimensionMismatch,
    NotModTwoNull,
    OddEulerNumber,
)
from excess_kit.gf2 import Gf2Vector
from excess_kit.manifolds import ManifoldProfile
from excess_kit.surfaces import TubedSurface

from helpers import random_valid_profile

S4 = ManifoldProfile("s4", 0, 2, 0)


def branch(g: int, e: int, dim: int = 0, bits: int = 0) -> TubedSurface:
    return TubedSurface(
        genus=g,
        euler_number=e,
        euler_characteristic=2 - g,
        mod2_class=Gf2Vector(dim, bits),
    )


def test_sphere_examples():
    c = branched_double_cover(S4, branch(1, 2))
    assert (c.sigma_n, c.chi_n, c.ramification_euler) == (-1, 3, 1)
    assert (c.b1_f2_upper, c.b2_f2_upper) == (0, 1)

    c2 = branched_double_cover(S4, branch(2, 0))
    assert (c2.sigma_n, c2.chi_n, c2.ramification_euler) == (0, 4, 0)
    assert c2.b2_f2_upper == 2


def test_odd_euler_number_rejected():
    with pytest.raises(OddEulerNumber):
        branched_double_cover(S4, branch(1, 3))
    with pytest.raises(OddEulerNumber):
        branched_double_cover(S4, branch(2, -7))


def test_nonzero_class_rejected():
    p = ManifoldProfile("one", 0, 3, 0)  # b2_f2 = 1
    with pytest.raises(NotModTwoNull):
        branched_double_cover(p, branch(1, 2, dim=1, bits=1))


def test_dimension_mismatch_rejected():
    with pytest.raises(DimensionMismatch):
        branched_double_cover(S4, branch(1, 2, dim=3))


def test_identities_on_random_inputs():
    rng = random.Random(271828)
    for _ in range(2000):
        m = random_valid_profile(rng)
        g = rng.randint(1, 10)
        e = 2 * rng.randint(-30, 30)
        cover = branched_double_cover(m, branch(g, e, dim=m.b2_f2))
        assert cover.sigma_n == 2 * m.signature - e // 2
        assert cover.ramification_euler * 2 == e
        assert cover.chi_n == 2 * m.euler_characteristic - (2 - g)
        assert cover.chi_n + (2 - g) == 2 * m.euler_characteristic
        assert abs(cover.sigma_n - 2 * m.signature) == signature_defect(e)
        assert cover.b1_f2_upper == 2 * m.b1_f2
        assert (
            cover.b2_f2_upper
            == 2 * m.euler_characteristic + g - 4 + 4 * m.b1_f2
        )


def test_signature_defect():
    assert signature_defect(4) == 2
    assert signature_defect(0) == 0
    assert signature_defect(-6) == 3
    with pytest.raises(OddEulerNumber):
        signature_defect(5)
    with pytest.raises(OddEulerNumber):
        signature_defect(-11)


def test_consistency_check():
    ok = consistency_check(CoverProfile(-1, 3, 0, 1, 1))
    assert ok.ok and ok.witness is None
    bad = consistency_check(CoverProfile(-3, 3, 0, 1, 0))
    assert not bad.ok and bad.witness == "3 > 1"
    edge = consistency_check(CoverProfile(0, 2, 0, 0, 0))
    assert edge.ok
