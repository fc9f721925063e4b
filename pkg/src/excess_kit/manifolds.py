"""Algebraic profiles of closed oriented 4-manifolds and their budgets.

A profile stores only the homeomorphism invariants the obstruction checks
consume: signature, Euler characteristic, and the first mod-2 Betti number.
Everything downstream is exact integer arithmetic on these three numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NegativeB2, SignatureExceedsRank

__all__ = [
    "ManifoldProfile",
    "BudgetReport",
    "validate_profile",
    "excess_budget",
    "plane_bound",
    "budget_report",
]


@dataclass(frozen=True)
class ManifoldProfile:
    """Invariants of a closed connected oriented 4-manifold.

    b1_f2 is the dimension of the first homology with mod-2 coefficients;
    the second mod-2 Betti number is determined by the Euler characteristic.
    """

    name: str
    signature: int
    euler_characteristic: int
    b1_f2: int

    @property
    def b2_f2(self) -> int:
        """Second mod-2 Betti number: chi - 2 + 2*b1."""
        return self.euler_characteristic - 2 + 2 * self.b1_f2


@dataclass(frozen=True)
class BudgetReport:
    """Derived rank and the per-family budgets attached to a profile."""

    b2_f2: int
    d_of_m: int
    b_of_m: int


def validate_profile(profile: ManifoldProfile) -> ManifoldProfile:
    """Reject profiles no closed oriented 4-manifold can realize.

    The intersection form lives on a lattice of rank at most b2_f2, so
    |signature| <= b2_f2, and b2_f2 itself cannot be negative. Returns the
    profile unchanged when both hold.
    """
    if profile.b1_f2 < 0:
        raise ValueError(f"{profile.name}: b1_f2 is negative ({profile.b1_f2})")
    b2 = profile.b2_f2
    if b2 < 0:
        raise NegativeB2(
            f"{profile.name}: b2_f2 = chi - 2 + 2*b1 = {b2} is negative"
        )
    if abs(profile.signature) > b2:
        raise SignatureExceedsRank(
            f"{profile.name}: |signature| = {abs(profile.signature)} exceeds b2_f2 = {b2}"
        )
    return profile


def excess_budget(profile: ManifoldProfile) -> int:
    """Excess budget D = 4*|signature| + 8*b1 + 4*chi - 8.

    Equal to 4*(|signature| + b2_f2); both forms are computed and must agree.
    """
    validate_profile(profile)
    direct = (
        4 * abs(profile.signature)
        + 8 * profile.b1_f2
        + 4 * profile.euler_characteristic
        - 8
    )
    via_b2 = 4 * (abs(profile.signature) + profile.b2_f2)
    if direct != via_b2:
        raise AssertionError(
            f"budget forms disagree for {profile.name}: {direct} != {via_b2}"
        )
    return direct


def plane_bound(profile: ManifoldProfile) -> int:
    """Family-size budget B = 2*(b2_f2 + D)."""
    return 2 * (profile.b2_f2 + excess_budget(profile))


def budget_report(profile: ManifoldProfile) -> BudgetReport:
    """Assemble the derived rank and both budgets for one profile."""
    d = excess_budget(profile)
    b2 = profile.b2_f2
    return BudgetReport(b2_f2=b2, d_of_m=d, b_of_m=2 * (b2 + d))
