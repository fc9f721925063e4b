"""Nonorientable surface records, tubing arithmetic, and sign classes.

A surface is carried by three numbers: its nonorientable genus g (so its
Euler characteristic is 2 - g), its twisted normal Euler number e, and its
mod-2 homology class as a bit vector. Tubing (ambient connected sum along
arcs) acts on these by plain addition and XOR; no geometry is represented.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DimensionMismatch, EmptyFamily, InvalidGenus
from .gf2 import Gf2Vector

__all__ = [
    "SurfaceDatum",
    "SurfaceFamily",
    "TubedSurface",
    "SignClass",
    "tube",
    "sign_class",
    "massey_admissible_set",
    "massey_check",
    "bundle_to_surface",
]


@dataclass(frozen=True)
class SurfaceDatum:
    """One nonorientable surface: genus, twisted normal Euler number, class."""

    genus: int
    euler_number: int
    mod2_class: Gf2Vector

    def __post_init__(self):
        if self.genus < 1:
            raise InvalidGenus(
                f"nonorientable genus must be >= 1, got {self.genus}"
            )

    @property
    def euler_characteristic(self) -> int:
        return 2 - self.genus


@dataclass(frozen=True)
class SurfaceFamily:
    """Ordered nonempty list of surfaces with classes in a common dimension.

    Disjointness and local flatness of the members are declarations made by
    whoever assembles the family; nothing here checks geometry.
    """

    ambient_dim: int
    members: tuple[SurfaceDatum, ...]

    def __post_init__(self):
        if not self.members:
            raise EmptyFamily("a surface family needs at least one member")
        for pos, s in enumerate(self.members, start=1):
            if s.mod2_class.dim != self.ambient_dim:
                raise DimensionMismatch(
                    f"member {pos} has class dimension {s.mod2_class.dim}, "
                    f"family ambient dimension is {self.ambient_dim}"
                )

    def __len__(self) -> int:
        return len(self.members)

    def euler_numbers(self) -> tuple[int, ...]:
        return tuple(s.euler_number for s in self.members)


@dataclass(frozen=True)
class TubedSurface:
    """Connected sum of a family: sums of g and e, XOR of classes."""

    genus: int
    euler_number: int
    euler_characteristic: int
    mod2_class: Gf2Vector

    def __post_init__(self):
        if self.genus < 1:
            raise InvalidGenus(
                f"nonorientable genus must be >= 1, got {self.genus}"
            )
        if self.euler_characteristic != 2 - self.genus:
            raise ValueError(
                f"euler_characteristic {self.euler_characteristic} != 2 - genus"
            )


class SignClass(enum.Enum):
    """Sign pattern of a family's Euler numbers.

    An all-zero list satisfies both one-sided conditions; it is reported as
    NonNegative, the canonical representative.
    """

    NON_NEGATIVE = "NonNegative"
    NON_POSITIVE = "NonPositive"
    MIXED = "Mixed"


def tube(family: SurfaceFamily) -> TubedSurface:
    """Tube a family into one connected surface.

    Genus, Euler number, and mod-2 class add (XOR for the class); the Euler
    characteristic drops by 2 per tube, and the result is checked against
    the closed form 2 - total genus.
    """
    r = len(family.members)
    total_genus = sum(s.genus for s in family.members)
    total_euler = sum(s.euler_number for s in family.members)
    chi = sum(s.euler_characteristic for s in family.members) - 2 * (r - 1)
    if chi != 2 - total_genus:
        raise AssertionError(
            f"euler characteristic mismatch: {chi} != 2 - {total_genus}"
        )
    cls = Gf2Vector.zero(family.ambient_dim)
    for s in family.members:
        cls ^= s.mod2_class
    return TubedSurface(
        genus=total_genus,
        euler_number=total_euler,
        euler_characteristic=chi,
        mod2_class=cls,
    )


def sign_class(family: SurfaceFamily) -> SignClass:
    """Classify the family's Euler numbers as one-sided or mixed.

    Whenever the result is not Mixed, |sum of e| equals sum of |e|; that
    no-cancellation identity is asserted before returning.
    """
    es = family.euler_numbers()
    all_nonneg = all(e >= 0 for e in es)
    all_nonpos = all(e <= 0 for e in es)
    if all_nonneg:
        tag = SignClass.NON_NEGATIVE
    elif all_nonpos:
        tag = SignClass.NON_POSITIVE
    else:
        return SignClass.MIXED
    if abs(sum(es)) != sum(abs(e) for e in es):
        raise AssertionError("one-sided family cancelled in the sum")
    return tag


def massey_admissible_set(genus: int) -> list[int]:
    """Euler numbers attainable by a genus-g surface in the 4-sphere.

    The set {-2g, -2g+4, ..., 2g}: g+1 values, symmetric about zero, all
    congruent to 2g mod 4 and bounded by 2g in absolute value.
    """
    if genus < 1:
        raise InvalidGenus(f"nonorientable genus must be >= 1, got {genus}")
    return list(range(-2 * genus, 2 * genus + 1, 4))


def massey_check(genus: int, euler_number: int) -> bool:
    """True iff the Euler number lies in the admissible set for this genus."""
    if genus < 1:
        raise InvalidGenus(f"nonorientable genus must be >= 1, got {genus}")
    return (
        abs(euler_number) <= 2 * genus
        and (euler_number - 2 * genus) % 4 == 0
    )


def bundle_to_surface(
    genus: int, twisted_euler: int, mod2_class: Gf2Vector
) -> SurfaceDatum:
    """Zero-section surface of a plane bundle with the given twisted Euler number.

    The bundle's twisted Euler number transfers unchanged to the embedded
    zero section; genus and class pass through as given.
    """
    if genus < 1:
        raise InvalidGenus(f"nonorientable genus must be >= 1, got {genus}")
    return SurfaceDatum(
        genus=genus, euler_number=twisted_euler, mod2_class=mod2_class
    )
