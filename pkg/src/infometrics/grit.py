"""Structural complexity and representational information of Boolean categories.

The categorical invariance phi is taken as the Euclidean norm of the
per-dimension toggle invariances: for dimension i, the fraction of members
whose copy with bit i flipped is also a member. Structural complexity is
``|F| * exp(-k * phi**2)`` with ``k = 2/D`` by default.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    EmptyCategory,
    NotAMember,
    NotASubset,
    TooSmall,
    ValidationError,
    ZeroBaseComplexity,
)

Member = tuple[int, ...]


@dataclass(frozen=True)
class BooleanCategory:
    dimensions_D: int
    members: frozenset[Member]

    def __init__(self, dimensions_D: int, members: Iterable[Sequence[int]] = ()):
        if dimensions_D < 1:
            raise ValidationError(f"dimensions must be >= 1, got {dimensions_D}")
        seen: list[Member] = []
        for m in members:
            vec = tuple(int(b) for b in m)
            if len(vec) != dimensions_D:
                raise ValidationError(f"member {list(m)} has length {len(vec)}, expected {dimensions_D}")
            if any(b not in (0, 1) for b in vec):
                raise ValidationError(f"member {list(m)} is not a binary vector")
            seen.append(vec)
        if len(set(seen)) != len(seen):
            raise ValidationError("category members must be distinct")
        object.__setattr__(self, "dimensions_D", dimensions_D)
        object.__setattr__(self, "members", frozenset(seen))

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return tuple(x) in self.members

    def sorted_members(self) -> list[Member]:
        return sorted(self.members)

    def without(self, x: Sequence[int]) -> BooleanCategory:
        return BooleanCategory(self.dimensions_D, self.members - {tuple(x)})

    @classmethod
    def from_dict(cls, raw: dict) -> BooleanCategory:
        try:
            return cls(int(raw["dimensions"]), raw["members"])
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"category needs 'dimensions' and 'members': {exc}") from None

    def to_dict(self) -> dict:
        return {"dimensions": self.dimensions_D, "members": [list(m) for m in self.sorted_members()]}


@dataclass(frozen=True)
class StructuralAssessment:
    partial_invariances: tuple[float, ...]
    phi: float
    k_scaling: float
    psi: float


def _toggle(x: Member, i: int) -> Member:
    return x[:i] + (1 - x[i],) + x[i + 1 :]


def partial_invariances(F: BooleanCategory) -> tuple[float, ...]:
    if not F.members:
        raise EmptyCategory("partial invariances are undefined for an empty category")
    n = len(F)
    return tuple(
        sum(_toggle(x, i) in F.members for x in F.members) / n for i in range(F.dimensions_D)
    )


def default_k(D: int) -> float:
    return 2.0 / D


def structural_complexity(F: BooleanCategory, k: float | None = None) -> StructuralAssessment:
    k = default_k(F.dimensions_D) if k is None else k
    if not k > 0:
        raise ValidationError(f"scaling k must be > 0, got {k}")
    if not F.members:
        return StructuralAssessment((0.0,) * F.dimensions_D, 0.0, k, 0.0)
    inv = partial_invariances(F)
    phi_sq = math.fsum(v * v for v in inv)
    return StructuralAssessment(inv, math.sqrt(phi_sq), k, len(F) * math.exp(-k * phi_sq))


def psi(F: BooleanCategory, k: float | None = None) -> float:
    return structural_complexity(F, k).psi


def representational_information(
    F: BooleanCategory, F_prime: BooleanCategory, k: float | None = None
) -> float:
    """Relative change in structural complexity for F -> F' with F' a subset of F.

    k defaults to 2/D of the parent category and is shared by both sides.
    """
    if F_prime.dimensions_D != F.dimensions_D or not F_prime.members <= F.members:
        raise NotASubset("transformed category must be a subset of the original")
    if not F.members:
        raise ZeroBaseComplexity("original category is empty (psi = 0)")
    k = default_k(F.dimensions_D) if k is None else k
    base = psi(F, k)
    return (psi(F_prime, k) - base) / base


def element_information(F: BooleanCategory, x: Sequence[int], k: float | None = None) -> float:
    x = tuple(x)
    if x not in F.members:
        raise NotAMember(f"{list(x)} is not a member of the category")
    if len(F) < 2:
        raise TooSmall("element information needs a category with at least 2 members")
    return representational_information(F, F.without(x), k)


def rank_elements(F: BooleanCategory, k: float | None = None) -> list[tuple[Member, float]]:
    """Members with their element information, most valuable (lowest) first."""
    if len(F) < 2:
        raise TooSmall("ranking needs a category with at least 2 members")
    scored = [(x, element_information(F, x, k)) for x in F.sorted_members()]
    # rounding keeps values equal up to float noise tied, so lexicographic order decides
    return sorted(scored, key=lambda item: (round(item[1], 12), item[0]))


def all_categories(D: int) -> Iterable[BooleanCategory]:
    """Every subset of {0,1}^D, 2^(2^D) of them."""
    points = [tuple((v >> (D - 1 - i)) & 1 for i in range(D)) for v in range(2**D)]
    for mask in range(2 ** len(points)):
        yield BooleanCategory(D, [p for j, p in enumerate(points) if mask >> j & 1])
