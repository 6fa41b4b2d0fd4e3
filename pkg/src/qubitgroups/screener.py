"""Three-stage screening of group pairs: dimension, Poincaré polynomial, stable homotopy.

Passing all three stages only yields a *candidate* homeomorphism. B_n and C_n,
for instance, agree on every stage that is run here.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cartan import CartanClass, CartanGroup, catalog, dimension
from .diophantine import QubitMatch, qubit_rotation_matches
from .homotopy import FGAbelianGroup, HomotopyError, pi, stable_range_bound
from .poincare import PolyComparison, poincare_polynomial, polynomials_equal


class Verdict(str, Enum):
    DIMENSION_MISMATCH = "DimensionMismatch"
    TOPOLOGICALLY_DISTINCT = "TopologicallyDistinct"
    CANDIDATE_HOMEOMORPHISM = "CandidateHomeomorphism"


@dataclass(frozen=True)
class HomotopyWitness:
    k: int
    value_a: FGAbelianGroup
    value_b: FGAbelianGroup


@dataclass(frozen=True)
class ScreeningReport:
    group_a: CartanGroup
    group_b: CartanGroup
    dim_a: int
    dim_b: int
    poly: PolyComparison
    # (2, K) where K is the smaller stable bound; None when the stage was skipped
    homotopy_range: tuple[int, int] | None
    homotopy_witness: HomotopyWitness | None

    @property
    def dims_match(self) -> bool:
        return self.dim_a == self.dim_b

    @property
    def poly_equal(self) -> bool:
        return self.poly.equal

    @property
    def verdict(self) -> Verdict:
        if not self.dims_match:
            return Verdict.DIMENSION_MISMATCH
        if not self.poly.equal or self.homotopy_witness is not None:
            return Verdict.TOPOLOGICALLY_DISTINCT
        return Verdict.CANDIDATE_HOMEOMORPHISM

    def to_json(self) -> dict:
        diff = None
        if not self.poly.equal:
            diff = {"degree": self.poly.degree, "a": str(self.poly.a), "b": str(self.poly.b)}
        wit = None
        if self.homotopy_witness is not None:
            w = self.homotopy_witness
            wit = {"k": w.k, "a": w.value_a.to_json(), "b": w.value_b.to_json()}
        return {
            "group_a": self.group_a.name,
            "group_b": self.group_b.name,
            "dims": [self.dim_a, self.dim_b],
            "dims_match": self.dims_match,
            "poly_equal": self.poly.equal,
            "poly_first_diff": diff,
            "homotopy_witness": wit,
            "homotopy_range": None if self.homotopy_range is None else list(self.homotopy_range),
            "verdict": self.verdict.value,
        }


def _common_stable_range(a: CartanGroup, b: CartanGroup) -> tuple[int, int] | None:
    try:
        top = min(stable_range_bound(a), stable_range_bound(b))
    except HomotopyError:
        return None
    if top < 2:
        return None
    return (2, top)


def screen(a: CartanGroup, b: CartanGroup) -> ScreeningReport:
    """Run every stage on (a, b), recording all results regardless of the verdict."""
    poly = polynomials_equal(poincare_polynomial(a), poincare_polynomial(b))
    krange = _common_stable_range(a, b)
    witness = None
    if krange is not None:
        # pi_k(SU) = pi_k(U) only from k = 2 on, hence the start of the range
        for k in range(krange[0], krange[1] + 1):
            va, vb = pi(a, k), pi(b, k)
            if va != vb:
                witness = HomotopyWitness(k, va, vb)
                break
    return ScreeningReport(a, b, dimension(a), dimension(b), poly, krange, witness)


def rotation_group(size: int) -> CartanGroup:
    """SO(size) as Cartan data (size odd -> B, even -> D)."""
    if size % 2:
        return CartanGroup(CartanClass.B, size // 2)
    return CartanGroup(CartanClass.D, size // 2)


def scan_qubit_rotations(max_n: int) -> list[tuple[QubitMatch, ScreeningReport]]:
    out = []
    for match in qubit_rotation_matches(max_n):
        su = CartanGroup(CartanClass.A, 2**match.n - 1)
        out.append((match, screen(su, rotation_group(match.N))))
    return out


def scan_class_pairs(class_x, class_y, max_rank: int) -> list[tuple[int, int]]:
    """Rank pairs (i, j) <= max_rank whose Poincaré polynomials coincide.

    Equal polynomials have equal degree, i.e. equal dimension, so only
    dimension-matched pairs are expanded.
    """
    class_x, class_y = CartanClass(class_x), CartanClass(class_y)
    if class_x is class_y:
        raise ValueError("class scan needs two distinct classes")
    if max_rank < 1:
        raise ValueError("max_rank must be >= 1")
    by_dim: dict[int, list[CartanGroup]] = {}
    for g in catalog(max_rank, (class_y,)):
        by_dim.setdefault(dimension(g), []).append(g)
    hits = []
    for gx in catalog(max_rank, (class_x,)):
        for gy in by_dim.get(dimension(gx), ()):
            if polynomials_equal(poincare_polynomial(gx), poincare_polynomial(gy)).equal:
                hits.append((gx.rank, gy.rank))
    return sorted(hits)
