"""Stable homotopy groups of the classical families via Bott periodicity."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .cartan import CartanClass, CartanGroup


@dataclass(frozen=True)
class FGAbelianGroup:
    """Z^free_rank + Z_t1 + Z_t2 + ... with t1 | t2 | ..."""

    free_rank: int = 0
    torsion: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        t = tuple(int(x) for x in self.torsion)
        if any(x < 2 for x in t):
            raise ValueError("torsion coefficients must be >= 2")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"torsion {t} is not in divisibility order")
        object.__setattr__(self, "torsion", t)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        if self.is_trivial:
            return "0"
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z_{t}" for t in self.torsion)
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: dict) -> FGAbelianGroup:
        return cls(int(data["free_rank"]), tuple(data["torsion"]))


ZERO = FGAbelianGroup()
Z = FGAbelianGroup(1)
Z2 = FGAbelianGroup(0, (2,))


class StableFamily(str, Enum):
    U = "U"
    O = "O"
    Sp = "Sp"


# pi_i for i = 0 .. period-1
BOTT_TABLES: dict[StableFamily, tuple[FGAbelianGroup, ...]] = {
    StableFamily.U: (ZERO, Z),
    StableFamily.O: (Z2, Z2, ZERO, Z, ZERO, ZERO, ZERO, Z),
    StableFamily.Sp: (ZERO, ZERO, ZERO, Z, Z2, Z2, ZERO, Z),
}


class HomotopyError(Exception):
    pass


class OutsideStableRange(HomotopyError):
    def __init__(self, k: int, bound: int, group: CartanGroup | None = None):
        self.k = k
        self.bound = bound
        self.group = group
        where = f" for {group}" if group is not None else ""
        super().__init__(f"pi_{k} is outside the stable range k <= {bound}{where}")

    def to_json(self) -> dict:
        return {
            "error": "OutsideStableRange",
            "k": self.k,
            "bound": self.bound,
            "group": None if self.group is None else self.group.name,
        }


class UnsupportedGroup(HomotopyError):
    def __init__(self, group: CartanGroup):
        self.group = group
        super().__init__(f"no stable-range bound available for {group} (class C)")

    def to_json(self) -> dict:
        return {"error": "UnsupportedGroup", "group": self.group.name}


def stable_range_bound(g: CartanGroup) -> int:
    """Largest k with pi_k(g) already stable: 2m-1 for SU(m), m-2 for SO(m)."""
    if g.cls is CartanClass.A:
        return 2 * g.matrix_size - 1
    if g.cls in (CartanClass.B, CartanClass.D):
        return g.matrix_size - 2
    raise UnsupportedGroup(g)


def stable_pi(family: StableFamily, k: int) -> FGAbelianGroup:
    if k < 0:
        raise ValueError("k must be nonnegative")
    table = BOTT_TABLES[StableFamily(family)]
    return table[k % len(table)]


def pi(g: CartanGroup, k: int) -> FGAbelianGroup:
    """pi_k(g) inside the stable range; refuses to extrapolate outside it."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    bound = stable_range_bound(g)
    if k > bound:
        raise OutsideStableRange(k, bound, g)
    if g.cls is CartanClass.A:
        # SU(m) is connected and simply connected; the U table only agrees from k = 2.
        if k < 2:
            return ZERO
        return stable_pi(StableFamily.U, k)
    return stable_pi(StableFamily.O, k)
