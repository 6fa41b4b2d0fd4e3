"""Classical compact simple Lie groups: Cartan class, rank, dimension, exponents."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class GroupNameError(ValueError):
    """Raised when a group name cannot be parsed into Cartan data."""


class NotSimpleError(GroupNameError):
    """The named group exists but is not simple (SO(2), SO(4), D1, D2)."""


class CartanClass(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


_MIN_RANK = {CartanClass.A: 1, CartanClass.B: 1, CartanClass.C: 1, CartanClass.D: 3}


@dataclass(frozen=True, order=True)
class CartanGroup:
    cls: CartanClass
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "cls", CartanClass(self.cls))
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise TypeError(f"rank must be an int, got {self.rank!r}")
        if self.rank < _MIN_RANK[self.cls]:
            if self.cls is CartanClass.D and self.rank >= 1:
                raise NotSimpleError(f"D{self.rank} is not simple")
            raise ValueError(f"rank {self.rank} too small for class {self.cls.value}")

    @property
    def name(self) -> str:
        """Physics name: SU(n+1), SO(2n+1), Sp(n) or SO(2n)."""
        r = self.rank
        if self.cls is CartanClass.A:
            return f"SU({r + 1})"
        if self.cls is CartanClass.B:
            return f"SO({2 * r + 1})"
        if self.cls is CartanClass.C:
            return f"Sp({r})"
        return f"SO({2 * r})"

    @property
    def cartan_name(self) -> str:
        return f"{self.cls.value}{self.rank}"

    @property
    def matrix_size(self) -> int:
        """The m in SU(m) / SO(m) / Sp(m)."""
        r = self.rank
        return {
            CartanClass.A: r + 1,
            CartanClass.B: 2 * r + 1,
            CartanClass.C: r,
            CartanClass.D: 2 * r,
        }[self.cls]

    def __str__(self):
        return self.name


_PHYSICS_RE = re.compile(r"^\s*(SU|SO|Sp)\s*\(\s*(\d+)\s*\)\s*$", re.IGNORECASE)
_CARTAN_RE = re.compile(r"^\s*([A-Za-z])\s*_?\s*(\d+)\s*$")


def parse_group(name: str) -> CartanGroup:
    """Parse ``SU(m)``, ``SO(m)``, ``Sp(r)`` or a Cartan label like ``B45``.

    >>> parse_group("SO(91)")
    CartanGroup(cls=<CartanClass.B: 'B'>, rank=45)
    """
    m = _PHYSICS_RE.match(name)
    if m:
        family, size = m.group(1).upper(), int(m.group(2))
        if family == "SU":
            if size < 2:
                raise GroupNameError(f"SU({size}) is trivial; need m >= 2")
            return CartanGroup(CartanClass.A, size - 1)
        if family == "SP":
            if size < 1:
                raise GroupNameError("Sp(0) is trivial; need r >= 1")
            return CartanGroup(CartanClass.C, size)
        if size == 2:
            raise NotSimpleError("SO(2) is abelian, not simple")
        if size == 4:
            raise NotSimpleError("SO(4) is not simple (D2 = A1 x A1)")
        if size < 2:
            raise GroupNameError(f"SO({size}) is trivial; need m >= 3")
        if size % 2:
            return CartanGroup(CartanClass.B, size // 2)
        return CartanGroup(CartanClass.D, size // 2)

    m = _CARTAN_RE.match(name)
    if m:
        letter, rank = m.group(1).upper(), int(m.group(2))
        if letter in "EFG":
            raise GroupNameError(f"exceptional class {letter} is not supported")
        if letter not in "ABCD":
            raise GroupNameError(f"unknown Cartan class {letter!r}")
        if rank < 1:
            raise GroupNameError(f"rank must be positive in {name!r}")
        return CartanGroup(CartanClass(letter), rank)

    raise GroupNameError(f"cannot parse group name {name!r}")


def dimension(g: CartanGroup) -> int:
    n = g.rank
    if g.cls is CartanClass.A:
        return (n + 1) ** 2 - 1
    if g.cls in (CartanClass.B, CartanClass.C):
        return n * (2 * n + 1)
    return n * (2 * n - 1)


def exponents(g: CartanGroup) -> list[int]:
    """Exponents in ascending order, with multiplicity.

    D_n with n even has the exponent n - 1 twice (e.g. D4: 1, 3, 3, 5).
    """
    n = g.rank
    if g.cls is CartanClass.A:
        return list(range(1, n + 1))
    if g.cls in (CartanClass.B, CartanClass.C):
        return list(range(1, 2 * n, 2))
    return sorted([*range(1, 2 * n - 2, 2), n - 1])


def catalog(max_rank: int, classes=tuple(CartanClass)):
    """Every valid group of the given classes with rank <= max_rank."""
    for c in classes:
        c = CartanClass(c)
        for r in range(_MIN_RANK[c], max_rank + 1):
            yield CartanGroup(c, r)
