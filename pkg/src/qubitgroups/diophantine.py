"""Exact integer solvers for 2^b = k^2 + 7, the qubit/rotation match, and 8d^2 = k^2 + 7."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


def exact_sqrt(m: int) -> int | None:
    """Integer square root of m if m is a perfect square, else None."""
    if m < 0:
        return None
    r = isqrt(m)
    return r if r * r == m else None


@dataclass(frozen=True)
class RNSolution:
    b: int
    k: int

    def __post_init__(self):
        if 2**self.b != self.k**2 + 7:
            raise ArithmeticError(f"2^{self.b} != {self.k}^2 + 7")

    def to_json(self) -> dict:
        return {"b": self.b, "k": str(self.k)}


@dataclass(frozen=True)
class QubitMatch:
    n: int
    N: int
    k: int

    def __post_init__(self):
        n, N, k = self.n, self.N, self.k
        if N * N - N != 2 * (2 ** (2 * n) - 1):
            raise ArithmeticError(f"N={N} does not match {n} qubits")
        if k * k + 7 != 2 ** (2 * n + 3) or 2 * N != k + 1:
            raise ArithmeticError(f"k={k} inconsistent with n={n}, N={N}")

    @property
    def b(self) -> int:
        return 2 * self.n + 3

    def to_json(self) -> dict:
        return {"n": self.n, "N": str(self.N), "k": str(self.k)}


@dataclass(frozen=True)
class PellSolution:
    d: int
    k: int
    seed: int = 1

    def __post_init__(self):
        if 8 * self.d**2 != self.k**2 + 7:
            raise ArithmeticError(f"8*{self.d}^2 != {self.k}^2 + 7")

    def to_json(self) -> dict:
        return {"d": str(self.d), "k": str(self.k), "seed": self.seed}


def solve_rn_bruteforce(max_b: int, min_b: int = 1) -> list[RNSolution]:
    """All (b, k), min_b <= b <= max_b, k > 0, with 2^b = k^2 + 7.

    Splitting [1, max_b] into sub-ranges and concatenating the results in
    order gives the same list as one sweep.
    """
    if max_b < 1:
        raise ValueError("max_b must be >= 1")
    out = []
    for b in range(max(min_b, 1), max_b + 1):
        k = exact_sqrt((1 << b) - 7)
        if k:
            out.append(RNSolution(b, k))
    return out


def qubit_rotation_matches(max_n: int) -> list[QubitMatch]:
    """Qubit counts n <= max_n for which dim SU(2^n) is a triangular number N(N-1)/2."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    out = []
    for n in range(1, max_n + 1):
        k = exact_sqrt((1 << (2 * n + 3)) - 7)
        if k is None:
            continue
        # k is odd whenever k^2 = 2^(2n+3) - 7, so N is an integer
        out.append(QubitMatch(n, (k + 1) // 2, k))
    return out


def pell_orbit(seed_sign: int):
    """Infinite signed orbit (d, k) of d' = 3d + k, k' = 8d + 3k from (1, seed_sign)."""
    if seed_sign not in (1, -1):
        raise ValueError("seed_sign must be +1 or -1")
    d, k = 1, seed_sign
    while True:
        yield d, k
        d, k = 3 * d + k, 8 * d + 3 * k


def pell_enumerate(seed_sign: int, count: int) -> list[PellSolution]:
    """The first ``count`` iterates after the seed, with |k| reported."""
    if count < 1:
        raise ValueError("count must be >= 1")
    orbit = pell_orbit(seed_sign)
    next(orbit)
    out = []
    for _ in range(count):
        d, k = next(orbit)
        out.append(PellSolution(d, abs(k), seed_sign))
    return out
