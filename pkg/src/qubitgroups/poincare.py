"""Exact Poincaré polynomials of compact simple Lie groups.

Chevalley's theorem gives P(t) as a product of binomials (1 + t^(2a+1)) over
the exponents a of the group.  Coefficients are Python ints throughout, so
nothing overflows at rank 63 (the coefficient sum there is 2**63).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .cartan import CartanGroup, exponents


@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial in t with integer coefficients, index = degree.

    Stored canonically: no trailing zeros, the zero polynomial is ``()``.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(int(x) for x in self.coefficients)
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coefficients", c[:end])

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @property
    def degree(self) -> int:
        """Highest nonzero degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __getitem__(self, q: int) -> int:
        if q < 0:
            raise IndexError("negative degree")
        return self.coefficients[q] if q < len(self.coefficients) else 0

    def __len__(self):
        return len(self.coefficients)

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    def times_binomial(self, m: int) -> IntPolynomial:
        """Multiply by (1 + t^m): one shifted add."""
        if m < 0:
            raise ValueError("binomial degree must be nonnegative")
        c = self.coefficients
        out = list(c) + [0] * m
        for i, x in enumerate(c):
            out[i + m] += x
        return IntPolynomial(out)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, data) -> IntPolynomial:
        return cls(tuple(int(x) for x in data))

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for q, c in enumerate(self.coefficients):
            if not c:
                continue
            if q == 0:
                terms.append(str(c))
            else:
                mono = "t" if q == 1 else f"t^{q}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def binomial_product(degrees) -> IntPolynomial:
    """Expand prod (1 + t^m) over ``degrees`` exactly.

    The running product is packed into one big int with a fixed-width bit
    slot per coefficient, so each factor costs a single shift-and-add on
    that int. Slots are ``len(degrees) + 1`` bits wide (rounded up to whole
    bytes) since no coefficient can exceed 2**len(degrees).
    """
    degrees = sorted(degrees)
    if any(m < 0 for m in degrees):
        raise ValueError("binomial degrees must be nonnegative")
    top = sum(degrees)
    slot_bytes = (len(degrees) + 1 + 7) // 8
    slot_bits = 8 * slot_bytes
    packed = 1
    for m in degrees:
        packed += packed << (m * slot_bits)
    raw = packed.to_bytes((top + 1) * slot_bytes, "little")
    coeffs = [
        int.from_bytes(raw[q * slot_bytes:(q + 1) * slot_bytes], "little")
        for q in range(top + 1)
    ]
    return IntPolynomial(coeffs)


@lru_cache(maxsize=64)
def poincare_polynomial(g: CartanGroup) -> IntPolynomial:
    """Poincaré polynomial of ``g`` from its exponents; degree equals dim g."""
    return binomial_product(2 * a + 1 for a in exponents(g))


def factor_degrees(g: CartanGroup) -> list[int]:
    """Degrees 2a+1 of the binomial factors, ascending."""
    return [2 * a + 1 for a in exponents(g)]


def betti(g: CartanGroup, q: int) -> int:
    if q < 0:
        raise ValueError("q must be nonnegative")
    return poincare_polynomial(g)[q]


class PolyComparison(NamedTuple):
    equal: bool
    degree: int | None = None
    a: int | None = None
    b: int | None = None


def polynomials_equal(a: IntPolynomial, b: IntPolynomial) -> PolyComparison:
    """Compare coefficient-wise; on mismatch report the lowest differing degree."""
    for q in range(max(len(a), len(b))):
        if a[q] != b[q]:
            return PolyComparison(False, q, a[q], b[q])
    return PolyComparison(True)
