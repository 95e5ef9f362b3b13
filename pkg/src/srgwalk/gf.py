"""Finite fields GF(p^m) for the Paley construction.

Elements are coefficient vectors over GF(p), lowest degree first. The
enumeration order of a field is lexicographic on those vectors (as produced
by ``itertools.product``), and it fixes the vertex numbering of Paley graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence, Union

MAX_ORDER = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> Optional[tuple[int, int]]:
    """Return (p, m) with q == p**m and p prime, or None."""
    if q < 2:
        return None
    p = next(f for f in itertools.count(2) if q % f == 0)
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    return (p, m) if q == 1 else None


# -- polynomials over GF(p), coefficient lists lowest degree first ----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a divided by b over GF(p). b must have a nonzero lead."""
    r = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(r) - 1 >= db:
        shift = len(r) - 1 - db
        factor = (r[-1] * inv_lead) % p
        for i, c in enumerate(b):
            r[shift + i] = (r[shift + i] - factor * c) % p
        _trim(r)
    return r


def has_root(poly: Sequence[int], p: int) -> bool:
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            return True
    return False


def _monic(degree: int, p: int) -> Iterator[list[int]]:
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over GF(p).

    Degrees 2 and 3 only need the root test. From degree 4 on every monic
    candidate factor of degree 2..deg/2 is tried as well.
    """
    degree = len(poly) - 1
    if degree < 1:
        return False
    if degree == 1:
        return True
    if has_root(poly, p):
        return False
    for fdeg in range(2, degree // 2 + 1):
        for factor in _monic(fdeg, p):
            if not poly_mod(poly, factor, p):
                return False
    return True


def lowest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree m over GF(p)."""
    for cand in _monic(m, p):
        if is_irreducible(cand, p):
            return tuple(cand)
    raise RuntimeError(f"no irreducible polynomial of degree {m} over GF({p})")


# -- field ------------------------------------------------------------------

@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple[int, ...]

    def __str__(self):
        terms = [f"{c}*x^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return " + ".join(reversed(terms)) or "0"


ElementLike = Union[FieldElement, int, Sequence[int]]


class GaloisField:
    """GF(p^m) with a deterministically chosen modulus.

    >>> F = GaloisField(3, 2)
    >>> F.modulus
    (1, 0, 1)
    >>> F.mul(F.element([0, 1]), F.element([0, 1])) == F.element(2)
    True
    """

    def __init__(self, p: int, m: int = 1):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        if p**m > MAX_ORDER:
            raise ValueError(f"field order {p}^{m} exceeds {MAX_ORDER}")
        self.p = p
        self.m = m
        self.order = p**m
        self.modulus = lowest_irreducible(p, m)

    @classmethod
    def of_order(cls, q: int) -> "GaloisField":
        pm = prime_power(q)
        if pm is None:
            raise ValueError(f"{q} is not a prime power")
        return cls(*pm)

    def __repr__(self):
        return f"GaloisField(p={self.p}, m={self.m})"

    # construction / enumeration

    def element(self, value: ElementLike) -> FieldElement:
        """Build an element from an int (constant term) or a coefficient list."""
        if isinstance(value, FieldElement):
            value = value.coeffs
        if isinstance(value, int):
            value = [value]
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.m:
            coeffs = poly_mod(coeffs, self.modulus, self.p)
        coeffs += [0] * (self.m - len(coeffs))
        return FieldElement(tuple(coeffs))

    @property
    def zero(self) -> FieldElement:
        return FieldElement((0,) * self.m)

    @property
    def one(self) -> FieldElement:
        return FieldElement((1,) + (0,) * (self.m - 1))

    def elements(self) -> list[FieldElement]:
        return [FieldElement(c) for c in itertools.product(range(self.p), repeat=self.m)]

    def index(self, a: FieldElement) -> int:
        """Position of a in the enumeration order."""
        idx = 0
        for c in a.coeffs:
            idx = idx * self.p + c
        return idx

    # arithmetic

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return FieldElement(tuple((x + y) % self.p for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a: FieldElement) -> FieldElement:
        return FieldElement(tuple((-x) % self.p for x in a.coeffs))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return FieldElement(tuple((x - y) % self.p for x, y in zip(a.coeffs, b.coeffs)))

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        if self.m == 1:
            return FieldElement(((a.coeffs[0] * b.coeffs[0]) % p,))
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    prod[i + j] += x * y
        return self.element(prod)

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: FieldElement) -> FieldElement:
        if not any(a.coeffs):
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.m == 1:
            return FieldElement((pow(a.coeffs[0], -1, self.p),))
        return self.pow(a, self.order - 2)

    # squares

    @cached_property
    def nonzero_squares(self) -> frozenset[FieldElement]:
        return frozenset(self.mul(b, b) for b in self.elements() if any(b.coeffs))

    def is_nonzero_square(self, a: FieldElement) -> bool:
        if not any(a.coeffs):
            raise ValueError("zero is excluded from the square test")
        return a in self.nonzero_squares

