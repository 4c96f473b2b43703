"""Primitive quadratic Dirichlet characters in fundamental-discriminant form.

A fundamental discriminant is an integer d with

    d = 1 (mod 4) and d squarefree,   or
    d = 4m, m squarefree, m = 2 or 3 (mod 4).

For such d the Kronecker symbol (d|.) is the primitive real character modulo
q = |d|; this file provides the symbol itself (binary reduction, exact integer
arithmetic), discriminant enumeration, and pointwise products of two such
characters (kept at modulus lcm(q1, q2), possibly imprimitive).

d = 1 is allowed and denotes the trivial character of modulus 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "QuadraticCharacter",
    "ProductCharacter",
    "kronecker",
    "is_fundamental_discriminant",
    "enumerate_fundamental_discriminants",
    "char_value",
    "product_character",
    "values_up_to",
]

# Inputs are capped well below the int64 range used by the sieve tables;
# desk-scale moduli never get anywhere near this.
_INPUT_CAP = 1 << 62


def kronecker(d: int, n: int) -> int:
    """Kronecker symbol (d|n) for n >= 0, via 2-adic reduction and reciprocity.

    Completely multiplicative in n; for fundamental d it vanishes exactly
    when gcd(d, n) > 1.  (d, n) = (0, 0) is undefined and rejected.
    """
    if d == 0 and n == 0:
        raise ValueError("kronecker(0, 0) is undefined")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if abs(d) > _INPUT_CAP or n > _INPUT_CAP:
        raise OverflowError("kronecker arguments capped at 2^62")
    if d == 0:
        return 1 if n == 1 else 0
    if n == 0:
        return 1 if d in (1, -1) else 0
    if d % 2 == 0 and n % 2 == 0:
        return 0
    sign = 1
    # factor 2^v out of n; each factor contributes (d|2), fixed by d mod 8
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v % 2 == 1 and d % 8 in (3, 5):
        sign = -sign
    # n is now odd and positive; reduce d modulo n and run the Jacobi loop
    a = d % n
    while a != 0:
        v = 0
        while a % 2 == 0:
            a //= 2
            v += 1
        if v % 2 == 1 and n % 8 in (3, 5):
            sign = -sign
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a, n = n % a, a
    return sign if n == 1 else 0


def _is_squarefree(m: int) -> bool:
    m = abs(m)
    if m % 4 == 0:
        return False
    p = 3
    while p * p <= m:
        if m % (p * p) == 0:
            return False
        p += 2
    return True


def is_fundamental_discriminant(d: int) -> bool:
    """True iff (d|.) is a primitive real character of modulus |d| (d = 1 allowed)."""
    if d == 0:
        raise ValueError("0 is not a discriminant")
    if d % 4 == 1:
        return _is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _is_squarefree(m)
    return False


def enumerate_fundamental_discriminants(limit: int) -> list[int]:
    """All fundamental d != 1 with |d| <= limit, sorted by |d|, positive first."""
    if limit < 3:
        raise ValueError("limit must be >= 3")
    out: list[int] = []
    for q in range(3, limit + 1):
        if is_fundamental_discriminant(q):
            out.append(q)
        if is_fundamental_discriminant(-q):
            out.append(-q)
    out.sort(key=lambda d: (abs(d), d < 0))
    return out


@dataclass(frozen=True)
class QuadraticCharacter:
    """The primitive real character n -> (d|n) attached to a fundamental discriminant."""

    discriminant: int
    modulus: int = field(init=False)

    def __post_init__(self) -> None:
        if not is_fundamental_discriminant(self.discriminant):
            raise ValueError(f"{self.discriminant} is not a fundamental discriminant")
        object.__setattr__(self, "modulus", abs(self.discriminant))

    @property
    def is_principal(self) -> bool:
        return self.discriminant == 1

    def value(self, n: int) -> int:
        if n < 1:
            raise ValueError("character argument must be a positive integer")
        # (d|.) has period |d|; reducing first keeps the symbol loop short
        return kronecker(self.discriminant, n % self.modulus)


@dataclass(frozen=True)
class ProductCharacter:
    """Pointwise product chi1*chi2, modulus lcm(q1, q2); not reduced to its primitive core."""

    left: QuadraticCharacter
    right: QuadraticCharacter
    modulus: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "modulus", math.lcm(self.left.modulus, self.right.modulus))

    @property
    def is_principal(self) -> bool:
        # distinct primitive real characters have a nonprincipal product
        return self.left.discriminant == self.right.discriminant

    def value(self, n: int) -> int:
        return self.left.value(n) * self.right.value(n)


def char_value(chi: QuadraticCharacter | ProductCharacter, n: int) -> int:
    """chi(n) in {-1, 0, 1} for positive n."""
    return chi.value(n)


def product_character(chi1: QuadraticCharacter, chi2: QuadraticCharacter) -> ProductCharacter:
    return ProductCharacter(chi1, chi2)


def values_up_to(chi: QuadraticCharacter | ProductCharacter, n_max: int):
    """chi(1), ..., chi(n_max) as an int64 numpy array (one period, tiled).

    Shared workhorse for the coefficient sieve and the L(1, chi) scan.
    """
    import numpy as np

    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    q = chi.modulus
    period = np.array([chi.value(a) for a in range(1, q + 1)], dtype=np.int64)
    reps = -(-n_max // q)
    return np.tile(period, reps)[:n_max]
