"""Prime fields and the quadratic character."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import FieldSizeError

# Largest prime for which a Legendre table is built (one byte per residue).
TABLE_SIZE_GUARD = 1 << 28
# Residues and their products must fit in int64 inside vectorised loops.
MAX_PRIME = 1 << 31

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi."""
    if hi < 2:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(hi**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, hi + 1, i)))
    return [i for i in range(max(lo, 2), hi + 1) if sieve[i]]


@dataclass(frozen=True, eq=False)
class PrimeField:
    p: int
    legendre_table: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"{self.p} is not an odd prime")
        if self.p >= MAX_PRIME:
            raise ValueError(f"p={self.p} exceeds the supported range p < 2^31")
        if self.legendre_table is not None:
            self.legendre_table.setflags(write=False)

    def __repr__(self):
        tag = "with table" if self.legendre_table is not None else "no table"
        return f"PrimeField(p={self.p}, {tag})"

    def with_table(self) -> "PrimeField":
        return build_legendre_table(self)

    def legendre(self, a: int) -> int:
        return legendre(a, self)


def legendre(a: int, field: PrimeField) -> int:
    """Quadratic character of ``a`` modulo p: 0, +1 or -1."""
    p = field.p
    a %= p
    if field.legendre_table is not None:
        return int(field.legendre_table[a])
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def build_legendre_table(field: PrimeField, guard: int = TABLE_SIZE_GUARD) -> PrimeField:
    if field.legendre_table is not None:
        return field
    p = field.p
    if p > guard:
        raise FieldSizeError(f"p={p} is above the table guard {guard}")
    table = np.full(p, -1, dtype=np.int8)
    table[0] = 0
    a = np.arange(1, p, dtype=np.int64)
    table[a * a % p] = 1
    return PrimeField(p, table)


def eval_poly_mod(coeffs: Sequence[int], x: int, field: PrimeField) -> int:
    """Horner evaluation of sum(coeffs[i] * x^i) modulo p."""
    p = field.p
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def eval_poly_mod_vec(coeffs: Sequence[int], xs: np.ndarray, p: int) -> np.ndarray:
    """Vectorised :func:`eval_poly_mod` over an int64 array of residues."""
    acc = np.zeros_like(xs)
    for c in reversed(coeffs):
        acc = (acc * xs + (c % p)) % p
    return acc
