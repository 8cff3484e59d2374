"""Coxeter matrices ``(-1)^n C^t C^-1`` and their multiplicative order."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import reduce
from math import lcm
from typing import Iterable, Optional, Sequence

from . import linalg
from .cartan import CartanMatrix, inverse
from .errors import ShapeMismatch

IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CoxeterMatrix:
    matrix: IntMatrix
    degree_n: int

    @property
    def m(self) -> int:
        return len(self.matrix)

    @property
    def sign(self) -> int:
        return -1 if self.degree_n % 2 else 1


@dataclass(frozen=True)
class OrderResult:
    """``order`` is the exact multiplicative order, or ``None`` for infinite order."""

    order: Optional[int]
    cyclotomic_indices: Optional[tuple[int, ...]] = None
    verified: bool = False
    charpoly: tuple[int, ...] = field(default=(), compare=False)

    @property
    def finite(self) -> bool:
        return self.order is not None


def coxeter_matrix(c: CartanMatrix, n: int) -> CoxeterMatrix:
    if n < 1:
        raise ValueError("degree n must be positive")
    inv = inverse(c)
    phi = linalg.matmul(linalg.transpose(c.matrix), inv)
    if n % 2:
        phi = linalg.scale(phi, -1)
    assert linalg.is_integral(phi)
    return CoxeterMatrix(phi, n)


def apply(phi: CoxeterMatrix, v: Sequence[int]) -> tuple[int, ...]:
    return linalg.matvec(phi.matrix, v)


def order(phi: CoxeterMatrix | IntMatrix) -> OrderResult:
    """Exact order of an integer matrix.

    The characteristic polynomial is split into cyclotomic factors; their
    lcm is a candidate exponent that is confirmed by explicit powering (a
    non-diagonalizable matrix fails here and has infinite order), then
    reduced to the smallest exponent that still gives the identity.
    """
    m = phi.matrix if isinstance(phi, CoxeterMatrix) else linalg.as_matrix(phi)
    n = len(m)
    cp = linalg.charpoly(m)
    indices = linalg.cyclotomic_factorization(cp)
    if indices is None:
        return OrderResult(None, None, False, cp)
    ident = linalg.identity(n)
    d = reduce(lcm, indices, 1)
    if linalg.matrix_power(m, d) != ident:
        return OrderResult(None, tuple(indices), False, cp)
    for p in linalg.prime_factors(d):
        while d % p == 0 and linalg.matrix_power(m, d // p) == ident:
            d //= p
    return OrderResult(d, tuple(indices), True, cp)


def brute_force_order(m: IntMatrix, cap: int = 5000) -> Optional[int]:
    """Smallest ``d <= cap`` with ``m**d == I`` by repeated multiplication."""
    m = linalg.as_matrix(m)
    ident = linalg.identity(len(m))
    power = m
    for d in range(1, cap + 1):
        if power == ident:
            return d
        power = linalg.matmul(power, m)
    return None


def nakayama_check(c: CartanMatrix, phi: CoxeterMatrix) -> bool:
    """``Phi(dim P_i) == (-1)^n dim I_i`` for every vertex."""
    if c.m != phi.m:
        raise ShapeMismatch("Cartan and Coxeter sizes differ")
    return all(
        apply(phi, c.column(i)) == tuple(phi.sign * x for x in c.row(i)) for i in range(c.m)
    )


def form_identity_check(
    c: CartanMatrix, phi: CoxeterMatrix, samples: Iterable[tuple[Sequence[int], Sequence[int]]]
) -> bool:
    """``<x,y> == (-1)^n <y,Phi x> == <Phi x,Phi y>`` on every sample pair."""
    e = linalg.transpose(inverse(c))
    for x, y in samples:
        if len(x) != c.m or len(y) != c.m:
            raise ShapeMismatch("sample vectors must have length m")
        px, py = apply(phi, x), apply(phi, y)
        lhs = linalg.dot(x, linalg.matvec(e, y))
        if lhs != phi.sign * linalg.dot(y, linalg.matvec(e, px)):
            return False
        if lhs != linalg.dot(px, linalg.matvec(e, py)):
            return False
    return True


def random_pairs(m: int, count: int, seed: int, low: int = -10, high: int = 10):
    rng = random.Random(seed)
    return [
        (tuple(rng.randint(low, high) for _ in range(m)), tuple(rng.randint(low, high) for _ in range(m)))
        for _ in range(count)
    ]
