"""Euler bilinear form ``<x,y> = x^t (C^-1)^t y`` and its quadratic form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import _kernels, linalg
from .cartan import CartanMatrix, inverse
from .coxeter import CoxeterMatrix
from .errors import ShapeMismatch

IntMatrix = tuple[tuple[int, ...], ...]
IntVector = tuple[int, ...]


@dataclass(frozen=True)
class EulerForm:
    matrix: IntMatrix

    @property
    def m(self) -> int:
        return len(self.matrix)

    @property
    def symmetrized(self) -> IntMatrix:
        """``S = E + E^t``, so that ``q(x) = x^t S x / 2``."""
        return linalg.add(self.matrix, linalg.transpose(self.matrix))


@dataclass(frozen=True)
class DefinitenessReport:
    positive_definite: bool
    symmetrized_minors: tuple[Fraction | int, ...]
    witness: Optional[IntVector] = None


def euler_form(c: CartanMatrix) -> EulerForm:
    return EulerForm(linalg.transpose(inverse(c)))


def _check_len(e: EulerForm, *vs: Sequence[int]) -> None:
    for v in vs:
        if len(v) != e.m:
            raise ShapeMismatch(f"expected a vector of length {e.m}, got {len(v)}")


def bilinear(e: EulerForm, x: Sequence[int], y: Sequence[int]) -> int:
    _check_len(e, x, y)
    return linalg.dot(x, linalg.matvec(e.matrix, y))


def quadratic(e: EulerForm, x: Sequence[int]) -> int:
    return bilinear(e, x, x)


def is_positive_definite(e: EulerForm) -> DefinitenessReport:
    """Sylvester's criterion on ``S = E + E^t``.

    When it fails at the k-th minor (the earlier ones being positive), the
    vector ``(-S_{k-1}^-1 s, 1, 0, ...)`` with ``s`` the k-th column above the
    diagonal has ``x^t S x = det S_k / det S_{k-1} <= 0``; its primitive
    integer multiple is returned as the witness.
    """
    s = e.symmetrized
    minors = tuple(linalg.leading_principal_minors(s))
    bad = next((k for k, d in enumerate(minors) if d <= 0), None)
    if bad is None:
        return DefinitenessReport(True, minors)
    if bad == 0:
        x = [0] * e.m
        x[0] = 1
    else:
        block = tuple(row[:bad] for row in s[:bad])
        col = [s[i][bad] for i in range(bad)]
        w = linalg.solve(block, col)
        x = [-wi for wi in w] + [1] + [0] * (e.m - bad - 1)
    witness = linalg.primitive(x)
    assert quadratic(e, witness) <= 0
    return DefinitenessReport(False, minors, witness)


def find_value_vectors(e: EulerForm, target: int, bound: int, backend: str | None = None) -> list[IntVector]:
    """All ``x`` with ``max|x_i| <= bound`` and ``q(x) == target``, sorted
    lexicographically; the zero vector is never returned.

    Positive definite forms are searched coordinate by coordinate with the
    partial sums of an exact ``LDL^t`` splitting as a pruning bound; other
    forms go through the full box kernel.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    if e.m == 0:
        return []
    if is_positive_definite(e).positive_definite:
        return _pruned_search(e, target, bound)
    return _kernels.box_search(e.matrix, target, bound, exclude_zero=True, backend=backend)


def _ldl(s: IntMatrix) -> tuple[list[list[Fraction]], list[Fraction]]:
    n = len(s)
    lower = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    diag: list[Fraction] = []
    for j in range(n):
        d = Fraction(s[j][j]) - sum(lower[j][k] ** 2 * diag[k] for k in range(j))
        diag.append(d)
        for i in range(j + 1, n):
            lower[i][j] = (Fraction(s[i][j]) - sum(lower[i][k] * lower[j][k] * diag[k] for k in range(j))) / d
    return lower, diag


def _pruned_search(e: EulerForm, target: int, bound: int) -> list[IntVector]:
    # x^t S x = sum_j d_j (x_j + sum_{i>j} L_ij x_i)^2, every d_j > 0, so once
    # the trailing coordinates are fixed the terms they determine bound 2q from below
    s = e.symmetrized
    n = len(s)
    lower, diag = _ldl(s)
    limit = 2 * target
    found: list[IntVector] = []
    x = [0] * n

    def descend(j: int, partial: Fraction) -> None:
        if j < 0:
            if partial == limit and any(x):
                found.append(tuple(x))
            return
        shift = sum(lower[i][j] * x[i] for i in range(j + 1, n))
        for v in range(-bound, bound + 1):
            t = partial + diag[j] * (v + shift) ** 2
            if t <= limit:
                x[j] = v
                descend(j - 1, t)
        x[j] = 0

    descend(n - 1, Fraction(0))
    return sorted(found)


def fixed_isotropic_check(phi: CoxeterMatrix, e: EulerForm) -> list[tuple[IntVector, int]]:
    """Basis of the ``Phi``-fixed vectors paired with their ``q``-values."""
    if phi.m != e.m:
        raise ShapeMismatch("Coxeter matrix and form sizes differ")
    shifted = linalg.sub(phi.matrix, linalg.identity(phi.m))
    return [(v, quadratic(e, v)) for v in linalg.kernel_basis(shifted)]
