"""Cartan matrices of acyclic bound quiver algebras.

Entry ``C[i][j]`` is the dimension of the space of paths from vertex ``j``
to vertex ``i`` modulo the ideal of relations, so column ``j`` is the
dimension vector of the projective ``P_j`` and row ``i`` that of the
injective ``I_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from . import linalg
from .errors import CyclicQuiver, NotUnimodular, ShapeMismatch
from .quiver import AlgebraSpec, BoundQuiver, enumerate_paths, is_acyclic

IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CartanMatrix:
    matrix: IntMatrix

    def __post_init__(self):
        m = linalg.as_matrix(self.matrix)
        if any(len(r) != len(m) for r in m):
            raise ShapeMismatch("Cartan matrix must be square")
        if not linalg.is_integral(m):
            raise ShapeMismatch("Cartan matrix must have integer entries")
        object.__setattr__(self, "matrix", m)

    @property
    def m(self) -> int:
        return len(self.matrix)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.matrix)

    def row(self, i: int) -> tuple[int, ...]:
        return self.matrix[i]


def ideal_rank(q: BoundQuiver, start: int, end: int) -> int:
    """Dimension of the ideal's component in the paths from ``start`` to ``end``.

    The ideal is spanned by ``u * rho * v`` for relations ``rho: s -> t`` and
    paths ``u: start -> s``, ``v: t -> end``.
    """
    paths = enumerate_paths(q, start, end)
    if not paths or not q.relations:
        return 0
    position = {p.names: k for k, p in enumerate(paths)}
    rows = []
    for rel in q.relations:
        prefixes = enumerate_paths(q, start, rel.source)
        suffixes = enumerate_paths(q, rel.target, end)
        if not prefixes or not suffixes:
            continue
        den = lcm(*(c.denominator for c, _ in rel.terms))
        for u in prefixes:
            for v in suffixes:
                row = [0] * len(paths)
                for c, p in rel.terms:
                    row[position[u.names + p.names + v.names]] += int(c * den)
                rows.append(row)
    return linalg.rank(rows) if rows else 0


def cartan_matrix(q: BoundQuiver) -> CartanMatrix:
    if not is_acyclic(q):
        raise CyclicQuiver("Cartan matrices are computed for acyclic quivers only")
    vs = q.vertices
    return CartanMatrix(tuple(
        tuple(len(enumerate_paths(q, j, i)) - ideal_rank(q, j, i) for j in vs) for i in vs
    ))


def cartan_of(spec: AlgebraSpec) -> CartanMatrix:
    if spec.cartan is not None:
        return CartanMatrix(spec.cartan)
    return cartan_matrix(spec.quiver)


def projective_dim_vectors(c: CartanMatrix) -> list[tuple[int, ...]]:
    return [c.column(j) for j in range(c.m)]


def injective_dim_vectors(c: CartanMatrix) -> list[tuple[int, ...]]:
    return [c.row(i) for i in range(c.m)]


def check_unimodular(c: CartanMatrix) -> bool:
    return linalg.determinant(c.matrix) in (1, -1)


def require_unimodular(c: CartanMatrix) -> None:
    if not check_unimodular(c):
        raise NotUnimodular(
            f"Cartan matrix has determinant {linalg.determinant(c.matrix)}, not +-1"
        )


def tensor_cartan(a: CartanMatrix, b: CartanMatrix) -> CartanMatrix:
    """Cartan matrix of the tensor product, in the vertex order of
    :func:`quivercox.quiver.tensor_quiver` (copies of ``a`` indexed by ``b``)."""
    return CartanMatrix(linalg.kronecker(b.matrix, a.matrix))


def inverse(c: CartanMatrix) -> IntMatrix:
    """Integer inverse of a unimodular Cartan matrix."""
    require_unimodular(c)
    inv = linalg.invert(c.matrix)
    assert linalg.is_integral(inv)
    return inv
