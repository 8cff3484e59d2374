"""Exact dense linear algebra over the integers and the rationals.

Matrices are tuples of row tuples holding ``int`` or ``fractions.Fraction``
entries; vectors are tuples.  Every function accepts any nested sequence and
returns freshly built tuples, so results are hashable and safe to share.
Polynomials are tuples of integer coefficients, lowest degree first.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence, Union

from .errors import NonMonic, ShapeMismatch, Singular

Number = Union[int, Fraction]
Matrix = tuple[tuple[Number, ...], ...]
Vector = tuple[Number, ...]
Poly = tuple[int, ...]


def as_matrix(rows: Sequence[Sequence[Number]]) -> Matrix:
    m = tuple(tuple(_normalize(x) for x in row) for row in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise ShapeMismatch("ragged matrix")
    return m


def _normalize(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, (int, Fraction)):
        return x
    # numpy integers and the like
    return int(x)


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def _require_square(m: Matrix) -> int:
    r, c = shape(m)
    if r != c:
        raise ShapeMismatch(f"expected a square matrix, got {r}x{c}")
    return r


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def scale(m: Matrix, k: Number) -> Matrix:
    return tuple(tuple(_normalize(k * x) for x in row) for row in m)


def add(a: Matrix, b: Matrix) -> Matrix:
    if shape(a) != shape(b):
        raise ShapeMismatch(f"cannot add {shape(a)} and {shape(b)}")
    return tuple(tuple(_normalize(x + y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    return add(a, scale(b, -1))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ShapeMismatch(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    cols = transpose(b)
    return tuple(
        tuple(_normalize(sum(x * y for x, y in zip(row, col))) for col in cols) for row in a
    )


def matvec(m: Matrix, v: Sequence[Number]) -> Vector:
    if shape(m)[1] != len(v):
        raise ShapeMismatch(f"cannot apply {shape(m)} matrix to vector of length {len(v)}")
    return tuple(_normalize(sum(x * y for x, y in zip(row, v))) for row in m)


def dot(x: Sequence[Number], y: Sequence[Number]) -> Number:
    if len(x) != len(y):
        raise ShapeMismatch(f"vector lengths {len(x)} and {len(y)} differ")
    return _normalize(sum(a * b for a, b in zip(x, y)))


def matrix_power(m: Matrix, k: int) -> Matrix:
    """``m**k`` by repeated squaring; negative ``k`` inverts first."""
    n = _require_square(m)
    if k < 0:
        return matrix_power(invert(m), -k)
    result = identity(n)
    base = m
    while k:
        if k & 1:
            result = matmul(result, base)
        k >>= 1
        if k:
            base = matmul(base, base)
    return result


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(_normalize(x * y) for x in row_a for y in row_b)
        for row_a in a
        for row_b in b
    )


def _integer_rows(m: Matrix) -> tuple[list[list[int]], int]:
    """Scale every row to integers; return the rows and the product of the scales."""
    rows = []
    factor = 1
    for row in m:
        den = reduce(lcm, (Fraction(x).denominator for x in row), 1)
        rows.append([int(x * den) for x in row])
        factor *= den
    return rows, factor


def determinant(m: Matrix) -> Number:
    """Determinant via Bareiss fraction-free elimination."""
    n = _require_square(m)
    if n == 0:
        return 1
    a, factor = _integer_rows(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return _normalize(Fraction(sign * a[n - 1][n - 1], factor))


def leading_principal_minors(m: Matrix) -> list[Number]:
    n = _require_square(m)
    return [determinant(tuple(row[:k] for row in m[:k])) for k in range(1, n + 1)]


def invert(m: Matrix) -> Matrix:
    """Exact inverse by fraction-free Gauss-Jordan elimination.

    The augmented integer matrix ``[A | I]`` is reduced with Bareiss updates
    applied above and below each pivot, which leaves ``d*I`` on the left and
    ``d*A^-1`` on the right, ``d`` being the last pivot.
    """
    n = _require_square(m)
    rows, _ = _integer_rows(m)
    # row scaling: A = D^-1 A' with A' integral, so A^-1 = A'^-1 D
    dens = [reduce(lcm, (Fraction(x).denominator for x in row), 1) for row in m]
    a = [rows[i] + [int(i == j) for j in range(n)] for i in range(n)]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                raise Singular("matrix is singular")
        pivot = a[k][k]
        row_k = a[k]
        for i in range(n):
            if i == k:
                continue
            row_i = a[i]
            aik = row_i[k]
            for j in range(2 * n):
                if j != k:
                    row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    d = a[n - 1][n - 1] if n else 1
    return tuple(
        tuple(_normalize(Fraction(a[i][n + j] * dens[j], d)) for j in range(n))
        for i in range(n)
    )


def is_integral(m: Matrix) -> bool:
    return all(isinstance(x, int) for row in m for x in row)


def rank(m: Matrix) -> int:
    """Rank over the rationals (Bareiss elimination on integer-scaled rows)."""
    if not m:
        return 0
    a, _ = _integer_rows(m)
    return _integer_rank(a)


def _integer_rank(a: list[list[int]]) -> int:
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pivot = a[r][c]
        row_r = a[r]
        for i in range(r + 1, rows):
            row_i = a[i]
            aic = row_i[c]
            for j in range(c + 1, cols):
                row_i[j] = (pivot * row_i[j] - aic * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        r += 1
    return r


def kernel_basis(m: Matrix) -> list[tuple[int, ...]]:
    """Basis of the right null space, each vector scaled to a primitive integer vector."""
    rows, cols = shape(m)
    a = [[Fraction(x) for x in row] for row in m]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][f]
        basis.append(primitive(v))
    return basis


def primitive(v: Sequence[Number]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to the primitive integer vector in its direction."""
    den = reduce(lcm, (Fraction(x).denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, ints, 0)
    if g == 0:
        raise ValueError("zero vector has no primitive scaling")
    return tuple(x // g for x in ints)


def solve(m: Matrix, b: Sequence[Number]) -> Vector:
    """Solve ``m x = b`` for square nonsingular ``m``."""
    return matvec(invert(m), b)


# -- polynomials -------------------------------------------------------------


def poly_trim(p: Sequence[int]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Division by a monic integer polynomial."""
    q = poly_trim(q)
    if not q or q[-1] != 1:
        raise NonMonic("divisor must be monic")
    rem = list(poly_trim(p))
    dq = len(q) - 1
    if len(rem) - 1 < dq:
        return (), tuple(rem)
    quot = [0] * (len(rem) - dq)
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k]
        if c:
            quot[k - dq] = c
            for j in range(dq + 1):
                rem[k - dq + j] -= c * q[j]
    return poly_trim(quot), poly_trim(rem[:dq])


def poly_eval_matrix(p: Poly, m: Matrix) -> Matrix:
    """Evaluate ``p`` at a square matrix (Horner)."""
    n = _require_square(m)
    result = zeros(n, n)
    for c in reversed(p):
        result = add(matmul(result, m), scale(identity(n), c))
    return result


def charpoly(m: Matrix) -> Poly:
    """``det(xI - m)`` for an integer matrix (Faddeev-LeVerrier, exact)."""
    n = _require_square(m)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = zeros(n, n)
    for k in range(1, n + 1):
        mk = add(matmul(m, mk), scale(identity(n), coeffs[n - k + 1]))
        tr = sum(row[i] for i, row in enumerate(matmul(m, mk)))
        c = Fraction(-tr, k)
        if c.denominator != 1:
            raise ShapeMismatch("charpoly requires an integer matrix")
        coeffs[n - k] = int(c)
    return tuple(coeffs)


def totient(k: int) -> int:
    result = k
    p = 2
    r = k
    while p * p <= r:
        if r % p == 0:
            while r % p == 0:
                r //= p
            result -= result // p
        p += 1
    if r > 1:
        result -= result // r
    return result


def prime_factors(k: int) -> list[int]:
    out = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            out.append(p)
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        out.append(k)
    return out


_CYCLOTOMIC_CACHE: dict[int, Poly] = {}


def cyclotomic(k: int) -> Poly:
    """The k-th cyclotomic polynomial: ``x^k - 1`` divided by all lower ones for proper divisors."""
    if k < 1:
        raise ValueError("cyclotomic index must be positive")
    if k not in _CYCLOTOMIC_CACHE:
        p: Poly = (-1,) + (0,) * (k - 1) + (1,)
        for d in range(1, k):
            if k % d == 0:
                p, r = poly_divmod(p, cyclotomic(d))
                assert not r
        _CYCLOTOMIC_CACHE[k] = p
    return _CYCLOTOMIC_CACHE[k]


def cyclotomic_factorization(p: Poly) -> list[int] | None:
    """Indices ``[k1, k2, ...]`` (sorted) with ``p`` equal to the product of the
    corresponding cyclotomic polynomials, or ``None`` when no such product exists."""
    p = poly_trim(p)
    if not p or p[-1] != 1:
        raise NonMonic("polynomial must be monic")
    deg = len(p) - 1
    # totient(k) >= sqrt(k/2), so totient(k) <= deg forces k <= 2*deg^2
    candidates = [k for k in range(1, 2 * deg * deg + 2) if totient(k) <= deg]
    found = []
    for k in candidates:
        ck = cyclotomic(k)
        while len(p) >= len(ck):
            q, r = poly_divmod(p, ck)
            if r:
                break
            p = q
            found.append(k)
    return found if p == (1,) else None
