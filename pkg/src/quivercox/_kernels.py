"""Box enumeration of integer quadratic-form values.

Two interchangeable backends find every ``x`` with ``|x_i| <= bound`` and
``x^t E x == target``, in lexicographic order:

* a numba ``@njit`` odometer over leading coordinates that updates ``q`` and
  ``S x`` incrementally and scans a precomputed block of trailing ones;
* a pure-numpy path that evaluates blocks of trailing coordinates at once.

The numba path is used when numba imports and ``QUIVERCOX_PURE_NUMPY`` is
unset (or ``0``).  Both work in int64 and refuse inputs whose values could
overflow; :func:`box_search` then falls back to object arrays.
"""

from __future__ import annotations

import itertools
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

_INT64_SAFE = 2**62


def use_numba() -> bool:
    return numba is not None and os.environ.get("QUIVERCOX_PURE_NUMPY", "0") in ("", "0")


def int64_safe(e: np.ndarray, bound: int) -> bool:
    m = e.shape[0]
    return int(np.abs(e.astype(object)).sum()) * bound * bound * max(m, 1) < _INT64_SAFE


def _box_search_python(e, target, bound, exclude_zero):
    m = e.shape[0]
    found = []
    for x in itertools.product(range(-bound, bound + 1), repeat=m):
        xv = np.array(x, dtype=object)
        if xv @ e @ xv == target and not (exclude_zero and not any(x)):
            found.append(x)
    return np.array(found, dtype=object).reshape(len(found), m)


def box_search_numpy(e: np.ndarray, target: int, bound: int, exclude_zero: bool, block: int = 4096) -> np.ndarray:
    """Split coordinates into an outer prefix looped in Python and an inner
    block evaluated as one array expression."""
    e = np.asarray(e, dtype=np.int64)
    m = e.shape[0]
    width = 2 * bound + 1
    inner = 0
    while inner < m and width ** (inner + 1) <= block:
        inner += 1
    inner = max(inner, 1) if m else 0
    outer = m - inner
    axis = np.arange(-bound, bound + 1, dtype=np.int64)
    tail = np.stack(np.meshgrid(*([axis] * inner), indexing="ij"), axis=-1).reshape(-1, inner)
    e_oo, e_oi, e_io, e_ii = e[:outer, :outer], e[:outer, outer:], e[outer:, :outer], e[outer:, outer:]
    q_tail = np.einsum("ki,ij,kj->k", tail, e_ii, tail)
    cross = e_oi + e_io.T  # outer x inner
    hits = []
    for prefix in itertools.product(range(-bound, bound + 1), repeat=outer):
        a = np.array(prefix, dtype=np.int64)
        q = int(a @ e_oo @ a) + tail @ (a @ cross) + q_tail
        idx = np.nonzero(q == target)[0]
        if idx.size:
            block_hits = np.hstack([np.broadcast_to(a, (idx.size, outer)), tail[idx]])
            hits.append(block_hits)
    out = np.vstack(hits) if hits else np.empty((0, m), dtype=np.int64)
    if exclude_zero and out.size:
        out = out[np.any(out != 0, axis=1)]
    return out


def _box_search_numba_impl(e, target, bound, exclude_zero, tail, q_tail):  # pragma: no cover - compiled
    # Odometer over the leading coordinates with the trailing block held at 0.
    # For each prefix, a tail row r contributes tail[r] . (S x)[inner] + q_tail[r].
    m = e.shape[0]
    inner = tail.shape[1]
    outer = m - inner
    s = e + e.T
    x = np.zeros(m, dtype=np.int64)
    for i in range(outer):
        x[i] = -bound
    sx = np.zeros(m, dtype=np.int64)
    for i in range(m):
        for j in range(m):
            sx[i] += s[i, j] * x[j]
    q = 0
    for i in range(m):
        for j in range(m):
            q += e[i, j] * x[i] * x[j]
    cap = 1024
    out = np.empty((cap, m), dtype=np.int64)
    count = 0
    while True:
        prefix_zero = True
        for i in range(outer):
            if x[i] != 0:
                prefix_zero = False
                break
        for r in range(tail.shape[0]):
            val = q + q_tail[r]
            for j in range(inner):
                val += tail[r, j] * sx[outer + j]
            if val != target:
                continue
            if exclude_zero and prefix_zero:
                nonzero = False
                for j in range(inner):
                    if tail[r, j] != 0:
                        nonzero = True
                        break
                if not nonzero:
                    continue
            if count == cap:
                cap *= 2
                grown = np.empty((cap, m), dtype=np.int64)
                grown[:count] = out[:count]
                out = grown
            for i in range(outer):
                out[count, i] = x[i]
            for j in range(inner):
                out[count, outer + j] = tail[r, j]
            count += 1
        k = outer - 1
        while k >= 0 and x[k] == bound:
            k -= 1
        if k < 0:
            break
        for j in range(k + 1, outer):
            delta = -2 * bound
            q += delta * sx[j] + delta * delta * e[j, j]
            for i in range(m):
                sx[i] += delta * s[i, j]
            x[j] = -bound
        q += sx[k] + e[k, k]
        for i in range(m):
            sx[i] += s[i, k]
        x[k] += 1
    return out[:count].copy()


if numba is not None:
    _box_search_numba = numba.njit(cache=True)(_box_search_numba_impl)
else:  # pragma: no cover
    _box_search_numba = None


def _tail_block(e: np.ndarray, bound: int, block: int):
    m = e.shape[0]
    width = 2 * bound + 1
    inner = 1
    while inner < m and width ** (inner + 1) <= block:
        inner += 1
    axis = np.arange(-bound, bound + 1, dtype=np.int64)
    tail = np.stack(np.meshgrid(*([axis] * inner), indexing="ij"), axis=-1).reshape(-1, inner)
    e_ii = e[m - inner:, m - inner:]
    return np.ascontiguousarray(tail), np.einsum("ki,ij,kj->k", tail, e_ii, tail)


def box_search_numba(e: np.ndarray, target: int, bound: int, exclude_zero: bool, block: int = 256) -> np.ndarray:
    if _box_search_numba is None:
        raise RuntimeError("numba is not available")
    e = np.ascontiguousarray(e, dtype=np.int64)
    tail, q_tail = _tail_block(e, bound, block)
    return _box_search_numba(e, np.int64(target), np.int64(bound), exclude_zero, tail, q_tail)


def box_search(e, target: int, bound: int, exclude_zero: bool = True, backend: str | None = None) -> list[tuple[int, ...]]:
    """All ``x`` in the box ``[-bound, bound]^m`` with ``x^t e x == target``,
    lexicographically sorted, as tuples of Python ints."""
    e_obj = np.array(e, dtype=object)
    if e_obj.size == 0:
        return []
    if not int64_safe(e_obj, bound) or abs(int(target)) >= _INT64_SAFE:
        rows = _box_search_python(e_obj, target, bound, exclude_zero)
    else:
        backend = backend or ("numba" if use_numba() else "numpy")
        e64 = np.array(e, dtype=np.int64)
        if backend == "numba":
            rows = box_search_numba(e64, target, bound, exclude_zero)
        elif backend == "numpy":
            rows = box_search_numpy(e64, target, bound, exclude_zero)
        else:
            raise ValueError(f"unknown backend {backend!r}")
    return [tuple(int(v) for v in row) for row in rows]
