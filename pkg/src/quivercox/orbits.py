"""Coxeter iteration on injective dimension vectors and the finiteness classifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import reduce
from math import lcm
from typing import Optional

from . import linalg
from .cartan import CartanMatrix, cartan_of, require_unimodular
from .coxeter import CoxeterMatrix, OrderResult, apply, coxeter_matrix, order
from .errors import IndexOutOfRange, OrbitsNotTerminated
from .quiver import AlgebraSpec

IntVector = tuple[int, ...]
DEFAULT_MAX_STEPS = 256


class OrbitStatus(str, Enum):
    LANDED = "LandedOnProjective"
    UNTERMINATED = "Unterminated"
    INCONSISTENT = "Inconsistent"


@dataclass(frozen=True)
class OrbitRecord:
    """Trace of ``dim I_i, Phi dim I_i, ...``; indices are 1-based vertex positions.

    ``steps`` is ``t_i`` when landed (``vectors[t_i] == dim P_sigma``), the
    step cap when unterminated, and the offending step when inconsistent.
    """

    injective_index: int
    vectors: tuple[IntVector, ...]
    status: OrbitStatus
    steps: int
    sigma: Optional[int] = None

    @property
    def landed(self) -> bool:
        return self.status is OrbitStatus.LANDED


class Verdict(str, Enum):
    FINITE = "RepresentationFinite"
    INFINITE = "RepresentationInfinite"
    UNDECIDED = "Undecided"


@dataclass
class ClassificationReport:
    verdict: Verdict
    degree_n: int
    order: OrderResult
    orbits: list[OrbitRecord] = field(default_factory=list)
    evidence: list[str] = field(default_factory=list)
    enumerated_indecomposables: Optional[list[IntVector]] = None
    projective_injective_count: Optional[int] = None
    bound_co1: Optional[int] = None


@dataclass(frozen=True)
class ExponentWitness:
    """Outcome of the explicit exponent built from orbit data.

    ``value`` is set only when ``Phi ** formula_value`` is the identity.
    """

    formula_value: int
    verified: bool
    r: int
    t: tuple[int, ...]
    sigma: tuple[int, ...]
    diagnostics: tuple[str, ...] = ()

    @property
    def value(self) -> Optional[int]:
        return self.formula_value if self.verified else None


def _is_dimension_vector(v: IntVector) -> bool:
    return any(v) and all(x >= 0 for x in v)


def injective_orbit(
    c: CartanMatrix, phi: CoxeterMatrix, i: int, max_steps: int = DEFAULT_MAX_STEPS
) -> OrbitRecord:
    if not 1 <= i <= c.m:
        raise IndexOutOfRange(f"injective index {i} outside 1..{c.m}")
    columns = {c.column(j): j + 1 for j in range(c.m)}
    v = c.row(i - 1)
    vectors = [v]
    for step in range(max_steps + 1):
        if v in columns:
            return OrbitRecord(i, tuple(vectors), OrbitStatus.LANDED, step, columns[v])
        if not _is_dimension_vector(v):
            return OrbitRecord(i, tuple(vectors), OrbitStatus.INCONSISTENT, step)
        if step == max_steps:
            break
        v = apply(phi, v)
        vectors.append(v)
    return OrbitRecord(i, tuple(vectors), OrbitStatus.UNTERMINATED, max_steps)


def all_injective_orbits(c: CartanMatrix, phi: CoxeterMatrix, max_steps: int = DEFAULT_MAX_STEPS) -> list[OrbitRecord]:
    return [injective_orbit(c, phi, i, max_steps) for i in range(1, c.m + 1)]


def indec_count_bound(m: int, l: int, d: int) -> int:
    if not 0 <= l <= m or d < 1:
        raise ValueError("need 0 <= l <= m and d >= 1")
    return (m - l) * d + l


def projective_injective_count(c: CartanMatrix) -> int:
    """Number of projective dimension vectors that are also injective ones.

    Equal dimension vectors need not mean isomorphic modules, so this is an
    upper-bound heuristic for the number of projective-injectives.
    """
    rows = set(c.matrix)
    return sum(1 for j in range(c.m) if c.column(j) in rows)


def _permutation_order(perm: dict[int, int]) -> int:
    seen: set[int] = set()
    lengths = []
    for start in perm:
        if start in seen:
            continue
        k, cur = 0, start
        while cur not in seen:
            seen.add(cur)
            cur = perm[cur]
            k += 1
        lengths.append(k)
    return reduce(lcm, lengths, 1)


def order_witness_from_orbits(orbit_data: list[OrbitRecord], phi: CoxeterMatrix) -> ExponentWitness:
    """Exponent ``d = 2r + sum_{t_i != 0} u_i`` assembled from landing data.

    ``r`` is the order of ``sigma``, ``h_i = t_sigma(i) + t_i + 2``,
    ``alpha = sigma^2`` of order ``s``, and ``u_i`` sums ``h`` along
    ``i, alpha(i), ..., alpha^(s-1)(i)``.  The value is only a candidate;
    it is accepted once ``Phi^d`` is checked to be the identity.
    """
    if not orbit_data or not all(rec.landed for rec in orbit_data):
        raise OrbitsNotTerminated("every injective orbit must land on a projective")
    t = {rec.injective_index: rec.steps for rec in orbit_data}
    sigma = {rec.injective_index: rec.sigma for rec in orbit_data}
    if sorted(sigma.values()) != sorted(sigma):
        raise OrbitsNotTerminated("landing map is not a permutation")
    r = _permutation_order(sigma)
    alpha = {i: sigma[sigma[i]] for i in sigma}
    s = _permutation_order(alpha)
    h = {i: t[sigma[i]] + t[i] + 2 for i in sigma}
    u = {}
    for i in sigma:
        total, cur = 0, i
        for _ in range(s):
            total += h[cur]
            cur = alpha[cur]
        u[i] = total
    d = 2 * r + sum(u[i] for i in sigma if t[i] != 0)
    verified = linalg.matrix_power(phi.matrix, d) == linalg.identity(phi.m)
    diagnostics = [f"r={r}", f"s={s}", f"h={dict(sorted(h.items()))}", f"u={dict(sorted(u.items()))}", f"formula d={d}"]
    if not verified:
        diagnostics.append(f"Phi^{d} is not the identity; formula exponent rejected")
    keys = sorted(sigma)
    return ExponentWitness(
        d, verified, r, tuple(t[i] for i in keys), tuple(sigma[i] for i in keys), tuple(diagnostics)
    )


def classify(spec: AlgebraSpec, max_steps: int = DEFAULT_MAX_STEPS) -> ClassificationReport:
    """Decide n-representation-finiteness from the Coxeter matrix.

    Infinite order means representation infinite for every n.  Finite order
    means representation finite when n is odd; for even n the injective
    orbits must all land on projectives, otherwise the answer is undecided.
    Step caps never decide anything.
    """
    c = cartan_of(spec)
    require_unimodular(c)
    n = spec.degree_n
    phi = coxeter_matrix(c, n)
    ord_result = order(phi)
    evidence = [
        f"n={n} ({'odd' if n % 2 else 'even'})",
        "n-hereditary: assumed",
        f"charpoly={list(ord_result.charpoly)}",
    ]
    if not ord_result.finite:
        if ord_result.cyclotomic_indices is None:
            evidence.append("Coxeter order infinite: characteristic polynomial is not a product of cyclotomics")
        else:
            evidence.append(
                f"Coxeter order infinite: cyclotomic indices {list(ord_result.cyclotomic_indices)} "
                "but Phi^lcm != I"
            )
        return ClassificationReport(Verdict.INFINITE, n, ord_result, evidence=evidence)

    evidence.append(f"Coxeter order finite: d={ord_result.order}")
    orbits = all_injective_orbits(c, phi, max_steps)
    landed = all(rec.landed for rec in orbits)
    for rec in orbits:
        evidence.append(f"orbit I{rec.injective_index}: {rec.status.value} after {rec.steps} steps")
    sigma_ok = landed and sorted(rec.sigma for rec in orbits) == list(range(1, c.m + 1))
    if landed and not sigma_ok:
        evidence.append("landing map is not a permutation: input inconsistent with n-hereditary assumption")

    if n % 2:
        verdict = Verdict.FINITE
        evidence.append("odd n and finite Coxeter order")
    elif sigma_ok:
        verdict = Verdict.FINITE
        evidence.append("even n: every injective orbit reaches a projective")
    else:
        verdict = Verdict.UNDECIDED
        evidence.append("even n with finite Coxeter order but not all orbits landed")

    report = ClassificationReport(verdict, n, ord_result, orbits, evidence)
    if verdict is Verdict.FINITE and sigma_ok:
        seen: dict[IntVector, None] = {}
        for rec in orbits:
            for v in rec.vectors:
                seen.setdefault(v, None)
        report.enumerated_indecomposables = sorted(seen)
        report.projective_injective_count = projective_injective_count(c)
        report.bound_co1 = indec_count_bound(c.m, report.projective_injective_count, ord_result.order)
    return report
