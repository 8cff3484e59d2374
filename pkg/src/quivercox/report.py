"""Canonical JSON reports.

Keys are sorted, integers are written as JSON integers of unbounded size,
rationals as ``"p/q"`` strings and enums by value, so identical inputs give
byte-identical documents.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from . import __version__
from .coxeter import OrderResult
from .forms import DefinitenessReport
from .orbits import ClassificationReport, ExponentWitness, OrbitRecord


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, OrderResult):
        return order_payload(obj)
    if isinstance(obj, OrbitRecord):
        return orbit_payload(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def order_payload(res: OrderResult) -> dict:
    kind = {"kind": "Finite", "d": res.order} if res.finite else {"kind": "Infinite"}
    return {
        "order": kind,
        "cyclotomic_indices": None if res.cyclotomic_indices is None else list(res.cyclotomic_indices),
        "verified": res.verified,
        "charpoly": list(res.charpoly),
    }


def orbit_payload(rec: OrbitRecord) -> dict:
    status: dict[str, Any] = {"kind": rec.status.value}
    if rec.landed:
        status.update(t=rec.steps, sigma=rec.sigma)
    elif rec.status.value == "Unterminated":
        status.update(steps=rec.steps)
    else:
        status.update(step=rec.steps, vector=list(rec.vectors[-1]))
    return {"injective_index": rec.injective_index, "vectors": [list(v) for v in rec.vectors], "status": status}


def definiteness_payload(rep: DefinitenessReport) -> dict:
    return {
        "positive_definite": rep.positive_definite,
        "symmetrized_minors": to_jsonable(list(rep.symmetrized_minors)),
        "witness": None if rep.witness is None else list(rep.witness),
    }


def classification_payload(rep: ClassificationReport) -> dict:
    return {
        "verdict": {"kind": rep.verdict.value},
        "degree_n": rep.degree_n,
        "order": order_payload(rep.order),
        "orbits": [orbit_payload(r) for r in rep.orbits],
        "evidence": list(rep.evidence),
        "enumerated_indecomposables": (
            None if rep.enumerated_indecomposables is None else [list(v) for v in rep.enumerated_indecomposables]
        ),
        "enumerated_count": (
            None if rep.enumerated_indecomposables is None else len(rep.enumerated_indecomposables)
        ),
        "projective_injective_count": rep.projective_injective_count,
        "projective_injective_count_note": "dimension-vector coincidences; an upper-bound heuristic",
        "bound_co1": rep.bound_co1,
    }


def witness_payload(w: ExponentWitness) -> dict:
    return {
        "formula_value": w.formula_value,
        "verified": w.verified,
        "value": w.value,
        "r": w.r,
        "t": list(w.t),
        "sigma": list(w.sigma),
        "diagnostics": list(w.diagnostics),
    }


@dataclass
class Report:
    command: str
    input_digest: str
    payload: dict = field(default_factory=dict)
    diagnostics: list[str] = field(default_factory=list)
    seed: Optional[int] = None
    tool_version: str = __version__

    def to_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "input_digest": self.input_digest,
            "command": self.command,
            "payload": to_jsonable(self.payload),
            "diagnostics": list(self.diagnostics),
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text)
        return cls(
            command=d["command"],
            input_digest=d["input_digest"],
            payload=d["payload"],
            diagnostics=d["diagnostics"],
            seed=d["seed"],
            tool_version=d["tool_version"],
        )
