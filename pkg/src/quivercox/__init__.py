"""Exact homological invariants of bound quiver algebras."""

__version__ = "0.1.0"

from .cartan import CartanMatrix, cartan_matrix, cartan_of, check_unimodular, tensor_cartan
from .coxeter import CoxeterMatrix, coxeter_matrix, order
from .forms import EulerForm, euler_form, find_value_vectors, is_positive_definite, quadratic
from .orbits import classify, injective_orbit, order_witness_from_orbits
from .quiver import AlgebraSpec, BoundQuiver, format_spec, parse_spec, tensor_quiver

__all__ = [
    "AlgebraSpec",
    "BoundQuiver",
    "CartanMatrix",
    "CoxeterMatrix",
    "EulerForm",
    "cartan_matrix",
    "cartan_of",
    "check_unimodular",
    "classify",
    "coxeter_matrix",
    "euler_form",
    "find_value_vectors",
    "format_spec",
    "injective_orbit",
    "is_positive_definite",
    "order",
    "order_witness_from_orbits",
    "parse_spec",
    "quadratic",
    "tensor_cartan",
    "tensor_quiver",
]
