"""Exact computer algebra for Cox rings of symplectic quotient resolutions."""
from .cyclotomic import CycNum, CyclotomicField, cyc_inverse, cyc_normalize, field
from .linalg import FieldMatrix, IntMatrix, diagonalize_finite_order, smith_normal_form
from .poly import Poly, PolyRing, linear_substitute

__version__ = "0.1.0"
