"""Exact Radon partitions by dimension reduction, with algebraic and brute-force cross-checks."""

from .algebraic import AffineDependence, affine_dependence, radon_algebraic, radon_from_dependence
from .certificate import Partition, RadonCertificate
from .errors import DegenerateInputError, GeneratorFailure, InvalidInputError, InvariantError
from .geometry import PointSet, is_general_position
from .oracle import brute_force_radon, hulls_intersection_info
from .recursive import radon_recursive

__all__ = [
    "AffineDependence",
    "DegenerateInputError",
    "GeneratorFailure",
    "InvalidInputError",
    "InvariantError",
    "Partition",
    "PointSet",
    "RadonCertificate",
    "affine_dependence",
    "brute_force_radon",
    "hulls_intersection_info",
    "is_general_position",
    "radon_algebraic",
    "radon_from_dependence",
    "radon_recursive",
]
