"""Exact computations for complexity-one T-varieties given by polyhedral divisors on P^1."""

from .cone3 import Cone3, hilbert_basis_3d
from .divisor import (
    INF,
    ZERO,
    NotProper,
    P1Point,
    PolyhedralDivisor,
    degree,
    degree_set,
    is_proper,
    normalize_for_versal,
    total_polytope,
)
from .downgrade import DowngradeInput, altmann_t1, crosscheck, downgrade, toric_t1_line_dims, upgrade
from .lattice import Cone2, dualize, hilbert_basis_2d
from .polyhedra import LatticePolyhedron, minkowski_sum
from .t1 import t1_dim
from .versal import NonRationalRoots, build_family, specialize_fiber

__all__ = [
    "Cone2", "Cone3", "DowngradeInput", "INF", "LatticePolyhedron", "NonRationalRoots",
    "NotProper", "P1Point", "PolyhedralDivisor", "ZERO", "altmann_t1", "build_family",
    "crosscheck", "degree", "degree_set", "downgrade", "dualize", "hilbert_basis_2d",
    "hilbert_basis_3d", "is_proper", "minkowski_sum", "normalize_for_versal",
    "specialize_fiber", "t1_dim", "toric_t1_line_dims", "total_polytope", "upgrade",
]
