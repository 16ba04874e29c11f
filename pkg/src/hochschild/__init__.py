"""Exact Hochschild cohomology with cup products and Gerstenhaber
brackets computed through homotopy liftings, for finite-dimensional
graded algebras and their bicharacter-twisted tensor products."""

from .algebra import (
    AlgebraElement,
    BimoduleWord,
    GradedAlgebra,
    tensor_algebra_element,
    truncated_polynomial,
    twisted_tensor_algebra,
)
from .bicharacter import Bicharacter, koszul_sign, trivial_bicharacter, uniform_bicharacter
from .complexes import (
    Cochain,
    FreeBimoduleComplex,
    are_cohomologous,
    cohomology_basis,
    is_coboundary,
    is_cocycle,
    scalar_expansion,
    truncated_polynomial_resolution,
    verify_exactness,
)
from .fields import GF, QQ, parse_field
from .grading import INHOMOGENEOUS, TRIVIAL, ZERO_DEGREE, ZZ, Degree, GradingGroup
from .lifting import (
    HomotopyLifting,
    SelfMap,
    bracket,
    cup,
    diagonal_by_lifting,
    lift_chain_map,
    periodic_diagonal,
    solve_homotopy_lifting,
    verify_homotopy_lifting,
)
from .oracle import bar_resolution, circle_bracket, comparison_maps, oracle_check
from .twist import (
    tensor_cochain,
    tensor_homotopy_lifting,
    twisted_diagonal,
    twisted_tensor_resolution,
    verify_factorization,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
