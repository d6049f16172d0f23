"""Exact Bergman projections of polynomials on ellipsoids, Reinhardt domains and
their polynomial-automorphism images, plus polyharmonic projections on real
ellipsoids.  All arithmetic is over Q(i); every projection comes with an exactly
checkable orthogonality certificate.
"""

from .domains import (
    Ellipsoid,
    ReinhardtDomain,
    complex_ellipsoid,
    contains,
    defining_poly_complex,
    ellipsoid_from_affine,
    ellipsoid_from_poly,
    polydisc,
    unit_ball,
)
from .errors import (
    BergmanError,
    DimensionMismatch,
    InvalidDomain,
    InvalidPair,
    MomentUnavailable,
    ParseError,
    SingularGram,
    SingularMatrix,
)
from .fischer import (
    FischerCertificate,
    bergman_project,
    build_phi_matrix,
    dimensions,
    phi_map,
    quotient_basis,
)
from .linalg import solve_exact
from .moments import (
    PiRational,
    ball_moment,
    ellipsoid_moment,
    gram_project,
    holomorphic_monomials,
    inner_product,
    reinhardt_moment,
    reinhardt_project,
    verify_orthogonality,
)
from .poly import (
    Form01,
    Polynomial,
    compose,
    conjugate_poly,
    convert_coords,
    laplacian_power,
    poly_arith,
    wirtinger,
    x,
    z,
    zbar,
)
from .polyharmonic import PolyharmonicCertificate, polyharmonic_basis, polyharmonic_project, psi_map
from .scalars import GaussianRational
from .transport import BiholoPair, TransportedDomain, transport_project, validate_pair

__version__ = "0.1.0"

__all__ = [
    "Ellipsoid",
    "ReinhardtDomain",
    "complex_ellipsoid",
    "contains",
    "defining_poly_complex",
    "ellipsoid_from_affine",
    "ellipsoid_from_poly",
    "polydisc",
    "unit_ball",
    "BergmanError",
    "DimensionMismatch",
    "InvalidDomain",
    "InvalidPair",
    "MomentUnavailable",
    "ParseError",
    "SingularGram",
    "SingularMatrix",
    "FischerCertificate",
    "bergman_project",
    "build_phi_matrix",
    "dimensions",
    "phi_map",
    "quotient_basis",
    "solve_exact",
    "PiRational",
    "ball_moment",
    "ellipsoid_moment",
    "gram_project",
    "holomorphic_monomials",
    "inner_product",
    "reinhardt_moment",
    "reinhardt_project",
    "verify_orthogonality",
    "Form01",
    "Polynomial",
    "compose",
    "conjugate_poly",
    "convert_coords",
    "laplacian_power",
    "poly_arith",
    "wirtinger",
    "x",
    "z",
    "zbar",
    "PolyharmonicCertificate",
    "polyharmonic_basis",
    "polyharmonic_project",
    "psi_map",
    "GaussianRational",
    "BiholoPair",
    "TransportedDomain",
    "transport_project",
    "validate_pair",
]
