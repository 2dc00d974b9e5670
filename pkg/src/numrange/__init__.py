"""Numerical ranges of periodic tridiagonal operators via symbol matrices.

The closure of the numerical range of a periodic tridiagonal operator is
the closure of the convex hull of the numerical ranges of its symbol
matrices, a one-parameter family of small matrices with phase-twisted
corner entries.  This package builds the finite matrices (truncations,
circulants, symbols, the diagonalizing block unitary), sweeps numerical
range boundaries, and verifies the resulting set identities numerically.
"""

from .linalg import (
    HermEigen,
    NoConvergenceError,
    NotHermitianError,
    adjoint,
    as_matrix,
    eig_hermitian,
    extreme_pair,
    frobenius_distance,
    hermitian_part,
    jacobi_eig_hermitian,
    mat_mul,
)
from .operators import (
    PeriodSpec,
    SpecParseError,
    build_block_unitary,
    build_circulant,
    build_symbol,
    build_truncation,
    conjecture_matrices,
    fourier_vector,
    lift_eigenvector,
    phi_grid,
)
from .geometry import (
    RangePolygon,
    contains,
    convex_hull,
    distance_to_region,
    hausdorff,
    polygon_from_csv,
    polygon_to_csv,
    support_width,
)
from .sweep import (
    NotSelfAdjointError,
    SweepConfig,
    boundary_points,
    range_boundary,
    rayleigh_samples,
    selfadjoint_interval,
    symbol_union_hull,
    truncation_range,
)
from .ellipse import (
    EllipseParams,
    check_semiplane_containment,
    symbol_ellipse,
    symbol_ellipse_point,
    special_vector_value,
    stadium_region,
    tangency_parameter,
    tangent_line_support,
)
from .checks import (
    CheckReport,
    check_block_diagonalization,
    check_conjecture,
    check_pair_ellipse_axes,
    check_eigenvector_lifting,
    check_hull_convergence,
    check_range_negation_symmetry,
    check_selfadjoint_convergence,
    check_stadium_identity,
    check_stadium_support_widths,
    check_spectrum_union,
    check_stadium_separation,
    check_truncation_containment,
    random_period_specs,
    reports_to_lines,
    run_all,
)

__version__ = "0.1.0"
