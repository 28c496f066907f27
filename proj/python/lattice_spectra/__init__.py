"""Dirichlet Laplace eigenvalues and universal eigenvalue inequalities on
finite subsets of the integer lattice."""

from ._core import (  # noqa: F401
    DirichletOperator,
    InequalityRecord,
    Region,
    SearchConfig,
    SearchTrace,
    SolverDiagnostics,
    Spectrum,
    anneal,
    assemble,
    ball_region,
    boundary,
    box_region,
    box_spectrum_oracle,
    check_bipartite_symmetry,
    check_hp,
    check_partial_sums,
    check_ppw,
    check_yang1,
    check_yang2,
    full_report,
    full_spectrum,
    gamma_form,
    green_residual,
    is_connected,
    neighbors_in,
    path_region,
    random_connected_region,
    region_from_json,
    region_to_json,
    slack_objective,
    spectral_checks,
    weighted_inner,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
