"""Exact Schubert-calculus engine for Voisin self-maps of varieties of
r-planes in cubic hypersurfaces.

The heavy lifting lives in the C++ extension ``chowkit._core``; this package
re-exports its operations.
"""

from chowkit._core import (
    case_names,
    determinant_degrees,
    dims_report,
    eigen_crosscheck,
    fixed_locus_class,
    psi_star_h,
    rank_strata_codims,
    run_case,
    schubert_product,
    verify_all,
    voisin_degree,
)

__all__ = [
    "case_names",
    "determinant_degrees",
    "dims_report",
    "eigen_crosscheck",
    "fixed_locus_class",
    "psi_star_h",
    "rank_strata_codims",
    "run_case",
    "schubert_product",
    "verify_all",
    "voisin_degree",
]
