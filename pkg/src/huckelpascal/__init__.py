"""Exact determinant laboratory for honeycomb Huckel and Pascal matrices."""

__version__ = "0.1.0"

from .cyclotomic import CycInt, GaussInt, RadicalValue, theta_point
from .formulas import (
    formula_A,
    formula_AHT,
    formula_macmahon,
    mitra_ratio,
    predicted_det,
    theta_table,
    unit_shift_det,
)
from .linalg import (
    DET_STRATEGIES,
    charpoly,
    coefficient_list,
    det,
    permanent,
    permutation_parity_census,
    rank1_factor,
)
from .matrices import (
    PolyMatrix,
    TriangleGraph,
    build_general_binomial,
    build_huckel,
    build_pascal,
    build_reduced,
)
from .oracle import count_matchings, count_plane_partitions, square_coefficient_audit
from .poly import MultiPoly, NotDivisible, poly_from_text, svar, xvar, yvar, zvar
from .schur import condensation_det, condense, schur_det_step
from .verify import (
    VerifyReport,
    verify_conjecture1,
    verify_conjecture2,
    verify_conjecture3,
    verify_props,
)

__all__ = [
    "CycInt",
    "DET_STRATEGIES",
    "GaussInt",
    "MultiPoly",
    "NotDivisible",
    "PolyMatrix",
    "RadicalValue",
    "TriangleGraph",
    "VerifyReport",
    "build_general_binomial",
    "build_huckel",
    "build_pascal",
    "build_reduced",
    "charpoly",
    "coefficient_list",
    "condensation_det",
    "condense",
    "count_matchings",
    "count_plane_partitions",
    "det",
    "formula_A",
    "formula_AHT",
    "formula_macmahon",
    "mitra_ratio",
    "permanent",
    "permutation_parity_census",
    "poly_from_text",
    "predicted_det",
    "rank1_factor",
    "schur_det_step",
    "square_coefficient_audit",
    "svar",
    "theta_point",
    "theta_table",
    "unit_shift_det",
    "verify_conjecture1",
    "verify_conjecture2",
    "verify_conjecture3",
    "verify_props",
    "xvar",
    "yvar",
    "zvar",
]
