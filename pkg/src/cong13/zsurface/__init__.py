"""The surfaces Z(13, k) as double covers y^2 = F_k(r, s, 1), their curves, and the bi-invariants."""
from .biinvariants import (AmbiguousReconstruction, biinvariant_basis_reconstruct, exact_identities,
                           named_biinvariants, parametrization_identities, reconstruction_reports,
                           relations_on_curve, section6_suite, t_basis, u_basis, vanishing_dimension,
                           w_form, z_basis)
from .curves import (LISTED_CURVES, GenusCurveVerdict, ListedCurve, ParametrisationError, check_listed_curves,
                     cover_restriction, divides_discriminant, genus_curve_check, rational_parametrisation)
from .surface import (CoverResult, SurfaceError, SurfaceModel, affine_identity_check, check_table_points,
                      cover_membership, F_poly, F_value, homogeneity_check, surface_model, table_points)
from .table1 import TABLE1, Table1Row, Table1Verdict, check_table1, table1_check, table1_row

__all__ = [
    "AmbiguousReconstruction", "biinvariant_basis_reconstruct", "exact_identities", "named_biinvariants",
    "parametrization_identities", "reconstruction_reports", "relations_on_curve", "section6_suite",
    "t_basis", "u_basis", "vanishing_dimension", "w_form", "z_basis",
    "LISTED_CURVES", "GenusCurveVerdict", "ListedCurve", "ParametrisationError", "check_listed_curves",
    "cover_restriction", "divides_discriminant", "genus_curve_check", "rational_parametrisation",
    "CoverResult", "SurfaceError", "SurfaceModel", "affine_identity_check", "check_table_points",
    "cover_membership", "F_poly", "F_value", "homogeneity_check", "surface_model", "table_points",
    "TABLE1", "Table1Row", "Table1Verdict", "check_table1", "table1_check", "table1_row",
]
