"""The group G = PSL_2(F_13) inside SL_7, its invariants and covariants, and the special points of X(13)."""
from .covariants import (DEGREES, REGISTRY, CovariantVector, PointwiseCovariants, UnknownCovariant, c6_symbolic,
                         dot, named_covariant, registry_json)
from .cyclo import CycloMatrix, generators, identity, m2, m6, m13, tilde
from .forms import F, N_x13, Q, cubics_w3, hessian_bracket, published_N, quartics_w4
from .group import GROUP_ORDER, ClosureError, all_special_points, group_closure, group_mod_p, special_points
from .identities import (DETERMINANT_DEGREES, ORBIT_SIZES, IdentityVerdict, OrbitError, determinant_identity,
                         identity_check_on_curve, orbit_points)
from .invariants import (PLAIN, SKEW, CapExceeded, InvariantSpace, invariant_dimension, reynolds_space)
from .modp import SpecialField, special_fields

__all__ = [
    "DEGREES", "REGISTRY", "CovariantVector", "PointwiseCovariants", "UnknownCovariant", "c6_symbolic", "dot",
    "named_covariant", "registry_json", "CycloMatrix", "generators", "identity", "m2", "m6", "m13", "tilde",
    "F", "N_x13", "Q", "cubics_w3", "hessian_bracket", "published_N", "quartics_w4", "GROUP_ORDER",
    "ClosureError", "all_special_points", "group_closure", "group_mod_p", "special_points",
    "DETERMINANT_DEGREES", "ORBIT_SIZES", "IdentityVerdict", "OrbitError", "determinant_identity",
    "identity_check_on_curve", "orbit_points", "PLAIN", "SKEW", "CapExceeded", "InvariantSpace",
    "invariant_dimension", "reynolds_space", "SpecialField", "special_fields",
]
