"""From 14 points to equations: X(13), the twists X_E(13,k), j-maps and 2-isogenies."""
from .isogeny import (SingularTransport, expected_determinant, isogenous_curve, pullback_space,
                      symbolic_determinant_check, transport_matrix, two_isogeny_transport)
from .models import (CUBIC_WEIGHTS, WEIGHTS, Cusp, ModelError, TwistModel, build_model, calibrate_k2,
                     covariant_values, discriminant_d, j_invariant, jmap, model_for_curve,
                     model_from_json, model_to_json, published_phi, published_q, rescale_space,
                     run_pipeline, weight_substitution)
from .pfaffian import MalformedForm, pfaffian, pfaffian_q_recovery, principal_pfaffians
from .points import PointScheme, SchemeError, fricke_j, parameter_polynomial, twist_scheme, x13_scheme
from .spaces import (FormSpace, PipelineError, apolar_complement, apolar_cubics, bracket,
                     cubics_from_partials, quadrics_through, syzygy_support_span, unique_apolar_quartic)
from .symbolic import derive_invariant_quartic, invariant_quartic, model_from_quartic

__all__ = [
    "CUBIC_WEIGHTS", "Cusp", "FormSpace", "MalformedForm", "ModelError", "PipelineError", "PointScheme",
    "SchemeError", "SingularTransport", "TwistModel", "WEIGHTS", "apolar_complement", "apolar_cubics",
    "bracket", "build_model", "calibrate_k2", "covariant_values", "cubics_from_partials",
    "derive_invariant_quartic", "discriminant_d", "expected_determinant", "fricke_j", "invariant_quartic",
    "isogenous_curve", "j_invariant", "jmap", "model_for_curve", "model_from_json", "model_from_quartic",
    "model_to_json", "parameter_polynomial", "pfaffian", "pfaffian_q_recovery", "principal_pfaffians",
    "published_phi", "published_q", "pullback_space", "quadrics_through", "rescale_space", "run_pipeline",
    "symbolic_determinant_check", "syzygy_support_span", "transport_matrix", "twist_scheme",
    "two_isogeny_transport", "unique_apolar_quartic", "weight_substitution", "x13_scheme",
]
