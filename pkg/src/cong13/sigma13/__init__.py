"""X_1(13), the quotient surface Sigma, the maps between them and the worked appendix example."""
from .appendix import (DELTA_E1, DELTA_E2, EXAMPLE_POINT, FIBER_POINT, FIBER_T, OBSTRUCTING_PRIME,
                       NonTorsionCertificate, appendix_examples, fiber_non_torsion, fiber_points, fiber_quartic,
                       fiber_squarefree, isomorphic_over_q, multiples, quartic_jacobian, quartic_to_weierstrass)
from .surface import (MembershipVerdict, Pole, alpha, alpha_mod_p, beta, c6_generator, c6_preserves_model,
                      diagram_commutes, f_factorisation_identity, f_poly, f_value, h_poly, h_value, lam_mu,
                      on_x1, pi_invariance_identity, pi_map, pi_sum_identity, sigma_membership)

__all__ = ["DELTA_E1", "DELTA_E2", "EXAMPLE_POINT", "FIBER_POINT", "FIBER_T", "OBSTRUCTING_PRIME",
           "MembershipVerdict", "NonTorsionCertificate", "Pole", "alpha", "alpha_mod_p", "appendix_examples",
           "beta", "c6_generator", "c6_preserves_model", "diagram_commutes", "f_factorisation_identity",
           "f_poly", "f_value", "fiber_non_torsion", "fiber_points", "fiber_quartic", "fiber_squarefree",
           "h_poly", "h_value", "isomorphic_over_q", "lam_mu", "multiples", "on_x1", "pi_invariance_identity",
           "pi_map", "pi_sum_identity", "quartic_jacobian", "quartic_to_weierstrass", "sigma_membership"]
