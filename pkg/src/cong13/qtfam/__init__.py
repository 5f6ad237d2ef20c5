"""The direct and skew one-parameter families of 13-congruent curves and their specialisations."""
from .families import (DIR, G2_DEGREE, G2_PUBLISHED, KINDS, SKEW, TABLE4, TABLE5, TABLES, FamilyError,
                       FamilySpec, family_curves, family_point, family_spec, g2_checks, j_prime, recover_g2)
from .table import (ACCEPTANCE_T, FamilyPointVerdict, SpecialisationRow, distinct_j_at, family_point_check,
                    label_conductor, minimal_pair, specialisation_row, specialisation_table)

__all__ = ["ACCEPTANCE_T", "DIR", "G2_DEGREE", "G2_PUBLISHED", "KINDS", "SKEW", "TABLE4", "TABLE5", "TABLES",
           "FamilyError", "FamilyPointVerdict", "FamilySpec", "SpecialisationRow", "distinct_j_at",
           "family_curves", "family_point", "family_point_check", "family_spec", "g2_checks", "j_prime",
           "label_conductor", "minimal_pair", "recover_g2", "specialisation_row", "specialisation_table"]
