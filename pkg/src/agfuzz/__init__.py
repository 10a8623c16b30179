"""Finite AG-groups, fuzzy AG-subgroups, fuzzy cosets and quotients."""

from .cayley import (
    AGGroup,
    CayleyTable,
    Homomorphism,
    Subgroup,
    all_subgroups,
    are_isomorphic,
    ag_group,
    check_derived_identities,
    check_homomorphism,
    check_left_invertive,
    coset_decomposition,
    crisp_coset,
    find_isomorphism,
    is_subgroup,
    promote_to_ag_group,
    relabel,
    subgroup,
    validate_table,
)
from .fuzzy import (
    FuzzySubset,
    LevelSet,
    check_commutation,
    check_elementary_lemmas,
    check_translation_lemma,
    constant_subset,
    fuzzy_population,
    fuzzy_subset,
    generate_fuzzy_subgroups,
    is_fuzzy_ag_subgroup,
    is_fuzzy_by_level_sets,
    is_normal,
    level_set,
    pullback,
)
from .grades import as_grade, format_grade, parse_grade
from .quotients import (
    FuzzyCoset,
    InducedFuzzySubset,
    QuotientStructure,
    build_crisp_quotient,
    build_quotient_by_mu,
    check_quotient_fuzzy,
    check_quotient_theorem,
    coset_equality_theorem,
    fuzzy_coset,
    fuzzy_index,
    fuzzy_lagrange,
    induced_on_quotient,
    isomorphism_theorem,
    lift_correspondence,
    natural_homomorphism,
    normal_coset_identity,
    normal_grade_theorem,
    quotient_fuzzy_subgroup,
)
from .report import Check, Report, emit_report
from .search import EnumerationTask, enumerate_ag_groups, population_sweep

__version__ = "0.1.0"
