"""Named theorem checks for population sweeps.

Each entry takes a fuzzy AG-subgroup and returns a Check, a list of
Checks, or ``None`` when the statement does not apply (normality-only
theorems on non-normal subsets).
"""

from .fuzzy import check_commutation, check_elementary_lemmas, check_translation_lemma, is_normal
from .quotients import (
    check_quotient_fuzzy,
    check_quotient_theorem,
    coset_equality_theorem,
    fuzzy_lagrange,
    isomorphism_theorem,
    natural_homomorphism,
    normal_coset_identity,
    normal_grade_theorem,
)


def _normal_only(fn):
    def run(mu):
        if not is_normal(mu)[0]:
            return None
        return fn(mu)
    run.__name__ = fn.__name__
    return run


SUITE = {
    "commutation": check_commutation,
    "elementary": check_elementary_lemmas,
    "translation": check_translation_lemma,
    "coset-equality": coset_equality_theorem,
    "quotient-fuzzy": check_quotient_fuzzy,
    "lagrange": fuzzy_lagrange,
    "normal-coset": _normal_only(normal_coset_identity),
    "quotient": _normal_only(check_quotient_theorem),
    "normal-grade": _normal_only(normal_grade_theorem),
    "isomorphism": _normal_only(isomorphism_theorem),
    "kernel": _normal_only(lambda mu: natural_homomorphism(mu)[1]),
}


def select(names=None):
    if not names:
        return dict(SUITE)
    unknown = [n for n in names if n not in SUITE]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; choose from {sorted(SUITE)}")
    return {n: SUITE[n] for n in names}
