# %% [markdown]
# # Fuzzy cosets and the quotient G/mu

# %%
from fractions import Fraction as F

from agfuzz import (build_crisp_quotient, build_quotient_by_mu, fuzzy_coset, fuzzy_index,
                    fuzzy_lagrange, fuzzy_subset, isomorphism_theorem, level_set,
                    natural_homomorphism, promote_to_ag_group)
from agfuzz.formats import format_quotient_text
from agfuzz.grades import format_grade
from agfuzz.tables import klein_four_table

g = promote_to_ag_group(klein_four_table())
mu = fuzzy_subset(g, [1, 1, F(1, 2), F(1, 2)])

for x in g.elements:
    print(x, [format_grade(t) for t in fuzzy_coset(mu, x).grades])

# %% [markdown]
# Elements with the same coset collapse to one class.  The classes form an
# AG-group again, with the class of the identity as left identity.

# %%
q = build_quotient_by_mu(mu)
print(format_quotient_text(q))
print("index", fuzzy_index(mu))

# %% [markdown]
# The crisp quotient by the level set is the same thing.

# %%
h = level_set(mu).subgroup
print(format_quotient_text(build_crisp_quotient(g, h)))
print(isomorphism_theorem(mu))

theta, check = natural_homomorphism(mu)
print("theta", theta.map, "kernel", check.detail["kernel"])

# %%
lag = fuzzy_lagrange(mu)
print(lag.passed, lag.detail["index"], "divides", lag.detail["order"])
