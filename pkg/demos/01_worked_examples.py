# %% [markdown]
# # Two small AG-groups
#
# An AG-group is a magma with the left invertive law (ab)c = (cb)a, a left
# identity and inverses.  Start with the order-4 table i*j = (j - i) mod 4.

# %%
from fractions import Fraction as F

from agfuzz import (check_derived_identities, fuzzy_subset, is_fuzzy_ag_subgroup,
                    is_normal, level_set, promote_to_ag_group, validate_table)
from agfuzz.tables import ORDER4_ROWS, klein_four_table

g = promote_to_ag_group(validate_table(ORDER4_ROWS))
print(g.table.array)
print("left identity", g.identity, "inverses", g.inverse)
print("commutative?", g.table.is_commutative())

# %% [markdown]
# It is not associative, but the derived identities a(bc) = b(ac) and
# (xy)^-1 = x^-1 y^-1 still hold.

# %%
print(check_derived_identities(g).violations)

# %% [markdown]
# A fuzzy subset with a high grade at the identity and a lower one elsewhere.

# %%
mu = fuzzy_subset(g, [1, F(1, 2), F(1, 2), F(1, 2)])
print("fuzzy AG-subgroup:", is_fuzzy_ag_subgroup(mu))
print("normal:", is_normal(mu))          # fails, with a witness (x, y)
print("level set:", level_set(mu).members)

# %% [markdown]
# The Klein four-group with three grade levels is normal.

# %%
k4 = promote_to_ag_group(klein_four_table())
nu = fuzzy_subset(k4, [1, F(1, 2), F(1, 4), F(1, 4)])
print("normal:", is_normal(nu), "level set:", level_set(nu).members)
