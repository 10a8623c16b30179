# %% [markdown]
# # Checking every theorem on every small instance
#
# Fuzzy AG-subgroups are generated from chains of subgroups; any other one
# is a monotone regrading of these, and the checks do not see grades beyond
# their order.

# %%
from agfuzz import population_sweep
from agfuzz.fuzzy import is_normal
from agfuzz.quotients import fuzzy_lagrange
from agfuzz.search import population
from agfuzz.suite import SUITE

sweep = population_sweep(SUITE, range(1, 6))
print("groups per order", dict(sweep.groups))
print("instances", sweep.instances)
for name, c in sweep.summary().items():
    print(f"  {name:32s} {c}")
print("failures:", sweep.failures)

# %% [markdown]
# Is G/mu still well defined when mu is not normal?

# %%
seen = wd = 0
for inst, g, mu in population(range(1, 7)):
    if not is_normal(mu)[0]:
        seen += 1
        wd += fuzzy_lagrange(mu).detail["quotient_well_defined"]
print(f"well defined for {wd} of {seen} non-normal instances up to order 6")
