# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Univalence radii across the theorem variants
#
# Every variant reduces to a decreasing profile `G(r)` with `G(0) = 1`.
# The univalence radius is where it crosses zero, and the schlicht radius
# is a closed formula evaluated there.

# %%
import numpy as np

from landaupoly import landau_radii, make_params, profile_value

# %% [markdown]
# ## One parameter set per variant

# %%
cases = [
    make_params("t1", 2, (2, 1), (1,)),
    make_params("t2", 2, 2),
    make_params("t3", 2, (1, 1)),
    make_params("t4", 2, (2, 1)),
    make_params("t5", 2, (1, 1)),
    make_params("tc", 2, 2),
    make_params("classical", 1, 2),
]
for p in cases:
    res = landau_radii(p)
    R = "-" if res.schlicht_radius is None else f"{res.schlicht_radius:.12f}"
    print(f"{p.variant.value:>9}  M={p.M}  radius={res.radius:.12f}  schlicht={R}")

# %% [markdown]
# A couple of these have closed forms to compare against.

# %%
print(landau_radii(cases[0]).radius - (2 - np.sqrt(3)))
print(landau_radii(cases[5]).radius - (1 - 2 / np.sqrt(5)))
print(landau_radii(cases[4]).radius - 1 / np.sqrt(3))

# %% [markdown]
# ## The profile itself
#
# For `t3` with unit bounds the profile is just `1 - 2r`.

# %%
p = make_params("t3", 2, (1, 1))
r = np.linspace(0, 0.9, 10)
np.c_[r, [profile_value(p, x) for x in r]]

# %% [markdown]
# ## t2 against the common-bound result
#
# With `m = 2` and equal bounds the `t2` radius sits above the older one
# for every bound in the sweep.

# %%
Ms = np.arange(1.25, 5.01, 0.25)
r2 = np.array([landau_radii(make_params("t2", 2, M)).radius for M in Ms])
rc = np.array([landau_radii(make_params("tc", 2, M)).radius for M in Ms])
table = np.c_[Ms, r2, rc, r2 / rc]
print(np.array2string(table, precision=6, suppress_small=True))
assert np.all(r2 > rc)

# %% [markdown]
# Larger bounds always shrink the radius.

# %%
assert np.all(np.diff(r2) < 0) and np.all(np.diff(rc) < 0)

# %% [markdown]
# ## Degenerate and clamped cases
#
# An analytic `t2` function with `M0 = 1` is a rotation, so the profile
# never vanishes and the whole disk is univalent. Heavy conjugate terms
# can push the schlicht formula negative, which is reported as zero.

# %%
print(landau_radii(make_params("t2", 1, 1)))
print(landau_radii(make_params("t2", 2, (2, 2))).schlicht_clamped)
