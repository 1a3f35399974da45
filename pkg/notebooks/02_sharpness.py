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
# # Why the t1 radius cannot be improved
#
# The extremal `G1` has leading component
# `M0^2 z + (M0^3 - M0) log(1 - z/M0)` and conjugate terms `-M_k conj(z)^k z^p/p!`.
# On the positive real axis it is real, and its derivative there is the
# radius profile. So it climbs until `r0` and falls after it, and any level
# just below the peak is hit twice.

# %%
import numpy as np

from landaupoly import (
    build_extremal,
    check_schlicht_coverage,
    check_univalence_grid,
    eval_poly,
    g1_spec,
    g2_profile,
    landau_radii,
    make_params,
    sharpness_witness,
)

params = make_params("t1", 2, (2, 1), (1,))
spec = g1_spec(params)
G = build_extremal(spec)
res = landau_radii(params)
r0, r1 = res.radius, res.schlicht_radius
r0, r1

# %% [markdown]
# The real profile peaks at `r0` with value `r1`.

# %%
x = np.linspace(0, 1, 11)
g = np.array([g2_profile(spec, t) for t in x])
print(np.c_[x, g])
print("peak error:", g2_profile(spec, r0) - r1)

# %% [markdown]
# ## A colliding pair just past the radius

# %%
w = sharpness_witness(spec, r0 + 0.05)
print(w)
print("image gap:", abs(eval_poly(G, w.x1) - eval_poly(G, w.x2)))

# %% [markdown]
# The grid check passes strictly inside `r0` but fails as soon as the
# witness pair is added to the sample set at the larger radius.

# %%
print(check_univalence_grid(G, 0.99 * r0, 600).passed)
print(check_univalence_grid(G, r0 + 0.05, 600, extra_points=w.pair).passed)

# %% [markdown]
# ## Coverage is tight too
#
# The image of `|z| = r0` stays outside the disk of radius `r1` and touches
# it at `z = r0`, so the min-modulus margin is zero up to rounding.

# %%
cov = check_schlicht_coverage(G, r0, r1, boundary_samples=4096)
cov.passed, cov.margin, set(cov.details["windings"])
