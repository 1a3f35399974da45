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
# # Random admissible functions
#
# `generate_admissible` draws polynomial components whose bounds are
# certified through coefficient sums (`|f| <= sum |a_n|` on the disk), so
# every draw meets the hypotheses without a boundary search.

# %%
import numpy as np

from landaupoly import (
    check_distortion_bound,
    check_starlike_sense_preserving,
    generate_admissible,
    landau_radii,
    lemma6_value,
    make_params,
    run_verification,
)

params = make_params("t2", 3, (2, 1, 0.5))
F = generate_admissible(params, degree=6, seed=2)
for k, f in enumerate(F.components):
    print(k, np.round(f.coeffs, 4), "sum |a_n| =", round(f.coefficient_sum(), 4))

# %% [markdown]
# ## Distortion inside the radius
#
# Inside the radius `|F(z2) - F(z1)| >= G(r) |z2 - z1|`. The smallest
# slack over 2000 random pairs is printed for a few seeds.

# %%
r = 0.9 * landau_radii(params).radius
for seed in range(5):
    F = generate_admissible(params, seed=seed)
    c = check_distortion_bound(F, params, r, pairs=2000, seed=seed)
    print(seed, c.passed, f"{c.margin:.3e}")

# %% [markdown]
# ## Coefficient condition and starlikeness
#
# Where the truncated coefficient sum stays below one, the function is
# fully starlike on that disk. Here is the largest such radius per seed.

# %%
t3 = make_params("t3", 2, (1.5, 1.2))
for seed in range(5):
    F = generate_admissible(t3, seed=seed)
    lo, hi = 0.0, 0.999
    for _ in range(50):
        mid = 0.5 * (lo + hi)
        lo, hi = (mid, hi) if lemma6_value(F, mid) < 1 else (lo, mid)
    print(seed, round(lo, 6), check_starlike_sense_preserving(F, 0.99 * lo).passed)

# %% [markdown]
# ## A full report
#
# `run_verification` bundles everything; the JSON is deterministic for a
# given seed and sample counts.

# %%
rep = run_verification(make_params("t4", 2, (2, 1)), seed=1, grid_points=300)
for c in rep.checks:
    print(f"{c.name:32s} {c.passed!s:5s} {c.margin: .3e}")
