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
# # Searching for matrices that realize each class
#
# Random 5x5 skew matrices over F2 with entries of degree at most 2.  Every
# trim set of size 1-3 is classified and a census is kept.

# %%
import time

from gortrim.search import SearchConfig, run_search

cfg = SearchConfig(field="F2", degree=2, trials=300, seed=7, inject_example=False)
start = time.perf_counter()
res = run_search(cfg)
print(f"{time.perf_counter() - start:.1f}s, skipped {res.skipped}")
for key in sorted(res.census):
    print(f"{key:>14}  {res.census[key]}")

# %% [markdown]
# G(?) marks trims where the G-trimming condition holds; the parameter of
# that class is not determined by these invariants.  The witnesses are the
# first trial realizing each class.

# %%
for key, (trial, trim, T) in sorted(res.witnesses.items()):
    print(key, "trial", trial, "trim", trim)

# %% [markdown]
# The same search over F5 with linear entries behaves similarly.

# %%
res5 = run_search(SearchConfig(field="F5", degree=1, trials=100, seed=7))
print(sorted(res5.census.items()))
