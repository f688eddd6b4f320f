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
# # Classifying the trimmings of one ideal
#
# Trimming a generator g means replacing it by m*g.  The Tor algebra class of
# the trimmed ideal is decided by the linear parts of T: the residues
# cbar(i,j,l), collected in the 3t x 5 matrix Qbar, its rank, and the number
# p(T,t) of pivots past column t.

# %%
from gortrim.linalg import rref
from gortrim.trimclass import all_trims, build_cbar, build_qbar, classify
from gortrim.example import example_matrix

T = example_matrix()
q = build_qbar(build_cbar(T), 3)
for row in q.matrix.rows:
    print(row)
print("pivot columns:", rref(q.matrix)[1])

# %% [markdown]
# Trimming pf_1, pf_2, pf_3: the G-trimming condition fails, p = 2 and the
# class is H(1,1).

# %%
rep = classify(T, (1, 2, 3))
print(rep.g_condition, rep.p, rep.rank)
print(rep.summary())

# %% [markdown]
# Any other trim set is handled by conjugating T with a permutation that
# moves the chosen generators to the front.  The report records that
# permutation.

# %%
for S in [(1, 2, 4), (3, 4, 5), (1, 2), (3, 4), (3, 5), (1,), (5,)]:
    r = classify(T, S)
    print(f"{str(S):>10}  perm={r.permutation}  {r.summary()}")

# %% [markdown]
# The full report over all 31 nonempty trim sets.  For t = 4, 5 the format
# column comes from extending the same rank pattern and is flagged.

# %%
for S in all_trims():
    r = classify(T, S)
    flag = " *" if r.format_extended else ""
    print(f"{str(S):>16}  {r.summary()}{flag}")
