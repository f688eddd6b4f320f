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
# # Pfaffians and the Buchsbaum-Eisenbud resolution
#
# A skew-symmetric 5x5 matrix with entries in the maximal ideal of
# F2[x,y,z] presents a grade 3 Gorenstein ideal generated by its five
# submaximal pfaffians.  Here we compute them and check that the
# resolution really is a complex.

# %%
from gortrim.example import example_matrix
from gortrim.pfaffian import generators, leibniz_defect, product_ee, resolution
from gortrim.polyring import format_poly

T = example_matrix()
print(T)

# %% [markdown]
# The generators carry the alternating sign y_i = (-1)^(i+1) pf_i(T).  Over
# F2 the sign is invisible, so these match the pfaffians themselves.

# %%
for i, y in enumerate(generators(T), start=1):
    print(f"y{i} = {format_poly(y)}")

# %%
res = resolution(T)
print("D1*D2 zero:", (res.d1 @ res.d2).is_zero())
print("D2*D3 zero:", (res.d2 @ res.d3).is_zero())

# %% [markdown]
# ## The product of two degree-one basis elements
#
# For m = 5 the coordinates of e_i e_j are sub-pfaffians of size 2: removing
# i, j and r leaves a 2x2 block whose pfaffian is a single entry of T.  The
# differential of that product must be y_i e_j - y_j e_i.

# %%
p = product_ee(T, 4, 5)
print([format_poly(c) for c in p.coefficients])
print(all(d == 0 for i in range(1, 6) for j in range(i + 1, 6) for d in leibniz_defect(T, i, j)))
