"""Fibrations G/P -> G/P' and the tower that reaches a point."""
# %%
from flaglct.flag import fibration, fibration_tower, flag_variety

# %% Partial flags Fl(1,3; C^5): forgetting U_1 leaves a Gr(1,3) = P^2 fibre,
# forgetting U_3 leaves Gr(2,4).
X = flag_variety("A4", omit=[1, 3])
for a in X.omitted:
    f = fibration(X, a)
    print(f"forget node {a}: fibre {f.describe()} of dim {f.fiber_dimension}, base dim {f.base.dimension}")

# %% Complete flags of F4: one fibration per simple root; fibre dimensions add up.
tower = fibration_tower(flag_variety("F4", levi=[]))
for f in tower:
    print(f"node {f.alpha}: {f.describe():8s} fibre dim {f.fiber_dimension:2d}, base dim {f.base.dimension}")
print("total", sum(f.fiber_dimension for f in tower))
