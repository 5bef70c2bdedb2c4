"""Root systems, coroots and the Dynkin components that fibrations are built from."""
# %%
from flaglct.roots import Weight, build_root_system, coroot, dynkin_component, pairing

# %% Every root system is built from its Cartan matrix; roots are integer vectors
# in simple-root coordinates, sorted by height.
g2 = build_root_system("G2")
print(g2.cartan_matrix)
for r in g2.positive_roots:
    print(r, "height", sum(r))

# %% Coroots pair with roots through the Cartan matrix.  In G2 node 1 is short,
# so the long simple root pairs to -3 with the short simple coroot.
print(pairing((0, 1), coroot(g2, (1, 0))))

# %% Fundamental weights live in their own basis; the inverse Cartan matrix moves
# them into (rational) root coordinates.
e8 = build_root_system("E8")
print(Weight.fundamental(e8, 8).root_coords())

# %% Sub-diagrams are classified and relabelled in their own Bourbaki order.
print(dynkin_component(build_root_system("F4"), {2, 3, 4}, 3))
print(dynkin_component(build_root_system("E8"), {2, 3, 4, 5, 6, 7, 8}, 2))
