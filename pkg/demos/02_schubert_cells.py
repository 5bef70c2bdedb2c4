"""Schubert cells of G/P: minimal coset representatives, Betti numbers and duality."""
# %%
from flaglct.flag import flag_variety, poincare_dual_pairing, schubert_cells
from flaglct.weyl import duality_involution, enumerate_bruteforce, minimal_coset_reps

# %% The Grassmannian Gr(2,4) is A3 with node 2 omitted from the Levi set.
gr24 = flag_variety("A3", omit=[2])
cells = schubert_cells(gr24)
print("dim", gr24.dimension, "betti", cells.betti)
for w, d in cells.cells:
    print(f"  {w.word_string() or 'e':12s} cell of dimension {d}")

# %% Opposite cells: w -> w0 w w0^P reverses dimension and is an involution of W^P.
for w, d in cells.cells:
    u = duality_involution(w, gr24.levi)
    print(f"  {w.word_string() or 'e':12s} <-> {u.word_string() or 'e':12s}  ({d} <-> {u.length})")

# %% The two middle-dimensional classes are self-dual and orthogonal to each other.
mid = [w for w, d in cells.cells if d == 2]
print([[poincare_dual_pairing(gr24, a, b) for b in mid] for a in mid])

# %% Brute force over the whole group gives the Poincare polynomial of W(F4).
order, poly = enumerate_bruteforce(flag_variety("F4", levi=[]).root_system)
print(order, poly)

# %% Quotients can be small even when W is huge: the 27 lines on a cubic surface.
print(len(minimal_coset_reps(flag_variety("E6", omit=[1]).root_system, {2, 3, 4, 5, 6})))
