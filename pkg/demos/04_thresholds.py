"""Log canonical thresholds of B-stable Q-divisors and the global threshold of G/B."""
# %%
from fractions import Fraction

from flaglct.flag import anticanonical_coefficients, flag_variety
from flaglct.lct import (
    QDivisor,
    fiber_thresholds,
    global_lct,
    lct_b_stable,
    lct_lower_bound_general,
    scale,
)

# %% A divisor with all coefficients below one gives a klt pair.
X = flag_variety("A3", levi=[])
D = QDivisor({1: Fraction(1, 3), 2: Fraction(3, 4), 3: Fraction(2, 3)})
r = lct_b_stable(X, D)
print(r.value, r.exactness, "klt" if r.klt else "not klt")

# %% The same number, read through the fibres: restrict D to each fibre and use 1/k there.
print(fiber_thresholds(X, D))

# %% Without B-stability only the lower bound survives.
print(lct_lower_bound_general(X, D))

# %% Thresholds scale inversely with the divisor.
print(lct_b_stable(X, scale(D, 3)).value)

# %% -K_{G/B} = sum 2 D_alpha, so the global threshold of every complete flag variety is 1/2.
for name in ["A1", "B3", "G2", "F4", "E8"]:
    Y = flag_variety(name, levi=[])
    print(name, anticanonical_coefficients(Y), global_lct(Y).value)

# %% For Grassmannians the same argument gives 1 over the Fano index.
print(global_lct(flag_variety("A3", omit=[2])))
