"""Exact optima on small matrices, next to the approximations and the lower bound."""

import numpy as np

from segmin import ALGORITHMS, exact_opt, lower_bound
from segmin.generators import gen_harmonic

rng = np.random.default_rng(11)
print(f"{'shape':>6} {'h':>2} {'lb':>3} {'opt':>4} " + " ".join(f"{a:>5}" for a in ALGORITHMS))
for _ in range(8):
    T = rng.integers(0, 6, size=(int(rng.integers(3, 7)), int(rng.integers(3, 7))))
    res = exact_opt(T)
    sizes = " ".join(f"{len(alg(T)):>5}" for alg in ALGORITHMS.values())
    print(f"{T.shape[0]}x{T.shape[1]:<4} {T.max():>2} {lower_bound(T):>3} {res.size:>4} {sizes}")

# Rows 1 0 1 .., 2 0 2 .., 3 0 3 .. share columns but need different values,
# so the optimum climbs above the marker bound.
for b in (3, 4):
    T = gen_harmonic(b, 2)
    print(f"harmonic b={b}: lower bound {lower_bound(T)}, optimum {exact_opt(T).size}")
