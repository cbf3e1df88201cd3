"""Smooth fields: segment first, split digits later.

Sums of Gaussian bumps change slowly between neighbouring cells, so the
largest neighbour jump D stays tiny while the peak h is in the twenties.
Pipelines whose cost grows with log D then beat the digit-first ones.
"""

import numpy as np

from segmin import alg_base, alg_logD, lower_bound
from segmin.generators import gaussian_dataset

rows = []
for seed, T in gaussian_dataset(10, 50, 50, seed=0):
    lb = lower_bound(T)
    sizes = {name: len(alg_base(T, b)) for name, b in (("b2", 2), ("b3", 3), ("b4", 4))}
    sizes["logd"] = len(alg_logD(T))
    rows.append((seed, T.h, T.D, lb, sizes))

print(f"{'seed':>4} {'h':>3} {'D':>2} {'lb':>4} " + " ".join(f"{a:>5}" for a in ("b2", "b3", "b4", "logd")))
for seed, h, D, lb, sizes in rows:
    print(f"{seed:>4} {h:>3} {D:>2} {lb:>4} " + " ".join(f"{sizes[a]:>5}" for a in ("b2", "b3", "b4", "logd")))

ratio = np.mean([s["logd"] / lb for *_, lb, s in rows])
print(f"\nlogd is within {ratio:.3f}x of the lower bound on average")
