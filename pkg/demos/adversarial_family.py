"""Why splitting by digits first can be far from optimal.

A single row is built so that every base-b digit layer looks like a
staircase ``1 2 .. b-1 0 b-1 .. 2 1``, with one extra unit in the top digit.
The whole row needs only b segments, yet each layer costs 2(b-1) on its own.
"""

from segmin import adversarial_witness, alg_base, alg_logD, gen_adversarial, lower_bound, verify

for b in (2, 3, 4):
    for k in (1, 2, 3):
        T = gen_adversarial(b, k)
        W = adversarial_witness(b, k)
        assert verify(T, W)
        split = len(alg_base(T, b))
        print(f"b={b} k={k} row={T.row(1)}")
        print(f"    lower bound {lower_bound(T)}, witness {len(W)}, digit split {split}, logd {len(alg_logD(T))}")

# The witness for b=3, k=2: nested plateaus plus the lone unit in the middle.
for seg in adversarial_witness(3, 2):
    (l, r), = seg.intervals.values()
    print(f"value {seg.value:>2} on columns {l}..{r}")
