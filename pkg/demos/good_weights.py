"""Which highest weights are good, family by family.

Run:  python3 demos/good_weights.py
"""
from collections import Counter

from branchkit import SOE, SU, is_good, star_groups, verify_telescoping
from branchkit.ansatz import good_witnesses
from branchkit.families import grid_weights

# SU(m,1): restriction is onto, so every group sum has an explicit preimage.
f = SU(3, 1)
w = f.validate_weight(((2, 0, -1), (1,)))
print(f"{f.spec}  {tuple(w)}  ->  {is_good(f, w).status}")
for key, pre in good_witnesses(f, w):
    print(f"  |c_hat| = {key}: preimage with {len(pre)} K-types")

# SO_0(2,2n): good exactly when p = n or lam_n = 0.  Both decision routes are run.
print()
for n in (2, 3):
    f = SOE(n)
    tally = Counter()
    for w in grid_weights(f, 2, range(-2, 2 * n + 3)):
        pair = is_good(f, w, route="pair").status
        member = is_good(f, w, route="member").status
        closed = "good" if (w.p == n or w.lam[-1] == 0) else "notgood"
        tally[(pair, member == pair, closed == pair)] += 1
    print(f"soe:{n}", dict(tally))

# SU(3,2): every weight fails; the invariant I pins down the group that breaks.
print()
f = SU(3, 2)
w = f.validate_weight(((0, 0, 0), (0, 0)))
for g in star_groups(f, w):
    print(f"  key {g.key}: {len(g.members)} term(s)")
v = is_good(f, w)
print(f"{f.spec}  {tuple(w)}  ->  {v.status} at key {v.key}, I = {v.certificate['I']}")

keys = Counter(is_good(f, w).key for w in grid_weights(f, 2))
print("failing key over the |entries| <= 2 grid:", dict(sorted(keys.items())))

print()
print("telescoping identity, m = 2..5:", [verify_telescoping(m) for m in range(2, 6)])
