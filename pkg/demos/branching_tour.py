"""Closed-form branching next to the brute-force weight oracle.

Run:  python3 demos/branching_tour.py
"""
from branchkit import SOE, SU, SOStar, branch, branch_sostar_single, oracle_restrict
from branchkit.families import label_to_json


def show(family, w):
    res = branch(family, w)
    same = res == oracle_restrict(family, w)
    print(f"{family.spec:10} {str(tuple(w)):28} dim {res.dimension():4}  oracle agrees: {same}")
    for x, c in res.items():
        print(f"{'':12}{c:+d}  {label_to_json(family, x)}")


# U(m) x U(n) down to U(m-1) x U(n-1) x U(1): one term per pair of interlacing rows
show(SU(2, 2), ((1, 0), (0, 0)))
show(SU(3, 1), ((2, 2, 2), (0,)))

# SO(2n) x SO(2) down to SO(2n-2) x SO(2): multiplicities m(k) appear along the SO(2) slot
show(SOE(2), (0, (1, 0)))
show(SOE(3), (1, (2, 1, -1)))

# U(n) down to SU(2) x U(n-2)
show(SOStar(4), ((1, 0, 0, 0),))

# The single-pattern rule (one Gelfand-Tsetlin pattern per nu) is not the whole story:
f = SOStar(3)
w = f.validate_weight(((3, 2, 1),))
print()
print("U(3) weight (3,2,1): dim", f.weight_dim(w))
print("  full restriction  :", branch(f, w).dimension())
print("  single-pattern sum:", branch_sostar_single(f, w).dimension())
