import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from branchkit import (SOE, SU, SOStar, VirtualChar, WeylElem, explore_sostar, is_good,
                       star_groups, verify_telescoping, weyl_terms)
from branchkit.ansatz import (TWIST_32, good_witnesses, report_line, soe_pair_criterion,
                              star_product, su32_group_invariants)
from branchkit.branching import branch_virtual
from branchkit.checks import check_su32_rows, random_strict_su32
from branchkit.families import SUWeight, grid_weights
from branchkit.image import invariant_I_label
from branchkit.weyl import _su_term
from strategies import family_and_weight, soe_weight, su_weight


def test_soe_groups_at_zero():
    f = SOE(2)
    groups = star_groups(f, (0, (0, 0)))
    assert [g.key for g in groups] == [3, 2, 1]
    pair = groups[1]
    assert set(pair.members) == {WeylElem(1, 2), WeylElem(-1, 2)}
    assert pair.sum == VirtualChar(f, [((-1, (1,)), -1), ((-1, (-1,)), -1)])


def test_su32_groups_at_zero():
    groups = {g.key: set(g.members) for g in star_groups(SU(3, 2), ((0, 0, 0), (0, 0)))}
    assert groups == {4: {WeylElem(1, 2)}, 3: {WeylElem(1, 1), WeylElem(2, 2)},
                      2: {WeylElem(2, 1), WeylElem(3, 2)}, 1: {WeylElem(3, 1)}}


def test_sostar10_groups_at_zero():
    groups = star_groups(SOStar(5), ((0,) * 5,))
    assert [g.key for g in groups] == [7, 6, 5, 4, 3, 2, 1]
    assert [len(g.members) for g in groups] == [1, 1, 2, 2, 2, 1, 1]


@given(fw=family_and_weight(small=False))
def test_groups_partition_the_weyl_sum(fw):
    f, w = fw
    groups = star_groups(f, w)
    members = [e for g in groups for e in g.members]
    assert len(members) == len(set(members)) == len(weyl_terms(f, w))
    keys = [g.key for g in groups]
    assert keys == sorted(set(keys), reverse=True)
    total = VirtualChar(f)
    for g in groups:
        total = total + g.sum
    assert total == VirtualChar(f, [(t.label, t.sign) for t in weyl_terms(f, w)])


# -- verdicts

def test_soe_good_at_p_equal_n():
    v = is_good(SOE(2), (2, (1, 1)))
    assert v.status == "good"
    assert v.to_json()["verdict"] == "good"


def test_soe_not_good():
    v = is_good(SOE(2), (0, (1, 1)))
    assert v.status == "notgood" and v.certificate


def test_su32_zero_weight_certificate():
    v = is_good(SU(3, 2), ((0, 0, 0), (0, 0)))
    assert v.status == "notgood" and v.key == 1
    assert v.certificate == {"key": 1, "I": 6}


@given(w=su_weight(1, 2))
def test_su12_always_good(w):
    assert is_good(SU(1, 2), w).is_good


@given(w=su_weight(3, 1, -2, 2))
def test_su_m1_good_with_witnesses(w):
    f = SU(3, 1)
    assert is_good(f, w).is_good
    sums = {g.key: g.sum for g in star_groups(f, w)}
    for key, witness in good_witnesses(f, w):
        assert branch_virtual(witness) == sums[key]


@pytest.mark.parametrize("n", [2, 3])
@given(data=st.data())
def test_soe_routes_agree_with_closed_criterion(n, data):
    f = SOE(n)
    w = data.draw(soe_weight(n))
    expected = w.p == n or w.lam[-1] == 0
    assert is_good(f, w, route="pair").is_good == expected
    assert is_good(f, w, route="member").is_good == expected
    assert soe_pair_criterion(f, w)[0] == expected


@given(w=su_weight(3, 2, -4, 4))
def test_su32_never_good(w):
    v = is_good(SU(3, 2), w)
    assert v.status == "notgood"
    assert v.certificate["I"] != 0
    assert dict(su32_group_invariants(w))[v.key] == v.certificate["I"]


def test_star_product_is_unreduced_product():
    f = SOE(2)
    g = star_groups(f, (0, (1, 1)))[0]
    expected = VirtualChar(f)
    for (q, mu), c in g.sum.items():
        expected = expected + VirtualChar(f, [((q, mu), c), ((q - 2, mu), -c)])
    assert star_product(f, g) == expected


# -- the twisted SU(3,2) rows

def test_closed_rows_on_random_strict_weights():
    rng = random.Random(2024)
    for _ in range(40):
        assert check_su32_rows(random_strict_su32(rng)) is None


def _key_d_invariant(l1, l2):
    """Twisted I of rows c and d, evaluated without dominance checks."""
    f = SU(3, 2)
    total = 0
    for e in (WeylElem(3, 1), WeylElem(1, 2)):
        sign, lab, _ = _su_term(f, SUWeight(l1, l2), e)
        twisted = (tuple(a + b for a, b in zip(lab.mu1, TWIST_32.mu1)),
                   tuple(a + b for a, b in zip(lab.mu2, TWIST_32.mu2)), lab.p + TWIST_32.p)
        total += sign * invariant_I_label(twisted)
    return total


def _solutions(extra):
    r = range(-10, 11)
    for a1 in r:
        for a2 in r:
            for b1 in r:
                for b2 in r:
                    a3 = -5 - a1 + b1 + b2
                    if a2 + a3 - 2 * b2 != -5 or not extra((a1, a2, a3), (b1, b2)):
                        continue
                    yield (a1, a2, a3), (b1, b2)


def test_anchor_when_b_pairs_with_a():
    sols = list(_solutions(lambda a, b: a[0] + a[1] - 2 * b[0] == -5))
    assert sols
    for l1, l2 in sols:
        d = l2[0] - l2[1]
        assert _key_d_invariant(l1, l2) == 2 * (d + 1) ** 2


def test_anchor_when_b_is_alone():
    sols = list(_solutions(lambda a, b: a[0] - 2 * a[1] + a[2] - 2 * b[0] + 2 * b[1] == -3))
    assert sols
    for l1, l2 in sols:
        d = l2[0] - l2[1]
        assert _key_d_invariant(l1, l2) == -2 * (d + 1) * (d - 4)


# -- telescoping identity

@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_telescoping(m):
    assert verify_telescoping(m)


# -- SO*(2n) exploration

def test_explore_single_row():
    rows = list(explore_sostar(4, 0, 1))
    assert len(rows) == 1
    assert rows[0]["lambda"] == {"lambda": [0, 0, 0, 0]}
    assert [g["key"] for g in rows[0]["groups"]] == [5, 4, 3, 2, 1]
    assert rows[0]["verdict"] in ("good", "unknown")


@pytest.mark.parametrize("n", [3, 4, 5])
def test_explore_radius_zero_completes(n):
    rows = list(explore_sostar(n, 0, 0))
    assert len(rows) == 1
    assert all(g["status"] in ("member", "unknown") for g in rows[0]["groups"])


def test_explore_deterministic_across_workers():
    serial = [report_line(r) for r in explore_sostar(4, 1, 1)]
    parallel = [report_line(r) for r in explore_sostar(4, 1, 1, jobs=2)]
    assert serial == parallel
    lams = [tuple(r["lambda"]["lambda"]) for r in explore_sostar(4, 1, 1)]
    assert lams == [w.lam for w in SOStar(4).k_weights(-1, 1)]


def test_soe_grid_helper_counts():
    # lam in {(0,0), (1,1), (1,0), (1,-1)}, p in {0, 1}
    assert len(list(grid_weights(SOE(2), 1, range(0, 2)))) == 4 * 2
