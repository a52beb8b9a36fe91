import pytest
from hypothesis import given
from hypothesis import strategies as st

from branchkit import (SOE, SU, SOStar, VirtualChar, branch, branch_virtual, invariant_I,
                       lattice_member, member_soe, preimage_su1n)
from branchkit.errors import ResourceError, ValidationError
from branchkit.families import SULabel
from branchkit.image import MAX_GENERATORS_ENV, invariant_I_label, soe_functionals
from strategies import soe_weight, su_label, su_weight


def single(f, x, c=1):
    return VirtualChar.single(f, x, c)


# -- invariant I

def test_invariant_examples():
    f = SU(3, 2)
    assert invariant_I(single(f, ((0, 0), (0,), 0))) == 0
    assert invariant_I(single(f, ((1, 0), (0,), 0))) == 2
    assert invariant_I(branch(f, ((1, 0, 0), (0, 0)))) == 0


def test_invariant_needs_su32():
    with pytest.raises(ValidationError):
        invariant_I(single(SU(2, 2), ((0,), (0,), 0)))


@given(w=su_weight(3, 2, -4, 4))
def test_invariant_vanishes_on_restrictions(w):
    assert invariant_I(branch(SU(3, 2), w)) == 0


@given(x=su_label(3, 2), y=su_label(3, 2), a=st.integers(-5, 5), b=st.integers(-5, 5))
def test_invariant_linear_and_shift_invariant(x, y, a, b):
    f = SU(3, 2)
    combo = VirtualChar(f, [(x, a), (y, b)])
    assert invariant_I(combo) == a * invariant_I_label(x) + b * invariant_I_label(y)
    for k in range(-3, 4):
        moved = SULabel(tuple(e + k for e in x.mu1), tuple(e + k for e in x.mu2), x.p + 2 * k)
        assert invariant_I_label(moved) == invariant_I_label(x)


# -- SO_0(2, 2n)

def test_member_soe_mu_last_zero():
    f = SOE(4)
    res = member_soe(single(f, (0, (1, 0, 0))))
    assert res.is_member
    assert branch_virtual(res.witness) == single(f, (0, (1, 0, 0)))


@pytest.mark.parametrize("q,s", [(0, 1), (3, 2), (-1, 4)])
def test_member_soe_balanced_pair(q, s):
    f = SOE(3)
    target = VirtualChar(f, [((q + s, (1, 1)), 1), ((q - s, (1, -1)), 1)])
    res = member_soe(target)
    assert res.is_member
    assert branch_virtual(res.witness) == target


@pytest.mark.parametrize("q", [0, 1, -3])
def test_member_soe_single_nonmember(q):
    res = member_soe(single(SOE(3), (q, (1, 1))))
    assert res.status == "nonmember"
    assert res.certificate == {"mu": [1, 1], "parity": q % 2, "value": 1}
    assert res.to_json()["certificate"]["value"] == 1


@pytest.mark.parametrize("n", [2, 3])
@given(data=st.data())
def test_member_soe_on_restrictions(n, data):
    f = SOE(n)
    w = data.draw(soe_weight(n))
    res = member_soe(branch(f, w))
    assert res.is_member
    assert not any(soe_functionals(branch(f, w)).values())


# -- SU(m,1) and SU(1,n)

def test_preimage_trivial():
    f = SU(3, 1)
    got = preimage_su1n(single(f, f.trivial_label()))
    assert got == VirtualChar.single(f, f.trivial_weight(), side="k")


def test_preimage_base_case():
    f = SU(2, 1)
    assert preimage_su1n(single(f, ((1,), (), 1))) == VirtualChar.single(f, ((1, 1), (0,)), side="k")


def test_preimage_one_step():
    f = SU(3, 1)
    want = VirtualChar(f, [(((1, 0, 0), (0,)), 1), (((-1, -1, -1), (0,)), -1)], "k")
    assert preimage_su1n(single(f, ((1, 0), (), 0))) == want


@pytest.mark.parametrize("m,n", [(2, 1), (3, 1), (1, 2), (1, 3)])
@given(data=st.data())
def test_preimage_round_trip(m, n, data):
    f = SU(m, n)
    x = data.draw(su_label(m, n))
    target = VirtualChar(f, [(x, data.draw(st.integers(-3, 3)))])
    assert branch_virtual(preimage_su1n(target)) == target


def test_preimage_rejects_other_families():
    with pytest.raises(ValidationError):
        preimage_su1n(single(SU(2, 2), ((0,), (0,), 0)))


# -- bounded lattice search

@pytest.mark.parametrize("f,w", [(SU(2, 2), ((1, 0), (0, -1))), (SU(3, 2), ((1, 0, 0), (0, 0))),
                                 (SOStar(4), ((1, 1, 0, 0),))], ids=str)
def test_lattice_recovers_restrictions(f, w):
    res = lattice_member(branch(f, w), 1)
    assert res.is_member
    assert branch_virtual(res.witness) == branch(f, w)
    if f.kind == "su":
        # equal rank: restriction is injective, so the witness is forced
        assert res.witness == VirtualChar.single(f, w, side="k")


def test_lattice_surjective_case():
    f = SU(2, 1)
    res = lattice_member(single(f, ((2,), (), -1)), 3)
    assert res.is_member


def test_lattice_never_fabricates():
    res = lattice_member(single(SOE(3), (0, (1, 1))), 3)
    assert res.status == "unknown" and res.radius == 3


def test_lattice_resource_cap(monkeypatch):
    monkeypatch.setenv(MAX_GENERATORS_ENV, "10")
    with pytest.raises(ResourceError):
        lattice_member(single(SU(2, 2), ((5,), (0,), 0)), 2)


def test_membership_json():
    f = SU(2, 1)
    d = lattice_member(branch(f, ((1, 0), (0,))), 0).to_json()
    assert d["status"] == "member"
    assert d["witness"] == [{"weight": {"lambda1": [1, 0], "lambda2": [0]}, "coef": 1}]
