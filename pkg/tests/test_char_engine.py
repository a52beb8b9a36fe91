import pytest
from hypothesis import given
from hypothesis import strategies as st

from branchkit import SOE, SU, SOStar, VirtualChar, exterior_decompose, oracle_restrict
from branchkit import tensor_decompose as km_tensor
from branchkit.characters import (A1, FormalCharacter, Torus, TypeA, TypeD, decompose_character,
                                  exterior_characters, full_weights, shape, tensor_decompose,
                                  weight_multiplicities, weyl_dimension)
from branchkit.characters import exterior_decompose as sh_exterior
from strategies import double_dominant, nonincreasing

A2, A3, D2, D3 = shape(TypeA(2)), shape(TypeA(3)), shape(TypeD(2)), shape(TypeD(3))
SL2 = shape(A1())


def test_minuscule_type_a():
    assert weight_multiplicities(A2, (1, 0)) == {(1, 0): 1}


def test_a1_adjoint():
    assert weight_multiplicities(SL2, (2,)) == {(2,): 1, (0,): 1}


def test_type_d_chiral_piece():
    full = full_weights(D2, (1, 1))
    assert sum(full.values()) == weyl_dimension(TypeD(2), (1, 1)) == 3
    assert weight_multiplicities(D2, (1, 1))[(1, 1)] == 1


def test_character_arithmetic():
    c = FormalCharacter.irreducible(A2, (1, 0))
    assert (c + c).dominant_part() == {(1, 0): 2}
    assert decompose_character(c * c) == {(2, 0): 1, (1, 1): 1}


def test_product_type_d_vector():
    c = FormalCharacter.irreducible(D2, (1, 0))
    dec = decompose_character(c * c)
    assert dec == {(2, 0): 1, (1, 1): 1, (1, -1): 1, (0, 0): 1}
    assert [D2.dimension(w) for w in sorted(dec, reverse=True)] == [9, 3, 3, 1]


def test_tensor_examples():
    assert tensor_decompose(A2, (1, 0), (0, 0)) == {(1, 0): 1}
    assert tensor_decompose(A2, (1, 0), (1, 0)) == {(2, 0): 1, (1, 1): 1}
    assert tensor_decompose(SL2, (1,), (1,)) == {(2,): 1, (0,): 1}


def test_exterior_examples():
    assert sh_exterior(A3, (2, 1, 0), 1) == {(2, 1, 0): 1}
    assert sh_exterior(A3, (1, 0, 0), 2) == {(1, 1, 0): 1}


def test_exterior_of_km_label_uses_conjugate_partition():
    f = SU(3, 2)
    got = exterior_decompose(f, ((1, 0), (-1,), 0), 2)
    assert got == VirtualChar.single(f, ((1, 1), (-2,), 0))
    assert got.dimension() == 1


def test_oracle_restrict_trivial():
    for f in (SU(2, 1), SOE(2), SOStar(3)):
        assert oracle_restrict(f, f.trivial_weight()) == VirtualChar.single(f, f.trivial_label())


def test_oracle_restrict_su21_vector():
    f = SU(2, 1)
    want = VirtualChar(f, [(((1,), (), 0), 1), (((0,), (), 1), 1)])
    assert oracle_restrict(f, ((1, 0), (0,))) == want


# -- properties, per shape

SHAPES = {
    "A3": (A3, nonincreasing(3)),
    "A1": (SL2, st.integers(0, 3).map(lambda p: (p,))),
    "D2": (D2, double_dominant(2)),
    "D3": (D3, double_dominant(3)),
    "T1xA2": (shape(Torus(1), TypeA(2)),
              st.tuples(st.integers(-3, 3), nonincreasing(2)).map(lambda t: (t[0],) + t[1])),
}


@pytest.mark.parametrize("name", list(SHAPES))
@given(data=st.data())
def test_decompose_irreducible_is_itself(name, data):
    sh, strat = SHAPES[name]
    a = data.draw(strat)
    assert decompose_character(FormalCharacter.irreducible(sh, a)) == {a: 1}


@pytest.mark.parametrize("name", list(SHAPES))
@given(data=st.data())
def test_freudenthal_total_matches_weyl_dimension(name, data):
    sh, strat = SHAPES[name]
    a = data.draw(strat)
    assert sum(full_weights(sh, a).values()) == sh.dimension(a)


@pytest.mark.parametrize("name", ["A3", "A1", "D2"])
@given(data=st.data())
def test_tensor_dimension(name, data):
    sh, strat = SHAPES[name]
    a, b = data.draw(strat), data.draw(strat)
    dec = tensor_decompose(sh, a, b)
    assert sum(m * sh.dimension(w) for w, m in dec.items()) == sh.dimension(a) * sh.dimension(b)


@pytest.mark.parametrize("name", ["A3", "A1", "D2", "D3"])
@given(data=st.data())
def test_exterior_powers_sum_to_power_of_two(name, data):
    sh, strat = SHAPES[name]
    a = data.draw(strat)
    d = sh.dimension(a)
    if d > 12:
        return
    powers = exterior_characters(sh, a)
    assert len(powers) == d + 1
    total = 0
    for j in range(d + 1):
        total += sum(m * sh.dimension(w) for w, m in sh_exterior(sh, a, j).items())
    assert total == 2 ** d


def test_km_tensor_dimension():
    f = SOStar(4)
    a, b = f.validate_label(((1, 0), 1)), f.validate_label(((1, 1), 2))
    assert km_tensor(f, a, b).dimension() == f.label_dim(a) * f.label_dim(b)


@given(lam=nonincreasing(4, -2, 2))
def test_oracle_restrict_preserves_dimension(lam):
    f = SOStar(4)
    w = f.validate_weight((lam,))
    assert oracle_restrict(f, w).dimension() == f.weight_dim(w)
