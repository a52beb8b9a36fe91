from itertools import product

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from branchkit import (SOE, SU, SOStar, VirtualChar, branch, branch_sostar_single,
                       branch_terms_soe, branch_virtual, oracle_restrict)
from branchkit.branching import _in_soe_window, _soe_window, _sostar_nus, branch_raw, sostar_p
from branchkit.combinatorics import compositions_bounded
from branchkit.errors import NotInSupportError, ValidationError
from strategies import family_and_weight, sostar_weight


def vc(f, *terms):
    return VirtualChar(f, [(x, 1) for x in terms])


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("c", [-2, 0, 3])
def test_su_m1_scalar_weight(m, c):
    f = SU(m, 1)
    assert branch(f, ((c,) * m, (0,))) == vc(f, ((c,) * (m - 1), (), c))


def test_su22_vector():
    f = SU(2, 2)
    want = vc(f, ((1,), (0,), 0), ((0,), (0,), 1))
    got = branch(f, ((1, 0), (0, 0)))
    assert got == want == oracle_restrict(f, ((1, 0), (0, 0)))
    assert got.dimension() == 2


@pytest.mark.parametrize("p", [-3, 0, 2, 5])
def test_soe4_vector(p):
    f = SOE(2)
    want = vc(f, (p - 1, (0,)), (p + 1, (0,)), (p, (1,)), (p, (-1,)))
    got = branch(f, (p, (1, 0)))
    assert got == want == oracle_restrict(f, (p, (1, 0)))
    assert got.dimension() == 4


@pytest.mark.parametrize("n", [3, 4, 5])
def test_sostar_vector(n):
    f = SOStar(n)
    w = ((1,) + (0,) * (n - 1),)
    want = vc(f, ((0,) * (n - 2), 1), ((1,) + (0,) * (n - 3), 0))
    got = branch(f, w)
    assert got == want == oracle_restrict(f, w)
    assert got.dimension() == n


def test_su21_raw_terms_before_canonicalization():
    f = SU(2, 1)
    raw = branch_raw(f, ((1, 0), (0,)))
    assert [(tuple(x), c) for x, c in raw] == [(((1,), (), 0), 1), (((0,), (), 1), 1)]


def test_trivial_weight_restricts_to_trivial_label():
    for f in (SU(3, 2), SOE(3), SOStar(4)):
        assert branch(f, f.trivial_weight()) == vc(f, f.trivial_label())


def test_invalid_weight_rejected():
    with pytest.raises(ValidationError):
        branch(SU(2, 1), ((0, 1), (0,)))


# -- SO(2n) -> SO(2) x SO(2n-2) term data

def test_branch_terms_soe_vector():
    t = branch_terms_soe(SOE(3), (0, (1, 0, 0)), (0, 0))
    assert t.ells == (1, 0) and t.ell_n == 0 and t.mults == (1, 1)


def test_branch_terms_soe_trivial():
    t = branch_terms_soe(SOE(3), (0, (0, 0, 0)), (0, 0))
    assert t.ells == (0, 0) and t.ell_n == 0 and t.mults == (1,)


def test_branch_terms_soe_outside_window():
    with pytest.raises(NotInSupportError):
        branch_terms_soe(SOE(3), (0, (1, 0, 0)), (2, 0))


@given(ells=st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_multiplicities_match_laurent_expansion(ells):
    X = sympy.symbols("X")
    gen = sympy.Integer(1)
    for l in ells:
        gen *= (X ** (l + 1) - X ** (-l - 1)) / (X - 1 / X)
    poly = sympy.expand(sympy.cancel(gen) * X ** sum(ells))
    ell = sum(ells)
    mults = compositions_bounded(ells)
    assert [poly.coeff(X, 2 * ell - 2 * k) for k in range(ell + 1)] == mults


@given(fw=family_and_weight())
def test_soe_term_symmetry(fw):
    f, w = fw
    if f.kind != "soe":
        return
    for mu in product(*_soe_window(w.lam)):
        if not _in_soe_window(w.lam, mu):
            continue
        t = branch_terms_soe(f, w, mu)
        m = t.mults
        assert m[0] == m[-1] == 1
        assert m == m[::-1]
        prod_ = 1
        for l in t.ells:
            prod_ *= l + 1
        assert sum(m) == prod_


# -- properties

@given(fw=family_and_weight())
def test_branch_agrees_with_weight_oracle(fw):
    f, w = fw
    assert branch(f, w) == oracle_restrict(f, w)


@given(fw=family_and_weight())
def test_dimension_conserved_and_coefficients_positive(fw):
    f, w = fw
    res = branch(f, w)
    assert res.dimension() == f.weight_dim(w)
    assert all(c >= 1 for _, c in res.items())


@given(fw=family_and_weight())
def test_su_branching_multiplicity_free(fw):
    f, w = fw
    if f.kind == "su":
        assert all(c == 1 for _, c in branch(f, w).items())


@given(w=sostar_weight(4))
def test_sostar_single_pattern_rule_is_multiplicity_free_part(w):
    f = SOStar(4)
    single, full = branch_sostar_single(f, w), branch(f, w)
    assert all(c == 1 for _, c in single.items())
    assert all(full[x] >= 1 for x in single)
    assert all(sostar_p(w.lam, nu) >= 0 for nu in _sostar_nus(w.lam))


def test_sostar_single_pattern_rule_undercounts():
    f = SOStar(3)
    w = f.validate_weight(((3, 2, 1),))
    assert branch(f, w) == oracle_restrict(f, w)
    assert branch(f, w).dimension() == 8
    assert branch_sostar_single(f, w).dimension() == 7


def test_sostar_not_multiplicity_free_for_n5():
    f = SOStar(5)
    res = branch(f, ((3, 2, 1, 0, 0),))
    assert res == oracle_restrict(f, ((3, 2, 1, 0, 0),))
    assert res[f.validate_label(((2, 1, 0), 1))] == 2


def test_branch_virtual_is_linear():
    f = SU(2, 2)
    a, b = ((1, 0), (0, 0)), ((2, 0), (1, -1))
    kv = VirtualChar(f, [(a, 2), (b, -1)], "k")
    assert branch_virtual(kv) == 2 * branch(f, a) - branch(f, b)
