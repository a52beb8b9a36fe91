from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form

from branchkit.lattice import Echelon, hermite_rows, xgcd

matrices = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c),
                       min_size=r, max_size=r)))


def _in_lattice_sympy(rows, v):
    """v in the Z-row-span of rows, decided through sympy's HNF."""
    if not any(any(r) for r in rows):
        return not any(v)
    basis = hermite_normal_form(Matrix(rows).T)       # columns span the lattice
    try:
        sol, params = basis.gauss_jordan_solve(Matrix(v))
    except ValueError:
        return False
    assert params.shape[0] == 0
    return all(x.is_integer for x in sol)


def _echelon(rows):
    ech = Echelon()
    for k, r in enumerate(rows):
        ech.insert({i: x for i, x in enumerate(r) if x}, k)
    return ech


@given(a=st.integers(-50, 50), b=st.integers(-50, 50))
def test_xgcd(a, b):
    g, s, t = xgcd(a, b)
    assert g >= 0 and s * a + t * b == g
    if a or b:
        assert a % g == 0 and b % g == 0


@given(rows=matrices, data=st.data())
def test_echelon_membership_matches_sympy(rows, data):
    ncols = len(rows[0])
    coefs = data.draw(st.lists(st.integers(-3, 3), min_size=len(rows), max_size=len(rows)))
    inside = [sum(c * r[i] for c, r in zip(coefs, rows)) for i in range(ncols)]
    other = data.draw(st.lists(st.integers(-6, 6), min_size=ncols, max_size=ncols))
    ech = _echelon(rows)
    for v in (inside, other):
        residual, combo = ech.reduce({i: x for i, x in enumerate(v) if x})
        assert (not residual) == _in_lattice_sympy(rows, v)
        if not residual:
            rebuilt = [sum(c * rows[k][i] for k, c in combo.items()) for i in range(ncols)]
            assert rebuilt == v


@given(rows=matrices)
def test_hermite_rows_shape_and_lattice(rows):
    h = hermite_rows(rows)
    pivots = [next(i for i, x in enumerate(r) if x) for r in h]
    assert pivots == sorted(set(pivots))
    for r, p in zip(h, pivots):
        assert r[p] > 0
        assert all(0 <= above[p] < r[p] for above in h[:h.index(r)])
    assert len(h) == Matrix(rows).rank()
    for r in h:
        assert _in_lattice_sympy(rows, r)
    for r in rows:
        assert _in_lattice_sympy(h, r) if h else not any(r)
