from fractions import Fraction

import pytest

from posalg.dilation import classify_2dim
from posalg.exceptions import SizeCapError
from posalg.hecke import (Permutation, borel_double_cosets, bruhat_cell, build_gl, build_hecke, gl_order,
                          hecke_basis, hecke_two_algebra, iwahori_check, rank_mod_p)
from posalg.verify import validate_2_algebra

GL_ORDERS = [(2, 2, 6), (2, 3, 48), (3, 2, 168)]

HECKE_PARAMETERS = [(2, Fraction(2)), (2, Fraction(1, 2)), (3, Fraction(2)), (3, Fraction(3, 2)), (4, Fraction(3))]


def tau(H, *simple):
    """τ_{σ_i1 ... σ_ik} as a basis index"""
    g = Permutation.identity(H.n)
    for i in reversed(simple):
        g = g.left_multiply_simple(i)
    return H.index[g]


@pytest.mark.unit
def test_permutation_basics():
    g = Permutation([2, 0, 1])
    assert g.length == 2
    assert (g * g.inverse()) == Permutation.identity(3)
    assert Permutation.simple(3, 0).one_line == (1, 0, 2)
    assert Permutation.simple(3, 1).left_descents() == [1]
    assert g.label == "T312"


@pytest.mark.unit
def test_hecke_basis_order():
    basis = hecke_basis(3)
    assert len(basis) == 6
    assert [g.length for g in basis] == [0, 1, 1, 2, 2, 3]


@pytest.mark.unit
@pytest.mark.parametrize("n, q", HECKE_PARAMETERS)
def test_quadratic_relation(n, q):
    """τ_i² = (q − 1)τ_i + q·1"""
    H = build_hecke(n, q)
    for i in range(n - 1):
        s = tau(H, i)
        assert H.mult.pair(s, s) == {0: q, s: q - 1}


@pytest.mark.unit
@pytest.mark.parametrize("n, q", HECKE_PARAMETERS[:4])
def test_hecke_is_associative(n, q):
    assert validate_2_algebra(hecke_two_algebra(build_hecke(n, q), basis="tau"))


@pytest.mark.unit
def test_braid_relation():
    """τ_1 τ_2 τ_1 = τ_2 τ_1 τ_2 = τ_{w0}"""
    H = build_hecke(3, Fraction(2))
    s, t = tau(H, 0), tau(H, 1)
    st = H.mult.pair(s, t)
    ts = H.mult.pair(t, s)
    assert len(st) == 1 and len(ts) == 1
    (st_index, _), = st.items()
    (ts_index, _), = ts.items()
    assert H.mult.pair(st_index, s) == H.mult.pair(ts_index, t)
    assert H.mult.pair(st_index, s) == {5: Fraction(1)}


@pytest.mark.unit
def test_hecke_rank_cap():
    with pytest.raises(SizeCapError):
        build_hecke(6, 2)
    with pytest.raises(ValueError):
        build_hecke(2, 0)


@pytest.mark.unit
@pytest.mark.parametrize("q", [Fraction(2), Fraction(3), Fraction(5, 2)])
def test_stochastic_h2_is_a_lambda(q):
    """τ̄² = ((q − 1)/q)τ̄ + (1/q)·1"""
    A = hecke_two_algebra(build_hecke(2, q))
    assert A.mult.pair(1, 1) == {0: 1 / q, 1: (q - 1) / q}
    assert classify_2dim(A) == 1 / q


@pytest.mark.unit
def test_stochastic_rows_are_stochastic():
    A = hecke_two_algebra(build_hecke(3, Fraction(3)))
    for g in range(A.dim):
        for h in range(A.dim):
            assert sum(A.mult.pair(g, h).values()) == 1


@pytest.mark.unit
@pytest.mark.parametrize("n, p, order", GL_ORDERS)
def test_gl_order(n, p, order):
    assert gl_order(n, p) == order


@pytest.mark.unit
@pytest.mark.parametrize("n, p, order", GL_ORDERS[:2])
def test_build_gl(n, p, order):
    G = build_gl(n, p)
    assert G.order == order
    assert G.matrices[0].tolist() == [[1, 0], [0, 1]]
    assert G.monoid.is_group()


@pytest.mark.unit
def test_build_gl_rejects_composite():
    with pytest.raises(ValueError):
        build_gl(2, 4)


@pytest.mark.unit
def test_rank_mod_p():
    assert rank_mod_p([[1, 1], [1, 1]], 2) == 1
    assert rank_mod_p([[1, 2], [2, 1]], 3) == 1
    assert rank_mod_p([[1, 2], [2, 1]], 5) == 2


@pytest.mark.unit
def test_borel_double_cosets_gl22():
    G = build_gl(2, 2)
    partition = borel_double_cosets(G)
    assert sorted(len(b) for b in partition.blocks) == [2, 4]


@pytest.mark.unit
def test_bruhat_cells():
    assert bruhat_cell([[1, 0], [0, 1]], 2) == Permutation.identity(2)
    assert bruhat_cell([[0, 1], [1, 0]], 2) == Permutation([1, 0])
    assert bruhat_cell([[1, 1], [1, 0]], 3) == Permutation([1, 0])


@pytest.mark.unit
@pytest.mark.parametrize("p", [2, 3])
def test_iwahori_rank_two(p):
    verdict = iwahori_check(2, p)
    assert verdict
    assert verdict.payload["identities"] == 8
    assert classify_2dim(verdict.payload["induced"]) == Fraction(1, p)


@pytest.mark.slow
def test_iwahori_gl32():
    verdict = iwahori_check(3, 2)
    assert verdict
    assert verdict.payload["identities"] == 216
    # |BwB| = |B|·2^l(w) with |B| = 8
    assert sorted(verdict.payload["block_sizes"].values()) == [8, 16, 16, 32, 32, 64]


@pytest.mark.slow
def test_hecke_rank_four_is_associative():
    assert validate_2_algebra(hecke_two_algebra(build_hecke(4, Fraction(3)), basis="tau"))
