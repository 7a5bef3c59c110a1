from fractions import Fraction

import pytest

from posalg.exceptions import (NotAssociativeError, NotAutomorphismError, NotInverseSemigroupError,
                               NotSubgroupError, SizeCapError)
from posalg.models import Status
from posalg.semigroups import (FiniteMonoid, GroupSpec, almost_antipode_check, as_inverse_semigroup,
                               automorphism_generators, build_group, build_member, check_automorphism,
                               check_subgroup, dual_semigroup_bialgebra, group_catalog, group_inverse,
                               invariant_factors, involutive_catalog, is_inverse, matrix_unit_semigroup,
                               recover_semigroup, semigroup_bialgebra, subgroups, symmetric_inverse_semigroup,
                               wagner_preston, wedderburn_dims)
from posalg.verify import check_involutive, is_bialgebra, is_cocommutative, is_semisimple

from conftest import group_algebra

# id, swap, const0, const1 under composition
T2_TABLE = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 2, 2, 2], [3, 3, 3, 3]]
T2_LABELS = ["id", "swap", "const0", "const1"]

SYMMETRIC_INVERSE_SIZES = [(1, 2), (2, 7), (3, 34)]

WEDDERBURN = [
    ("symmetric:3", [4, 1, 1]),
    ("cyclic:4", [1, 1, 1, 1]),
    ("matrix_units:2", [4, 1]),
    ("matrix_units:3", [9, 1]),
]

MEMBERS = involutive_catalog()

SMALL_MEMBERS = [name for name in MEMBERS if build_member(name).size <= 16]

LARGE_MEMBERS = [name for name in MEMBERS if build_member(name).size > 16]

RECOVERABLE = [name for name in MEMBERS if not name.startswith("matrix_units") and build_member(name).size <= 8]


@pytest.mark.unit
@pytest.mark.parametrize("spec, size", [("cyclic:4", 4), ("symmetric:3", 6), ("abelian:2,2", 4),
                                        ("dihedral:4", 8), ("dicyclic:2", 8), ("alternating:4", 12)])
def test_build_group_sizes(spec, size):
    G = build_group(spec)
    assert G.size == size
    assert G.unit == 0
    assert G.is_group()


@pytest.mark.unit
def test_cyclic_table():
    G = build_group("cyclic:4")
    assert G.table.tolist() == [[(a + b) % 4 for b in range(4)] for a in range(4)]


@pytest.mark.unit
def test_klein_four_group():
    G = build_group("abelian:2,2")
    assert all(G.mul(a, a) == G.unit for a in range(4))
    assert G.factors == [2, 2]


@pytest.mark.unit
def test_invariant_factors():
    assert invariant_factors([2, 3]) == [6]
    assert invariant_factors([4, 2]) == [2, 4]
    assert invariant_factors([2, 2, 3]) == [2, 6]


@pytest.mark.unit
def test_group_spec_parse():
    assert GroupSpec.parse("abelian:2,2").params == [2, 2]
    with pytest.raises(ValueError):
        GroupSpec.parse("free:2")
    with pytest.raises(ValueError):
        GroupSpec.parse("cyclic:2,2")


@pytest.mark.unit
def test_group_catalog_order():
    names = [spec.name for spec in group_catalog(8)]
    assert names[:3] == ["cyclic:1", "cyclic:2", "cyclic:3"]
    assert "symmetric:3" in names
    assert "dihedral:3" not in names
    assert "dicyclic:2" in names
    assert all("abelian" in n or "cyclic" in n for n in (s.name for s in group_catalog(8, abelian_only=True)))


@pytest.mark.unit
def test_group_size_cap(monkeypatch):
    monkeypatch.setenv("POSALG_GROUP_SIZE_CAP", "10")
    with pytest.raises(SizeCapError):
        build_group("symmetric:4")


@pytest.mark.unit
def test_non_associative_table():
    with pytest.raises(NotAssociativeError):
        FiniteMonoid([[0, 1], [0, 0]])


@pytest.mark.unit
def test_groups_are_inverse():
    G = build_group("symmetric:3")
    verdict = is_inverse(G)
    assert verdict
    assert verdict.payload == group_inverse(G)


@pytest.mark.unit
def test_matrix_units_are_inverse():
    S = matrix_unit_semigroup(2)
    assert S.inv == [0, 2, 1, 3, 4]
    assert is_inverse(S.base).payload == S.inv


@pytest.mark.unit
def test_full_transformation_monoid_is_not_inverse():
    T2 = FiniteMonoid(T2_TABLE, unit=0, labels=T2_LABELS)
    verdict = is_inverse(T2)
    assert verdict.status is Status.FAILS
    assert verdict.witness == {"element": "const0", "reason": "generalized inverse not unique",
                               "inverses": ["const0", "const1"]}
    with pytest.raises(NotInverseSemigroupError):
        as_inverse_semigroup(T2)
    with pytest.raises(NotInverseSemigroupError):
        semigroup_bialgebra(T2)


@pytest.mark.unit
@pytest.mark.parametrize("n, size", SYMMETRIC_INVERSE_SIZES)
def test_symmetric_inverse_sizes(n, size):
    S = symmetric_inverse_semigroup(n)
    assert S.size == size
    assert S.base.unit is not None
    assert S.base.zero == 0


@pytest.mark.unit
def test_matrix_unit_products():
    S = matrix_unit_semigroup(2)
    labels = S.labels
    index = {label: i for i, label in enumerate(labels)}
    assert labels[S.base.mul(index["e12"], index["e21"])] == "e11"
    assert labels[S.base.mul(index["e12"], index["e12"])] == "0"
    assert matrix_unit_semigroup(1).size == 2


@pytest.mark.unit
def test_semigroup_bialgebras():
    assert is_bialgebra(group_algebra("cyclic:2"))
    I2 = group_algebra("sym_inverse:2")
    assert I2.dim == 7
    assert is_semisimple(I2)
    weakened = group_algebra("matrix_units:2")
    assert weakened.weakened
    # e11 + e22 - 0
    assert weakened.unit == [1, 0, 0, 1, -1]


def assert_semigroup_bialgebra_structure(A):
    assert is_bialgebra(A)
    assert check_involutive(A)
    assert is_cocommutative(A)
    assert is_semisimple(A, side="algebra")
    assert is_semisimple(A, side="coalgebra")


@pytest.mark.unit
@pytest.mark.parametrize("name", SMALL_MEMBERS)
def test_catalog_bialgebra_structure(name):
    assert_semigroup_bialgebra_structure(group_algebra(name))


@pytest.mark.slow
@pytest.mark.parametrize("name", LARGE_MEMBERS)
def test_catalog_bialgebra_structure_large(name):
    assert_semigroup_bialgebra_structure(group_algebra(name))


@pytest.mark.unit
def test_dual_semigroup_bialgebra():
    """(Δf)(g, h) = f(gh) on ℤ₂"""
    D = dual_semigroup_bialgebra(build_group("cyclic:2"))
    assert D.mult.pair(0, 0) == {0: 1} and D.mult.pair(0, 1) == {}
    assert D.comult.first(1) == {(0, 1): 1, (1, 0): 1}


@pytest.mark.unit
@pytest.mark.parametrize("name, dims", WEDDERBURN)
def test_wedderburn_dims(name, dims):
    assert wedderburn_dims(group_algebra(name)) == dims


@pytest.mark.unit
def test_almost_antipode_group():
    verdict = almost_antipode_check(group_algebra("symmetric:3"))
    assert verdict
    assert "true antipode" in verdict.notes


@pytest.mark.unit
def test_almost_antipode_matrix_units():
    verdict = almost_antipode_check(group_algebra("matrix_units:2"))
    assert verdict
    assert verdict.payload["id*S"]["e12"] == {"e11": Fraction(1)}
    assert verdict.payload["S*id"]["e12"] == {"e22": Fraction(1)}


@pytest.mark.unit
def test_almost_antipode_image_is_idempotents():
    S = symmetric_inverse_semigroup(2)
    verdict = almost_antipode_check(semigroup_bialgebra(S))
    idempotents = [S.labels[e] for e in S.base.idempotents()]
    assert len(idempotents) == 4
    assert sorted(verdict.payload["image"]) == sorted(idempotents)


@pytest.mark.unit
@pytest.mark.parametrize("name", RECOVERABLE)
def test_recover_semigroup(name):
    A = group_algebra(name)
    S = recover_semigroup(A)
    assert S.size == A.dim
    assert semigroup_bialgebra(S).same_structure(A)


@pytest.mark.unit
def test_wagner_preston():
    S = symmetric_inverse_semigroup(2)
    maps = wagner_preston(S)
    assert len(set(maps)) == S.size


@pytest.mark.unit
def test_subgroups_of_s3():
    G = build_group("symmetric:3")
    assert [len(H) for H in subgroups(G)] == [1, 2, 2, 2, 3, 6]
    with pytest.raises(NotSubgroupError):
        check_subgroup(G, {0, 1, 2})


@pytest.mark.unit
def test_automorphisms_of_z4():
    G = build_group("cyclic:4")
    assert automorphism_generators(G) == [(0, 3, 2, 1)]
    assert check_automorphism(G, [0, 3, 2, 1]) == (0, 3, 2, 1)
    with pytest.raises(NotAutomorphismError):
        check_automorphism(G, [0, 2, 1, 3])
