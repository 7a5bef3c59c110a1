from fractions import Fraction

import pytest

from posalg.algebra import StructureTensor
from posalg.dilation import (NOT_POSITIVE, NOT_SEMISIMPLE, NotPredicted, QuasiCharacterMatrix,
                             StrictPredicted, a_lambda, algebra_from_quasicharacters, catalog_members,
                             classify_2dim, coarse_grain_search, dilation_predicate, find_isomorphism,
                             grouplike_basis, lambda_census, quasicharacter_matrix, strict_dilation_search,
                             verify_nonstrict_witness)
from posalg.exceptions import EmbeddingError, QuasiCharacterError, StructureError
from posalg.hecke import build_hecke, hecke_two_algebra
from posalg.models import Status
from posalg.partitions import (Partition, block_embedding, induced_two_algebra, is_stable_partition,
                               strict_coaction)
from posalg.semigroups import FiniteMonoid, semigroup_bialgebra

from conftest import group_algebra

PREDICTIONS = [
    (Fraction(1), StrictPredicted(1, 1)),
    (Fraction(1, 2), StrictPredicted(1, 2)),
    (Fraction(1, 3), StrictPredicted(1, 3)),
    (Fraction(1, 7), StrictPredicted(1, 7)),
    (Fraction(2, 5), NotPredicted()),
    (Fraction(3, 4), NotPredicted()),
]

COARSE_GRAINS = [
    (Fraction(1), "cyclic:2", [[0], [1]]),
    (Fraction(1, 2), "cyclic:3", [[0], [1, 2]]),
    (Fraction(1, 3), "cyclic:4", [[0], [1, 2, 3]]),
]

A_THIRD_BLOCKS = [[0], [1, 2, 3]]

KLEIN = [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]]


def z4_coarse_data():
    A = group_algebra("cyclic:4")
    partition = Partition(4, A_THIRD_BLOCKS)
    T = block_embedding(A, partition, [Fraction(1), Fraction(1, 3)])
    return A, partition, T


@pytest.mark.unit
def test_a_lambda_range():
    with pytest.raises(ValueError):
        a_lambda(Fraction(3, 2))
    with pytest.raises(ValueError):
        a_lambda(-1)


@pytest.mark.unit
def test_a_one_is_z2(z2):
    assert a_lambda(1) == z2


@pytest.mark.unit
def test_a_zero_is_idempotent_semigroup():
    """{1, p | p² = p}"""
    S = FiniteMonoid([[0, 1], [1, 1]], unit=0)
    assert a_lambda(0) == semigroup_bialgebra(S)


@pytest.mark.unit
def test_grouplike_basis(a_half):
    assert grouplike_basis(a_half) == [{0: Fraction(1)}, {1: Fraction(1)}]


@pytest.mark.unit
@pytest.mark.parametrize("n", [2, 3, 4])
def test_classify_induced_cyclic(n):
    A = group_algebra(f"cyclic:{n + 1}")
    cert = is_stable_partition(A, Partition(n + 1, [[0], list(range(1, n + 1))])).payload
    assert classify_2dim(induced_two_algebra(A, cert)) == Fraction(1, n)


@pytest.mark.unit
def test_classify_rejects(truncated):
    assert classify_2dim(truncated) == NOT_SEMISIMPLE
    assert classify_2dim(hecke_two_algebra(build_hecke(2, Fraction(1, 2)), basis="tau")) == NOT_POSITIVE
    with pytest.raises(ValueError):
        classify_2dim(group_algebra("cyclic:3"))


@pytest.mark.unit
@pytest.mark.parametrize("lam, expected", PREDICTIONS)
def test_dilation_predicate(lam, expected):
    assert dilation_predicate(lam) == expected


@pytest.mark.unit
def test_dilation_predicate_range():
    with pytest.raises(ValueError):
        dilation_predicate(0)


@pytest.mark.unit
@pytest.mark.parametrize("lam", [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1)])
def test_quasicharacter_matrix_of_a_lambda(lam):
    Q = quasicharacter_matrix(a_lambda(lam))
    assert Q.rows == [[1, 1], [1, -lam]]
    assert algebra_from_quasicharacters(Q) == a_lambda(lam)


@pytest.mark.unit
def test_quasicharacter_matrix_of_groups(z2):
    assert quasicharacter_matrix(z2).rows == [[1, 1], [1, -1]]
    with pytest.raises(StructureError):
        quasicharacter_matrix(group_algebra("symmetric:3"))


@pytest.mark.unit
def test_quasicharacter_matrix_of_induced_z4():
    A = group_algebra("cyclic:4")
    cert = is_stable_partition(A, Partition(4, A_THIRD_BLOCKS)).payload
    assert quasicharacter_matrix(induced_two_algebra(A, cert)).rows == [[1, 1], [1, Fraction(-1, 3)]]


@pytest.mark.unit
def test_quasicharacter_matrix_validation():
    with pytest.raises(QuasiCharacterError):
        QuasiCharacterMatrix([[1, 2], [1, 1]])
    with pytest.raises(QuasiCharacterError):
        QuasiCharacterMatrix([[1, 1], [1, -2]])
    with pytest.raises(QuasiCharacterError):
        QuasiCharacterMatrix([[1, 1, 1], [1, 1]])


@pytest.mark.unit
def test_invariant_key_ignores_order():
    """Character table of the Klein four-group with two rows exchanged"""
    Q = QuasiCharacterMatrix(KLEIN)
    P = QuasiCharacterMatrix([KLEIN[0], KLEIN[2], KLEIN[1], KLEIN[3]])
    assert Q != P
    assert Q.invariant_key() == P.invariant_key()


@pytest.mark.unit
def test_find_isomorphism(z3):
    assert find_isomorphism(z3, z3) == [0, 1, 2]
    moved = z3.relabeled([0, 2, 1])
    iso = find_isomorphism(moved, z3)
    assert moved.relabeled(iso) == z3
    assert find_isomorphism(group_algebra("cyclic:4"), group_algebra("abelian:2,2")) is None
    assert find_isomorphism(z3, group_algebra("cyclic:4")) is None


@pytest.mark.unit
def test_nonstrict_witness_of_z2(z2):
    T = [{0: Fraction(1)}, {1: Fraction(1)}]
    assert verify_nonstrict_witness(z2, a_lambda(1), T, z2.comult)


@pytest.mark.unit
def test_nonstrict_witness_of_a_third():
    A, partition, T = z4_coarse_data()
    assert verify_nonstrict_witness(A, a_lambda(Fraction(1, 3)), T, strict_coaction(A, partition))


@pytest.mark.unit
def test_nonstrict_witness_with_flipped_sign():
    A, partition, T = z4_coarse_data()
    rho = strict_coaction(A, partition)
    flipped = StructureTensor(4, [(i, a, k, -v if i == 1 else v) for i, a, k, v in rho.entries()])
    verdict = verify_nonstrict_witness(A, a_lambda(Fraction(1, 3)), T, flipped)
    assert verdict.status is Status.FAILS
    assert verdict.witness["clause"] == "(Δ_B⊗id)ρ = (id⊗ρ)ρ"


@pytest.mark.unit
def test_nonstrict_embedding_errors():
    A, partition, T = z4_coarse_data()
    rho = strict_coaction(A, partition)
    with pytest.raises(EmbeddingError):
        verify_nonstrict_witness(A, a_lambda(Fraction(1, 3)), [T[0], T[0]], rho)
    with pytest.raises(EmbeddingError):
        verify_nonstrict_witness(A, a_lambda(Fraction(1, 2)), T, rho)


@pytest.mark.unit
def test_catalog_members():
    names = catalog_members(4, include_semigroups=True, semigroup_max_n=2)
    assert names[:4] == ["cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4"]
    assert names[-4:] == ["sym_inverse:1", "sym_inverse:2", "matrix_units:1", "matrix_units:2"]


@pytest.mark.unit
def test_strict_search_a_half(a_half):
    witnesses = strict_dilation_search(a_half, max_order=6, include_semigroups=False)
    found = {(w.ambient, tuple(map(tuple, w.partition.to_list()))) for w in witnesses}
    assert ("cyclic:3", ((0,), (1, 2))) in found
    assert any(name == "symmetric:3" for name, _ in found)
    for witness in witnesses:
        assert witness.verify(a_half)


@pytest.mark.unit
def test_strict_search_a_third():
    witnesses = strict_dilation_search(a_lambda(Fraction(1, 3)), max_order=4, include_semigroups=False)
    assert [(w.ambient, w.partition.to_list()) for w in witnesses] == [("cyclic:4", A_THIRD_BLOCKS),
                                                                       ("abelian:2,2", A_THIRD_BLOCKS)]
    assert witnesses[0].normalization == [1, Fraction(1, 3)]


@pytest.mark.unit
def test_strict_search_two_fifths_small():
    assert strict_dilation_search(a_lambda(Fraction(2, 5)), max_order=8, include_semigroups=False) == []


@pytest.mark.slow
def test_strict_search_two_fifths():
    assert strict_dilation_search(a_lambda(Fraction(2, 5)), max_order=16, include_semigroups=False) == []


@pytest.mark.unit
def test_strict_search_shares_cache(a_half):
    cache = {}
    first = strict_dilation_search(a_half, max_order=4, include_semigroups=False, cache=cache)
    assert ("cyclic:3", 2) in cache
    again = strict_dilation_search(a_half, max_order=4, include_semigroups=False, cache=cache)
    assert [w.to_dict() for w in again] == [w.to_dict() for w in first]


@pytest.mark.unit
def test_strict_search_rejects_non_positive_target():
    target = hecke_two_algebra(build_hecke(2, Fraction(1, 2)), basis="tau")
    assert strict_dilation_search(target, max_order=4) == []


@pytest.mark.unit
@pytest.mark.parametrize("lam, group, blocks", COARSE_GRAINS)
def test_coarse_grain_search(lam, group, blocks):
    witness = coarse_grain_search(lam, max_order=8)
    assert witness.group == group
    assert witness.partition.to_list() == blocks
    assert witness.characters == ["chi(0)", "chi(1)"]
    assert is_stable_partition(group_algebra(group), witness.partition)
    assert witness.certificate


@pytest.mark.unit
def test_coarse_grain_search_absent():
    assert coarse_grain_search(Fraction(2, 5), max_order=8) is None


@pytest.mark.unit
def test_coarse_grain_search_needs_two_columns():
    with pytest.raises(ValueError):
        coarse_grain_search(QuasiCharacterMatrix([[1]]))


@pytest.mark.slow
def test_census():
    result = lambda_census(max_order=8, jobs=1)
    assert Fraction(1, 3) in result.strict
    assert all(result.predictions[lam].predicted for lam in result.strict if lam > 0)
    kinds = [d["kind"] for d in result.discrepancies]
    assert "stated example contradicted" in kinds
    table = result.to_dict()["table"]
    assert [row["lambda"] for row in table][:3] == ["1", "1/2", "1/3"]
