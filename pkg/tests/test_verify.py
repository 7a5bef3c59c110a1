from fractions import Fraction

import pytest

from posalg.algebra import AntilinearMap, StructureTensor, TwoAlgebra, dual
from posalg.dilation import a_lambda
from posalg.hecke import build_hecke, hecke_two_algebra
from posalg.models import Status
from posalg.semigroups import build_member, group_catalog, involutive_catalog
from posalg.verify import (NP_NOTE, check_homogeneity, check_involutive, check_positive_2_algebra,
                           check_positivity, is_bialgebra, is_cocommutative, is_commutative, is_semisimple,
                           positivity_tiers, run_all, validate_2_algebra)

from conftest import group_algebra

CATALOG = [spec.name for spec in group_catalog(16)]

POSITIVE_LAMBDAS = [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1)]

MEMBERS = involutive_catalog()

SMALL_MEMBERS = [name for name in MEMBERS if build_member(name).size <= 8]

LARGE_MEMBERS = [name for name in MEMBERS if build_member(name).size > 8]

HECKE_FORMS = [
    (2, 2, "tau"),
    (2, Fraction(1, 2), "tau"),
    (2, 2, "stochastic"),
    (2, Fraction(1, 2), "stochastic"),
    (2, 1, "stochastic"),
    (3, 2, "tau"),
    (3, 2, "stochastic"),
]


def hecke(n, q, basis="tau"):
    return hecke_two_algebra(build_hecke(n, Fraction(q)), basis=basis)


def with_counit(A, counit):
    return TwoAlgebra(A.mult, A.unit, A.comult, counit, A.invol, A.coinvol, labels=A.labels)


def assert_tiers_agree(A):
    """Exact tiers never contradict each other on a side both decide"""
    tiers = positivity_tiers(A)
    assert tiers
    for side in (0, 1):
        decided = {pair[side].status for pair in tiers.values()} - {Status.INCONCLUSIVE}
        assert len(decided) <= 1


@pytest.mark.unit
def test_validate_group_and_a_half(z2, a_half):
    assert validate_2_algebra(z2)
    assert validate_2_algebra(a_half)


@pytest.mark.unit
def test_validate_perturbed_tensor_reports_unit_law(z2):
    entries = [(i, j, k, 2 if (i, j, k) == (0, 1, 1) else v) for i, j, k, v in z2.mult.entries()]
    broken = TwoAlgebra(StructureTensor(2, entries), z2.unit, z2.comult, z2.counit, z2.invol, z2.coinvol)
    verdict = validate_2_algebra(broken)
    assert verdict.status is Status.FAILS
    assert verdict.witness["law"] == "unit"
    assert verdict.witness["index"] == 1


@pytest.mark.unit
def test_validate_reports_associativity():
    # a·b = a and every other product of a, b vanishes: (ab)b = a but a(bb) = 0
    unital = [(0, i, i, 1) for i in range(3)] + [(i, 0, i, 1) for i in (1, 2)]
    mult = StructureTensor(3, unital + [(1, 2, 1, 1)])
    A = TwoAlgebra(mult, [1, 0, 0], StructureTensor.diagonal(3), [1, 1, 1],
                   AntilinearMap.identity(3), AntilinearMap.identity(3))
    verdict = validate_2_algebra(A)
    assert verdict.status is Status.FAILS
    assert verdict.witness["law"] == "associativity"
    assert verdict.witness["indices"] == [1, 2, 2]


@pytest.mark.unit
def test_involutive_s3(s3):
    assert check_involutive(s3)


@pytest.mark.unit
def test_involutive_s3_without_inverse(s3):
    """Plain coefficient conjugation is not an antiautomorphism of a nonabelian group"""
    A = TwoAlgebra(s3.mult, s3.unit, s3.comult, s3.counit, AntilinearMap.identity(6), s3.coinvol,
                   labels=s3.labels)
    verdict = check_involutive(A)
    assert verdict.status is Status.FAILS
    assert verdict.witness["clause"] == "δ(♯⊗♯) = ♯δJ"


@pytest.mark.unit
@pytest.mark.parametrize("name", CATALOG)
def test_involutive_catalog(name):
    assert check_involutive(group_algebra(name))


@pytest.mark.unit
def test_bialgebra_examples(z4):
    assert is_bialgebra(z4)
    verdict = is_bialgebra(hecke(2, 2))
    assert verdict.status is Status.FAILS
    assert verdict.witness["clause"] == "Δ is multiplicative"


@pytest.mark.unit
def test_bialgebra_weakened_semigroup():
    verdict = is_bialgebra(group_algebra("matrix_units:2"))
    assert verdict
    assert "weakened" in verdict.notes


@pytest.mark.unit
def test_semisimple(s3, truncated):
    assert is_semisimple(s3)
    assert is_semisimple(group_algebra("sym_inverse:2"))
    verdict = is_semisimple(truncated)
    assert verdict.status is Status.FAILS
    assert verdict.witness["kernel_vector"] == {"x": Fraction(1)}


@pytest.mark.unit
def test_semisimple_coalgebra_side(truncated):
    assert is_semisimple(truncated, "coalgebra")
    with pytest.raises(ValueError):
        is_semisimple(truncated, "both")


@pytest.mark.unit
def test_positivity_hecke_tau_decides_mult_only():
    """Diagonal Δ makes K^♭ the orthant; K^♯ of a noncommutative τ basis stays open"""
    mult, comult = check_positivity(hecke(3, 2))
    assert mult
    assert "tier 1" in mult.notes
    assert comult.status is Status.INCONCLUSIVE
    assert comult.notes == NP_NOTE


@pytest.mark.unit
def test_positivity_tau_basis_comult_fails():
    """Nonnegative constants do not make Δ positive: τ = 2e₁ − e₂ in H₂(2)"""
    mult, comult = check_positivity(hecke(2, 2))
    assert mult
    assert comult.status is Status.FAILS
    assert comult.witness["tier"] == 2


@pytest.mark.unit
def test_positivity_hecke_half_fails():
    """τ² = (−1/2)τ + (1/2)·1 in H₂(1/2)"""
    mult, comult = check_positivity(hecke(2, Fraction(1, 2)))
    assert mult.status is Status.FAILS
    assert mult.witness["negative_coefficient"] == Fraction(-1, 2)
    assert comult


@pytest.mark.unit
def test_positivity_tier2_a_third():
    mult, comult = check_positivity(a_lambda(Fraction(1, 3)))
    assert mult and comult
    assert "tier 2" in mult.notes


@pytest.mark.unit
def test_positivity_orthant_negative_constant():
    mult, comult = check_positivity(hecke(3, Fraction(1, 2)))
    assert mult.status is Status.FAILS
    assert mult.witness["tier"] == 1
    assert mult.witness["negative_coefficient"] < 0
    assert comult.status is Status.INCONCLUSIVE


@pytest.mark.unit
def test_positivity_inconclusive(s3):
    """S₃ multiplication with the convolution coproduct of its dual: no tier applies"""
    D = dual(s3)
    A = TwoAlgebra(s3.mult, s3.unit, D.comult, D.counit, s3.invol, D.coinvol)
    mult, comult = check_positivity(A)
    assert mult.status is Status.INCONCLUSIVE
    assert comult.status is Status.INCONCLUSIVE
    assert mult.notes == NP_NOTE


@pytest.mark.unit
def test_homogeneity(z4, a_half):
    assert check_homogeneity(z4)
    assert check_homogeneity(hecke(3, 2, basis="stochastic"))
    verdict = check_homogeneity(with_counit(a_half, [1, Fraction(-1, 2)]))
    assert verdict.status is Status.FAILS
    assert verdict.witness["clause"] == "(ε⊗id)Δ = id"


@pytest.mark.unit
def test_homogeneity_weakened_skips_unit_clause():
    verdict = check_homogeneity(group_algebra("matrix_units:2"))
    assert verdict
    assert "skipped" in verdict.notes


@pytest.mark.unit
@pytest.mark.parametrize("lam", POSITIVE_LAMBDAS)
def test_positive_a_lambda(lam):
    assert check_positive_2_algebra(a_lambda(lam))


@pytest.mark.unit
@pytest.mark.parametrize("name", SMALL_MEMBERS)
def test_positivity_involutive_catalog(name):
    mult, comult = check_positivity(group_algebra(name))
    assert mult.status is Status.HOLDS
    assert comult.status is Status.HOLDS


@pytest.mark.slow
@pytest.mark.parametrize("name", LARGE_MEMBERS)
def test_positivity_involutive_catalog_large(name):
    mult, comult = check_positivity(group_algebra(name))
    assert mult.status is Status.HOLDS
    assert comult.status is Status.HOLDS


@pytest.mark.unit
@pytest.mark.parametrize("name", SMALL_MEMBERS)
def test_positive_catalog_bialgebras(name):
    assert check_positive_2_algebra(group_algebra(name))


@pytest.mark.unit
def test_positive_abelian_group_holds(z4):
    assert check_positive_2_algebra(z4)


@pytest.mark.unit
def test_positive_hecke_half_fails():
    verdict = check_positive_2_algebra(hecke(2, Fraction(1, 2)))
    assert verdict.status is Status.FAILS
    assert verdict.witness["check"] == "check_positivity[mult]"


@pytest.mark.unit
def test_run_all_stops_after_invalid(truncated):
    mult = StructureTensor(2, [(0, 0, 0, 1), (1, 1, 1, 1)])
    A = TwoAlgebra(mult, [1, 0], StructureTensor.diagonal(2), [1, 1],
                   AntilinearMap.identity(2), AntilinearMap.identity(2))
    assert [v.check for v in run_all(A)] == ["validate_2_algebra"]
    assert len(run_all(truncated)) == 9


@pytest.mark.unit
@pytest.mark.parametrize("lam", POSITIVE_LAMBDAS + [Fraction(1, 3)])
def test_positivity_tiers_agree_a_lambda(lam):
    assert_tiers_agree(a_lambda(lam))


@pytest.mark.unit
@pytest.mark.parametrize("n, q, basis", HECKE_FORMS)
def test_positivity_tiers_agree_hecke(n, q, basis):
    assert_tiers_agree(hecke(n, q, basis=basis))


@pytest.mark.unit
@pytest.mark.parametrize("name", ["cyclic:2", "abelian:2,2", "sym_inverse:1"])
def test_positivity_tiers_agree_split_bialgebras(name):
    tiers = positivity_tiers(group_algebra(name))
    assert set(tiers) == {1, 2}
    assert_tiers_agree(group_algebra(name))


@pytest.mark.unit
def test_commutativity_predicates(s3):
    assert is_cocommutative(s3) and not is_commutative(s3)
    assert is_commutative(dual(s3)) and not is_cocommutative(dual(s3))
