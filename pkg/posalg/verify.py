# posalg/verify.py

"""
Verifiers for the 2-algebra axioms, involutivity, the bialgebra property,
semisimplicity, positivity of both operations and homogeneity.

Every verifier is a pure function returning a ``Verdict``; mathematical
failure is reported through a witness, never raised.
"""

import logging
from fractions import Fraction

from .algebra import AntilinearMap, StructureTensor, dual
from .exceptions import SplittingError
from .linalg import EchelonBasis, iadd_coef, nullspace
from .models import Status, Verdict
from .splitting import dual_basis, split_commutative, splits_over_rationals

logger = logging.getLogger('posalg.verify')

NP_NOTE = ("no exact positivity tier applies; recognising cone preservation in general "
           "is NP-complete, so the verdict is left open")


def _tensor_map(left, right, tensor):
    """(left ⊗ right) applied to a dict (j, k) -> coefficient"""
    out = {}
    for (j, k), coef in tensor.items():
        for a, x in left.column(j).items():
            for b, y in right.column(k).items():
                key = (a, b)
                total = out.get(key, 0) + coef * x * y
                if total:
                    out[key] = total
                else:
                    out.pop(key, None)
    return out


def _flip(tensor):
    return {(k, j): v for (j, k), v in tensor.items()}


def _labelled(A, vector):
    return {A.label(i): v for i, v in sorted(vector.items())}


def _labelled_pairs(A, tensor):
    return {f"{A.label(j)}⊗{A.label(k)}": v for (j, k), v in sorted(tensor.items())}


# -- 2-algebra axioms ---------------------------------------------------------

def validate_2_algebra(A):
    """
    Check the unit law, associativity, coassociativity and the counit law

    Args:
        A (TwoAlgebra): Algebra to check

    Returns:
        Verdict: Fails carries the first violated identity with its indices
    """
    check = "validate_2_algebra"
    n = A.dim
    unit = A.unit_vector()
    for i in range(n):
        basis = {i: Fraction(1)}
        for side, value in (("left", A.multiply(unit, basis)), ("right", A.multiply(basis, unit))):
            if value != basis:
                return Verdict.fails(check, {"law": "unit", "side": side, "index": i,
                                             "element": A.label(i), "product": _labelled(A, value)})

    for i in range(n):
        for j in range(n):
            ij = A.mult.pair(i, j)
            for k in range(n):
                left = {}
                for m, c in ij.items():
                    iadd_coef(left, c, A.mult.pair(m, k))
                right = {}
                for m, c in A.mult.pair(j, k).items():
                    iadd_coef(right, c, A.mult.pair(i, m))
                if left != right:
                    return Verdict.fails(check, {"law": "associativity", "indices": [i, j, k],
                                                 "left": _labelled(A, left), "right": _labelled(A, right)})

    for i in range(n):
        delta = A.comult.first(i)
        left, right = {}, {}
        for (j, k), d in delta.items():
            for (a, b), e in A.comult.first(j).items():
                iadd_coef(left, d * e, {(a, b, k): Fraction(1)})
            for (a, b), e in A.comult.first(k).items():
                iadd_coef(right, d * e, {(j, a, b): Fraction(1)})
        if left != right:
            return Verdict.fails(check, {"law": "coassociativity", "index": i, "element": A.label(i),
                                         "left": {",".join(map(str, key)): v for key, v in sorted(left.items())},
                                         "right": {",".join(map(str, key)): v for key, v in sorted(right.items())}})

    for i in range(n):
        delta = A.comult.first(i)
        left, right = {}, {}
        for (j, k), d in delta.items():
            iadd_coef(left, d * A.counit[j], {k: Fraction(1)})
            iadd_coef(right, d * A.counit[k], {j: Fraction(1)})
        for side, value in (("(ε⊗id)Δ", left), ("(id⊗ε)Δ", right)):
            if value != {i: Fraction(1)}:
                return Verdict.fails(check, {"law": "counit", "side": side, "index": i,
                                             "element": A.label(i), "value": _labelled(A, value)})
    return Verdict.holds(check)


def is_commutative(A):
    return A.is_commutative()


def is_cocommutative(A):
    return A.is_cocommutative()


# -- involutions ---------------------------------------------------------------

def check_involutive(A):
    """
    Check that ♯ and ♭ are second-order antiautomorphisms and that they
    commute with Δ and δ respectively

    Args:
        A (TwoAlgebra): Algebra to check

    Returns:
        Verdict: Fails names the violated clause and the basis indices
    """
    check = "check_involutive"
    n = A.dim
    sharp, flat = A.invol, A.coinvol
    if not sharp.squares_to_identity():
        return Verdict.fails(check, {"clause": "♯ is second order", "matrix": sharp.matrix})
    if not flat.squares_to_identity():
        return Verdict.fails(check, {"clause": "♭ is second order", "matrix": flat.matrix})

    images = [sharp.column(i) for i in range(n)]
    flats = [flat.column(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            # δ(♯⊗♯) = ♯δJ on x_i ⊗ x_j
            left = A.multiply(images[i], images[j])
            right = sharp.apply(A.mult.pair(j, i))
            if left != right:
                return Verdict.fails(check, {"clause": "δ(♯⊗♯) = ♯δJ", "indices": [i, j],
                                             "elements": [A.label(i), A.label(j)],
                                             "left": _labelled(A, left), "right": _labelled(A, right)})
    for i in range(n):
        delta = A.comult.first(i)
        # (♭⊗♭)Δ = JΔ♭
        left = _tensor_map(flat, flat, delta)
        right = _flip(A.comultiply(flats[i]))
        if left != right:
            return Verdict.fails(check, {"clause": "(♭⊗♭)Δ = JΔ♭", "index": i, "element": A.label(i),
                                         "left": _labelled_pairs(A, left), "right": _labelled_pairs(A, right)})
        # Δ♯ = (♯⊗♯)Δ
        left = A.comultiply(images[i])
        right = _tensor_map(sharp, sharp, delta)
        if left != right:
            return Verdict.fails(check, {"clause": "Δ♯ = (♯⊗♯)Δ", "index": i, "element": A.label(i),
                                         "left": _labelled_pairs(A, left), "right": _labelled_pairs(A, right)})
    for i in range(n):
        for j in range(n):
            # δ(♭⊗♭) = ♭δ
            left = A.multiply(flats[i], flats[j])
            right = flat.apply(A.mult.pair(i, j))
            if left != right:
                return Verdict.fails(check, {"clause": "δ(♭⊗♭) = ♭δ", "indices": [i, j],
                                             "elements": [A.label(i), A.label(j)],
                                             "left": _labelled(A, left), "right": _labelled(A, right)})
    return Verdict.holds(check)


def _comult_not_multiplicative(A):
    """Witness of Δ(x_i x_j) ≠ Δ(x_i)Δ(x_j), or None"""
    for i in range(A.dim):
        for j in range(A.dim):
            left = A.comultiply(A.mult.pair(i, j))
            right = A.tensor_multiply(A.comult.first(i), A.comult.first(j))
            if left != right:
                return {"clause": "Δ is multiplicative", "indices": [i, j],
                        "elements": [A.label(i), A.label(j)],
                        "left": _labelled_pairs(A, left), "right": _labelled_pairs(A, right)}
    return None


def is_bialgebra(A):
    """
    Check that Δ and ε are algebra homomorphisms

    Args:
        A (TwoAlgebra): Algebra to check

    Returns:
        Verdict: Holds iff Δ(x_i x_j) = Δ(x_i)Δ(x_j), ε(x_i x_j) = ε(x_i)ε(x_j) and ε(1) = 1
    """
    check = "is_bialgebra"
    n = A.dim
    notes = "weakened: built from a semigroup without unit" if A.weakened else ""
    witness = _comult_not_multiplicative(A)
    if witness is not None:
        return Verdict.fails(check, witness, notes=notes)
    for i in range(n):
        for j in range(n):
            value = A.counit_of(A.mult.pair(i, j))
            if value != A.counit[i] * A.counit[j]:
                return Verdict.fails(check, {"clause": "ε is multiplicative", "indices": [i, j],
                                             "elements": [A.label(i), A.label(j)], "value": value,
                                             "expected": A.counit[i] * A.counit[j]},
                                     notes="the counit does not define a homomorphism into the field")
    value = A.counit_of(A.unit_vector())
    if value != 1:
        return Verdict.fails(check, {"clause": "ε(1) = 1", "value": value}, notes=notes)
    return Verdict.holds(check, notes=notes)


# -- semisimplicity ------------------------------------------------------------

def _trace_form(A):
    traces = [A.trace_of_left(k) for k in range(A.dim)]
    rows = []
    for i in range(A.dim):
        row = {}
        for j in range(A.dim):
            value = sum((c * traces[k] for k, c in A.mult.pair(i, j).items()), Fraction(0))
            if value:
                row[j] = value
        rows.append(row)
    return rows


def is_semisimple(A, side="algebra"):
    """
    Dickson criterion: the trace form tr(L_x L_y) is nondegenerate

    For an associative algebra L_{x_i} L_{x_j} = L_{x_i x_j}, so the form is
    B_ij = Σ_k c^k_ij tr(L_{x_k}).

    Args:
        A (TwoAlgebra): Algebra to check
        side (str): 'algebra', or 'coalgebra' to test dual(A)

    Returns:
        Verdict: Fails carries a vector in the kernel of the trace form
    """
    check = f"is_semisimple[{side}]"
    if side not in ("algebra", "coalgebra"):
        raise ValueError(f"unknown side {side!r}")
    target = A if side == "algebra" else dual(A)
    rows = _trace_form(target)
    basis = EchelonBasis()
    for row in rows:
        basis.add(row)
    if len(basis) == target.dim:
        return Verdict.holds(check, notes=f"trace form rank {target.dim}")
    kernel = nullspace(rows, target.dim)
    return Verdict.fails(check, {"rank": len(basis), "dim": target.dim,
                                 "kernel_vector": _labelled(target, kernel[0])},
                         notes="trace form is degenerate")


# -- positivity ----------------------------------------------------------------

def _orthant_side(A, side, tensor, other, fixing):
    """
    One operation against a cone that is the nonnegative orthant

    The cone is the orthant exactly when the other operation is diagonal on
    the basis and the involution on that side fixes it; the operation then
    preserves the cone iff its constants are nonnegative.
    """
    check = f"check_positivity[{side}]"
    if other != StructureTensor.diagonal(A.dim) or fixing != AntilinearMap.identity(A.dim):
        return None
    negative = sorted((key, value) for key, value in tensor.items() if value < 0)
    if negative:
        (i, j, k), value = negative[0]
        return Verdict.fails(check, {"tier": 1, "indices": [i, j, k],
                                     "elements": [A.label(i), A.label(j), A.label(k)],
                                     "negative_coefficient": value},
                             notes="tier 1: the cone is the nonnegative orthant")
    return Verdict.holds(check, notes="tier 1: the cone is the nonnegative orthant")


def _tier1(A):
    """
    Structural tier: an involutive bialgebra has both operations positive;
    otherwise each side is decided only when its cone is the orthant
    """
    if _comult_not_multiplicative(A) is None and check_involutive(A):
        note = "tier 1: involutive bialgebra, Δ and δ respect ♯ and ♭"
        return (Verdict.holds("check_positivity[mult]", notes=note),
                Verdict.holds("check_positivity[comult]", notes=note))
    mult = _orthant_side(A, "mult", A.mult, A.comult, A.coinvol)
    comult = _orthant_side(A, "comult", A.comult, A.mult, A.invol)
    if mult is None and comult is None:
        logger.debug("tier 1 not applicable: not a bialgebra and neither cone is an orthant")
        return None
    if mult is None:
        mult = Verdict.inconclusive("check_positivity[mult]", notes=NP_NOTE)
    if comult is None:
        comult = Verdict.inconclusive("check_positivity[comult]", notes=NP_NOTE)
    return mult, comult


def _split_fixed(B, sharp):
    """Primitive idempotents of a commutative algebra, if all are rational and ♯-fixed"""
    try:
        components = split_commutative(B.multiply, B.unit_vector(),
                                       [{i: Fraction(1)} for i in range(B.dim)])
    except SplittingError as e:
        logger.debug(f"tier 2 not applicable: {e}")
        return None
    if not splits_over_rationals(components):
        return None
    idempotents = [c.idempotent for c in components]
    if any(sharp.apply(e) != e for e in idempotents):
        return None
    return idempotents


def _coordinates_in(idempotents, dim):
    """inverse[a] = coordinates of x_a in the idempotent basis"""
    basis = EchelonBasis()
    for e in idempotents:
        basis.add(e)
    return [basis.coordinates({a: Fraction(1)}) for a in range(dim)]


def _tier2(A):
    if not (A.is_commutative() and A.is_cocommutative()):
        return None
    idempotents = _split_fixed(A, A.invol)
    if idempotents is None:
        return None
    D = dual(A)
    covectors = _split_fixed(D, D.invol)
    if covectors is None:
        return None
    note = "tier 2: exact check in the primitive idempotent bases of A and its dual"

    # comultiplication: Δ(e_i) has nonnegative coordinates in e_j ⊗ e_k
    inverse = _coordinates_in(idempotents, A.dim)
    comult = Verdict.holds("check_positivity[comult]", notes=note)
    for i, e in enumerate(idempotents):
        coords = {}
        for (a, b), d in A.comultiply(e).items():
            for j, x in inverse[a].items():
                for k, y in inverse[b].items():
                    iadd_coef(coords, d * x * y, {(j, k): Fraction(1)})
        negative = {key: v for key, v in coords.items() if v < 0}
        if negative:
            (j, k), value = min(negative.items())
            comult = Verdict.fails("check_positivity[comult]",
                                   {"tier": 2, "idempotent": i, "vector": _labelled(A, e),
                                    "component": [j, k], "coefficient": value}, notes=note)
            break

    # multiplication: the grouplikes dual to the idempotents of A′ multiply with
    # nonnegative coefficients
    grouplikes = dual_basis(covectors, A.dim)
    mult = Verdict.holds("check_positivity[mult]", notes=note)
    for i, g in enumerate(grouplikes):
        for j, h in enumerate(grouplikes):
            product = A.multiply(g, h)
            expansion = {}
            for l, f in enumerate(covectors):
                value = sum((f.get(a, 0) * c for a, c in product.items()), Fraction(0))
                if value:
                    expansion[l] = value
            if any(v < 0 for v in expansion.values()):
                mult = Verdict.fails("check_positivity[mult]",
                                     {"tier": 2, "left": _labelled(A, g), "right": _labelled(A, h),
                                      "product": _labelled(A, _combine(grouplikes, expansion)),
                                      "grouplike_expansion": expansion,
                                      "negative_coefficient": min(expansion.values())}, notes=note)
                return mult, comult
    return mult, comult


def _combine(grouplikes, expansion):
    out = {}
    for l, c in expansion.items():
        iadd_coef(out, c, grouplikes[l])
    return out


def positivity_tiers(A):
    """
    Verdict pairs of every applicable exact tier

    Both tiers are exact, so the decided sides of different tiers agree; a
    side a tier leaves open is Inconclusive.

    Returns:
        dict: tier number -> (mult Verdict, comult Verdict)
    """
    tiers = {}
    second = _tier2(A)
    if second is not None:
        tiers[2] = second
    first = _tier1(A)
    if first is not None:
        tiers[1] = first
    return tiers


def check_positivity(A):
    """
    Decide whether δ preserves K^♭ and Δ preserves K^♯

    Tier 2 (commutative and cocommutative, both sides split over ℚ with
    ♯-fixed idempotents) wins when it applies. Tier 1 holds both sides for an
    involutive bialgebra, and otherwise decides a side only when its cone is
    the nonnegative orthant: δ when Δ is diagonal and ♭ fixes the basis, Δ
    when δ is diagonal and ♯ fixes the basis. Sides left open are
    Inconclusive.

    Args:
        A (TwoAlgebra): Algebra to check

    Returns:
        tuple: (mult Verdict, comult Verdict)
    """
    second = _tier2(A)
    if second is not None:
        return second
    first = _tier1(A)
    if first is not None:
        return first
    return (Verdict.inconclusive("check_positivity[mult]", notes=NP_NOTE),
            Verdict.inconclusive("check_positivity[comult]", notes=NP_NOTE))


# -- homogeneity ---------------------------------------------------------------

def check_homogeneity(A):
    """
    Check that ε is a ♯-compatible algebra character serving as counit and Δ(1) = 1⊗1

    Algebras built from semigroups without unit skip the Δ(1) clause.

    Args:
        A (TwoAlgebra): Algebra to check

    Returns:
        Verdict: Fails names the violated clause
    """
    check = "check_homogeneity"
    n = A.dim
    for i in range(n):
        value = {}
        for (j, k), d in A.comult.first(i).items():
            iadd_coef(value, d * A.counit[j], {k: Fraction(1)})
        if value != {i: Fraction(1)}:
            return Verdict.fails(check, {"clause": "(ε⊗id)Δ = id", "index": i, "element": A.label(i),
                                         "value": _labelled(A, value), "counit": A.counit[i]})
    for i in range(n):
        for j in range(n):
            value = A.counit_of(A.mult.pair(i, j))
            if value != A.counit[i] * A.counit[j]:
                return Verdict.fails(check, {"clause": "ε is multiplicative", "indices": [i, j],
                                             "value": value, "expected": A.counit[i] * A.counit[j]})
    if A.counit_of(A.unit_vector()) != 1:
        return Verdict.fails(check, {"clause": "ε(1) = 1", "value": A.counit_of(A.unit_vector())})
    for i in range(n):
        # ε is rational on the basis, so ε∘♯ = conj∘ε reads ε(♯x_i) = ε(x_i)
        value = A.counit_of(A.invol.column(i))
        if value != A.counit[i]:
            return Verdict.fails(check, {"clause": "ε∘♯ = conj∘ε", "index": i, "value": value,
                                         "expected": A.counit[i]})
    if A.weakened:
        return Verdict.holds(check, notes="weakened: Δ(1) = 1⊗1 skipped, the semigroup has no unit")
    unit = A.unit_vector()
    delta = A.comultiply(unit)
    expected = {(a, b): x * y for a, x in unit.items() for b, y in unit.items()}
    if delta != expected:
        return Verdict.fails(check, {"clause": "Δ(1) = 1⊗1", "value": _labelled_pairs(A, delta),
                                     "expected": _labelled_pairs(A, expected)})
    return Verdict.holds(check)


def check_positive_2_algebra(A):
    """
    Aggregate of the positivity and homogeneity conditions

    Returns:
        Verdict: first Fails wins, then Inconclusive, else Holds
    """
    check = "check_positive_2_algebra"
    verdicts = [validate_2_algebra(A)]
    if verdicts[0].failed:
        return Verdict.conjunction(check, verdicts)
    verdicts.append(is_semisimple(A, "algebra"))
    verdicts.append(is_semisimple(A, "coalgebra"))
    verdicts.append(check_involutive(A))
    mult, comult = check_positivity(A)
    verdicts.extend([mult, comult])
    verdicts.append(check_homogeneity(A))
    result = Verdict.conjunction(check, verdicts)
    logger.debug(f"{check}: {result.status.value}")
    return result


def run_all(A):
    """Every individual check, in report order"""
    verdicts = [validate_2_algebra(A)]
    if verdicts[0].status is not Status.HOLDS:
        return verdicts
    verdicts.append(check_involutive(A))
    verdicts.append(is_bialgebra(A))
    verdicts.append(is_semisimple(A, "algebra"))
    verdicts.append(is_semisimple(A, "coalgebra"))
    verdicts.extend(check_positivity(A))
    verdicts.append(check_homogeneity(A))
    verdicts.append(check_positive_2_algebra(A))
    return verdicts
