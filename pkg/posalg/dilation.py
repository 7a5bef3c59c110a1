# posalg/dilation.py

"""
The A_λ family, quasi-character matrices, and the searches for strict and
coarse-grain (bicommutative nonstrict) dilations into group and inverse
semigroup bialgebras.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations, permutations

from .algebra import AntilinearMap, StructureTensor, TwoAlgebra, dual
from .characters import abelian_character_table, row_products_are_convex
from .config import (CATALOG_SEMIGROUP_MAX_N, DEFAULT_CENSUS_ORDER, ISOMORPHISM_MAX_DIM, get_default_jobs)
from .exceptions import EmbeddingError, QuasiCharacterError, SizeCapError, SplittingError, StructureError
from .linalg import EchelonBasis, iadd_coef, rank, solve
from .models import BaseResult, Status, Verdict
from .partitions import (Partition, block_embedding, block_sum, enumerate_stable_partitions, induced_two_algebra,
                         is_stable_partition, is_strict_subobject, normalization, strict_coaction)
from .scalars import format_rational
from .semigroups import build_group, build_member, group_catalog, semigroup_bialgebra, semigroup_catalog
from .splitting import character_value, dual_basis, split_commutative, splits_over_rationals
from .verify import check_positive_2_algebra, is_semisimple

logger = logging.getLogger('posalg.dilation')

NOT_SEMISIMPLE = "not semisimple"
NOT_POSITIVE = "not positive"

COARSE_GRAIN_NOTE = ("coarse grain: the unit block is {e}, the remaining group elements are split into "
                     "blocks and characters are averaged over each block")
IRRATIONAL_NOTE = ("strict dilations with k > 1 have irrational λ and no finite witness; "
                   "they are outside the searched catalog")


# -- the A_λ family ------------------------------------------------------------

def a_lambda(lam):
    """
    The 2-dimensional positive 2-algebra A_λ on the basis {1, u}

    u² = (1−λ)u + λ·1, Δu = u⊗u, ε(u) = 1, ♯ and ♭ fix both basis vectors.

    Args:
        lam (Fraction): λ in [0, 1]

    Returns:
        TwoAlgebra

    Raises:
        ValueError: If λ is outside [0, 1]
    """
    lam = Fraction(lam)
    if not 0 <= lam <= 1:
        raise ValueError(f"λ must lie in [0, 1], got {format_rational(lam)}")
    mult = StructureTensor(2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 1, 1 - lam), (1, 1, 0, lam)])
    return TwoAlgebra(mult, [1, 0], StructureTensor.diagonal(2), [1, 1],
                      AntilinearMap.identity(2), AntilinearMap.identity(2), labels=["1", "u"])


def grouplike_basis(A):
    """
    The basis in which Δ is diagonal: dual to the primitive idempotents of the dual algebra

    Returns:
        list of dict: Grouplike vectors, ordered by their smallest basis index

    Raises:
        SplittingError: If the dual algebra does not split over ℚ
    """
    D = dual(A)
    components = split_commutative(D.multiply, D.unit_vector(), [{i: Fraction(1)} for i in range(D.dim)])
    if not splits_over_rationals(components):
        raise SplittingError("the dual algebra does not split over ℚ")
    grouplikes = dual_basis([c.idempotent for c in components], A.dim)
    return sorted(grouplikes, key=lambda g: sorted(g.items()))


def classify_2dim(A):
    """
    Identify a 2-dimensional positive 2-algebra with some A_λ

    Args:
        A (TwoAlgebra): Algebra of dimension 2

    Returns:
        Fraction or str: λ, or NOT_SEMISIMPLE / NOT_POSITIVE
    """
    if A.dim != 2:
        raise ValueError(f"classify_2dim needs a 2-dimensional algebra, got dimension {A.dim}")
    if not is_semisimple(A, "algebra"):
        return NOT_SEMISIMPLE
    if not check_positive_2_algebra(A):
        return NOT_POSITIVE
    unit = A.unit_vector()
    others = [g for g in grouplike_basis(A) if g != unit]
    if len(others) != 1:
        return NOT_POSITIVE
    u = others[0]
    # u² = a·u + b·1 in the basis {1, u}
    coords = solve([unit, u], A.multiply(u, u))
    lam = coords.get(0, Fraction(0))
    logger.debug(f"classified as A_{format_rational(lam)}")
    return lam


# -- predicted strict dilations ------------------------------------------------

class StrictPredicted(BaseResult):
    """α = 1/λ + λ − 2 has the form k(s−1)²/s"""

    predicted = True

    def __init__(self, k, s):
        self.k = k
        self.s = s

    def __eq__(self, other):
        return isinstance(other, StrictPredicted) and (self.k, self.s) == (other.k, other.s)

    def __hash__(self):
        return hash((self.k, self.s))

    def to_dict(self):
        return {"predicted": True, "k": self.k, "s": self.s}


class NotPredicted(BaseResult):
    predicted = False

    def __eq__(self, other):
        return isinstance(other, NotPredicted)

    def __hash__(self):
        return hash(NotPredicted)

    def to_dict(self):
        return {"predicted": False}


def dilation_predicate(lam):
    """
    Decide whether λ is a root of z² − (2+α)z + 1 with α = k(s−1)²/s for positive integers k, s

    Searches s up to numerator·denominator of α plus one.

    Args:
        lam (Fraction): λ in (0, 1]

    Returns:
        StrictPredicted or NotPredicted
    """
    lam = Fraction(lam)
    if not 0 < lam <= 1:
        raise ValueError(f"λ must lie in (0, 1], got {format_rational(lam)}")
    alpha = 1 / lam + lam - 2
    if alpha == 0:
        return StrictPredicted(1, 1)
    bound = alpha.numerator * alpha.denominator + 1
    for s in range(2, bound + 1):
        k = alpha * s / (s - 1) ** 2
        if k.denominator == 1:
            return StrictPredicted(int(k), s)
    return NotPredicted()


# -- quasi-character matrices --------------------------------------------------

class QuasiCharacterMatrix:
    """Square rational matrix with unit first row and column whose row and column products are convex"""

    def __init__(self, rows):
        """
        Args:
            rows (list of list): Entries as Fractions

        Raises:
            QuasiCharacterError: If the shape, the unit row/column or convexity is violated
        """
        rows = [[Fraction(v) for v in row] for row in rows]
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise QuasiCharacterError("quasi-character matrix must be square and nonempty")
        if any(v != 1 for v in rows[0]) or any(row[0] != 1 for row in rows):
            raise QuasiCharacterError("first row and first column must be all ones")
        for name, lines in (("rows", rows), ("columns", [list(c) for c in zip(*rows)])):
            convex, witness = row_products_are_convex(lines)
            if not convex:
                raise QuasiCharacterError(f"products of {name} {witness['rows']} are not convex combinations")
        self.rows = rows

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, index):
        return self.rows[index]

    def __eq__(self, other):
        return isinstance(other, QuasiCharacterMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.rows))

    def invariant_key(self):
        """Multiset of rows and of columns, unchanged by reordering rows or columns"""
        columns = list(zip(*self.rows))
        return (tuple(sorted(tuple(sorted(row)) for row in self.rows[1:])),
                tuple(sorted(tuple(sorted(col)) for col in columns[1:])))

    def to_dict(self):
        return [[format_rational(v) for v in row] for row in self.rows]

    def __repr__(self):
        return f"QuasiCharacterMatrix({self.to_dict()})"


def quasicharacter_matrix(A):
    """
    Characters of a bicommutative algebra evaluated on its grouplike basis

    Row 0 is the counit and column 0 the unit; the other rows follow the
    primitive idempotents, the other columns the grouplike basis.

    Args:
        A (TwoAlgebra): Commutative, cocommutative, semisimple on both sides

    Returns:
        QuasiCharacterMatrix

    Raises:
        StructureError: If A is not bicommutative or its characters are not rational
        QuasiCharacterError: If the matrix fails the convexity conditions
    """
    if not (A.is_commutative() and A.is_cocommutative()):
        raise StructureError("quasi-character matrices need a commutative and cocommutative algebra")
    components = split_commutative(A.multiply, A.unit_vector(), [{i: Fraction(1)} for i in range(A.dim)])
    if not splits_over_rationals(components):
        raise SplittingError("the algebra does not split over ℚ")
    unit = A.unit_vector()
    grouplikes = grouplike_basis(A)
    if unit not in grouplikes:
        raise StructureError("the unit is not grouplike")
    columns = [unit] + [g for g in grouplikes if g != unit]
    rows = [[character_value(A.multiply, c, g) for g in columns] for c in components]
    counit_row = [A.counit_of(g) for g in columns]
    if counit_row not in rows:
        raise StructureError("the counit is not an algebra character")
    rows.remove(counit_row)
    return QuasiCharacterMatrix([counit_row] + rows)


def algebra_from_quasicharacters(Q):
    """
    The bicommutative 2-algebra encoded by a quasi-character matrix

    Basis g_j (columns) is grouplike; row r is the character χ_r with
    χ_r(g_j) = Q[r][j], so g_i g_j = Σ_k c_k g_k solves Q c = Q[·][i]·Q[·][j].

    Returns:
        TwoAlgebra
    """
    n = len(Q)
    columns = [{r: Q[r][k] for r in range(n) if Q[r][k]} for k in range(n)]
    entries = []
    for i in range(n):
        for j in range(n):
            target = {r: Q[r][i] * Q[r][j] for r in range(n) if Q[r][i] * Q[r][j]}
            coeffs = solve(columns, target)
            if coeffs is None:
                raise QuasiCharacterError("quasi-character matrix is singular")
            entries.extend((i, j, k, v) for k, v in sorted(coeffs.items()))
    labels = ["1"] + [f"g{j}" for j in range(1, n)]
    return TwoAlgebra(StructureTensor(n, entries), [1] + [0] * (n - 1), StructureTensor.diagonal(n), [1] * n,
                      AntilinearMap.identity(n), AntilinearMap.identity(n), labels=labels)


def _as_matrix(target):
    if isinstance(target, QuasiCharacterMatrix):
        return target
    if isinstance(target, TwoAlgebra):
        return quasicharacter_matrix(target)
    return quasicharacter_matrix(a_lambda(Fraction(target)))


# -- isomorphism -----------------------------------------------------------------

def _invariant(A):
    if A.is_commutative() and A.is_cocommutative():
        try:
            return quasicharacter_matrix(A).invariant_key()
        except StructureError:
            return None
    return None


def find_isomorphism(source, target):
    """
    A basis bijection carrying source onto target entrywise

    Backtracks over assignments, pruning on unit, counit and the products
    of already assigned basis elements.

    Args:
        source (TwoAlgebra): Algebra to relabel
        target (TwoAlgebra): Algebra to match

    Returns:
        list or None: new_index with source.relabeled(new_index) equal to target

    Raises:
        SizeCapError: Above the backtracking dimension cap
    """
    if source.dim != target.dim:
        return None
    dim = source.dim
    if dim > ISOMORPHISM_MAX_DIM:
        raise SizeCapError("isomorphism search dimension", dim, ISOMORPHISM_MAX_DIM)
    assign = [None] * dim
    used = [False] * dim

    def consistent(i):
        for a in range(i + 1):
            for x, y in ((a, i), (i, a)):
                product = source.mult.pair(x, y)
                image = target.mult.pair(assign[x], assign[y])
                if len(product) != len(image):
                    return False
                for k, v in product.items():
                    if assign[k] is not None and image.get(assign[k]) != v:
                        return False
        return True

    def search(i):
        if i == dim:
            return source.relabeled(assign).same_structure(target)
        for j in range(dim):
            if used[j] or source.unit[i] != target.unit[j] or source.counit[i] != target.counit[j]:
                continue
            assign[i], used[j] = j, True
            if consistent(i) and search(i + 1):
                return True
            assign[i], used[j] = None, False
        return False

    return list(assign) if search(0) else None


# -- witnesses -----------------------------------------------------------------

class DilationWitness(BaseResult):
    """A catalog member and a stable partition whose induced algebra is the target"""

    def __init__(self, ambient, partition, normalization, iso):
        """
        Args:
            ambient (str): Catalog name of the group or inverse semigroup
            partition (Partition): The stable partition
            normalization (list of Fraction): κ_C per block
            iso (list of int): Block index -> target basis index
        """
        self.ambient = ambient
        self.partition = partition
        self.normalization = normalization
        self.iso = iso

    def verify(self, target):
        """
        Re-check the witness from scratch

        Rebuilds the ambient, recertifies the partition, compares the relabeled
        induced algebra with the target entrywise and runs is_strict_subobject
        on the block sums.

        Returns:
            Verdict
        """
        check = "verify_strict_witness"
        A = semigroup_bialgebra(build_member(self.ambient))
        stable = is_stable_partition(A, self.partition)
        if not stable:
            return Verdict.fails(check, {"stage": "stable partition", **stable.witness})
        induced = induced_two_algebra(A, stable.payload)
        if not induced.relabeled(self.iso).same_structure(target):
            return Verdict.fails(check, {"stage": "isomorphism", "iso": self.iso})
        subobject = is_strict_subobject(A, [block_sum(self.partition, b) for b in range(len(self.partition))])
        if not subobject:
            return Verdict.fails(check, {"stage": "strict subobject", **(subobject.witness or {})},
                                 notes=subobject.notes)
        return Verdict.holds(check)

    def to_dict(self):
        return {"ambient": self.ambient, "partition": self.partition.to_list(),
                "normalization": [format_rational(v) for v in self.normalization], "iso": self.iso}


class CoarseGrainWitness(BaseResult):
    """Block averages of selected characters of an abelian group reproducing a quasi-character matrix"""

    def __init__(self, group, partition, characters, matrix, certificate=None):
        """
        Args:
            group (str): Catalog name of the abelian group
            partition (Partition): Unit block first, then one block per column
            characters (list of str): Selected characters, trivial first
            matrix (QuasiCharacterMatrix): The reproduced matrix
            certificate (Verdict, optional): verify_nonstrict_witness outcome
        """
        self.group = group
        self.partition = partition
        self.characters = characters
        self.matrix = matrix
        self.certificate = certificate

    def to_dict(self):
        out = {"ambient": self.group, "partition": self.partition.to_list(), "characters": self.characters,
               "matrix": self.matrix.to_dict()}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
        return out


# -- nonstrict subobjects --------------------------------------------------------

def _check_embedding(A, B, T):
    if len(T) != B.dim:
        raise EmbeddingError(f"embedding has {len(T)} columns for an algebra of dimension {B.dim}")
    if rank(T) != B.dim:
        raise EmbeddingError("embedding is not injective")

    def image(vector):
        out = {}
        for i, c in vector.items():
            iadd_coef(out, c, T[i])
        return out

    if image(B.unit_vector()) != A.unit_vector():
        raise EmbeddingError("embedding does not preserve the unit")
    for i in range(B.dim):
        for j in range(B.dim):
            if image(B.mult.pair(i, j)) != A.multiply(T[i], T[j]):
                raise EmbeddingError(f"embedding is not multiplicative on ({B.label(i)}, {B.label(j)})")
        for name, source, target in (("♯", B.invol, A.invol), ("♭", B.coinvol, A.coinvol)):
            if image(source.column(i)) != target.apply(T[i]):
                raise EmbeddingError(f"embedding does not commute with {name} on {B.label(i)}")
    if B.has_grouplike_basis() and any(v < 0 for column in T for v in column.values()):
        raise EmbeddingError("embedding is not positive on the grouplike basis")
    return image


def verify_nonstrict_witness(A, B, T, rho):
    """
    Check that rho is a coaction of the embedded coalgebra T(B) on all of A extending B's own

    Args:
        A (TwoAlgebra): Involutive bialgebra
        B (TwoAlgebra): Positive 2-algebra being embedded
        T (list of dict): T[i] = image of B's basis element i in A
        rho (StructureTensor): ρ(x_i) = Σ c[i, a, k] x_a ⊗ x_k

    Returns:
        Verdict: Fails names the violated clause

    Raises:
        EmbeddingError: If T is not a unital, multiplicative, ♯,♭-preserving, positive injection
    """
    check = "verify_nonstrict_witness"
    image = _check_embedding(A, B, T)
    span = EchelonBasis()
    for column in T:
        span.add(column)

    def legs(i):
        """ρ(x_i) regrouped as {k: left leg vector}"""
        out = {}
        for (a, k), c in rho.first(i).items():
            out.setdefault(k, {})[a] = c
        return out

    coords = {}
    for i in range(A.dim):
        coords[i] = {}
        for k, leg in legs(i).items():
            combo = span.coordinates(leg)
            if combo is None:
                return Verdict.fails(check, {"clause": "left legs lie in T(B)", "element": A.label(i),
                                             "leg": A.label(k)})
            coords[i][k] = combo

    def delta_t(combo):
        """(T⊗T)Δ_B of the element Σ combo_b b, as {(a, c): coefficient}"""
        out = {}
        for b, x in combo.items():
            for (j, l), d in B.comult.first(b).items():
                for a, y in T[j].items():
                    for c, z in T[l].items():
                        iadd_coef(out, x * d * y * z, {(a, c): Fraction(1)})
        return out

    for i in range(A.dim):
        left, right = {}, {}
        for k, combo in coords[i].items():
            for (a, c), v in delta_t(combo).items():
                iadd_coef(left, v, {(a, c, k): Fraction(1)})
            for a, x in image(combo).items():
                for (c, m), y in rho.first(k).items():
                    iadd_coef(right, x * y, {(a, c, m): Fraction(1)})
        if left != right:
            return Verdict.fails(check, {"clause": "(Δ_B⊗id)ρ = (id⊗ρ)ρ", "element": A.label(i)})
    for i in range(A.dim):
        value = {}
        for k, combo in coords[i].items():
            iadd_coef(value, B.counit_of(combo), {k: Fraction(1)})
        if value != {i: Fraction(1)}:
            return Verdict.fails(check, {"clause": "(ε_B⊗id)ρ = id", "element": A.label(i)})
    for b in range(B.dim):
        extended = {}
        for a, x in T[b].items():
            iadd_coef(extended, x, rho.first(a))
        if extended != delta_t({b: Fraction(1)}):
            return Verdict.fails(check, {"clause": "ρ restricts to (T⊗T)Δ_B", "element": B.label(b)})
    return Verdict.holds(check)


# -- catalogs and searches ---------------------------------------------------------

def catalog_members(max_order=DEFAULT_CENSUS_ORDER, include_semigroups=True,
                    semigroup_max_n=CATALOG_SEMIGROUP_MAX_N):
    """Catalog names in search order: groups by order, then I_n and the matrix-unit semigroups"""
    names = [spec.name for spec in group_catalog(max_order)]
    if include_semigroups:
        names.extend(S.name for S in semigroup_catalog(semigroup_max_n))
    return names


def _induced_member(name, num_blocks):
    """(partition lists, normalization, induced algebra) for every stable partition with num_blocks blocks"""
    S = build_member(name)
    if S.size < num_blocks:
        return []
    A = semigroup_bialgebra(S)
    found = []
    for cert in enumerate_stable_partitions(S, num_blocks=num_blocks, A=A):
        found.append((cert.partition.to_list(), normalization(cert), induced_two_algebra(A, cert)))
    logger.debug(f"{name}: {len(found)} stable partitions with {num_blocks} blocks")
    return found


def _induced_members(names, num_blocks, jobs, cache):
    pending = [name for name in names if (name, num_blocks) not in cache]
    if jobs > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for name, found in zip(pending, pool.map(_induced_member, pending, [num_blocks] * len(pending))):
                cache[(name, num_blocks)] = found
    else:
        for name in pending:
            cache[(name, num_blocks)] = _induced_member(name, num_blocks)
    return [(name, cache[(name, num_blocks)]) for name in names]


def strict_dilation_search(target, max_order=8, include_semigroups=True, jobs=1, cache=None):
    """
    Catalog members with a stable partition inducing the target

    Args:
        target (TwoAlgebra): Positive 2-algebra
        max_order (int): Largest group order in the catalog
        include_semigroups (bool): Also search I_n and the matrix-unit semigroups
        jobs (int): Worker processes
        cache (dict, optional): (member, blocks) -> induced algebras, shared across calls

    Returns:
        list of DilationWitness: Every one re-verified; empty means none within bounds
    """
    verdict = check_positive_2_algebra(target)
    if verdict.status is not Status.HOLDS:
        logger.warning(f"target is not a positive 2-algebra ({verdict.status.value}), nothing to search")
        return []
    cache = cache if cache is not None else {}
    names = catalog_members(max_order, include_semigroups)
    logger.info(f"Strict dilation search over {len(names)} catalog members, dimension {target.dim}")
    key = _invariant(target)
    witnesses = []
    for name, found in _induced_members(names, target.dim, jobs, cache):
        for blocks, scalars, induced in found:
            if key is not None and _invariant(induced) != key:
                continue
            iso = find_isomorphism(induced, target)
            if iso is None:
                continue
            witness = DilationWitness(name, Partition(sum(len(b) for b in blocks), blocks), scalars, iso)
            check = witness.verify(target)
            if not check:
                logger.warning(f"{name}: candidate {blocks} failed re-verification")
                continue
            logger.info(f"Strict witness in {name}: {blocks}")
            witnesses.append(witness)
    return witnesses


def _block_search(table, rows, Q, remaining, column):
    """Blocks for columns column.. of Q from the remaining elements, or None"""
    n = len(Q)
    if not remaining:
        return None
    if column == n - 1:
        candidates = [list(remaining)]
    else:
        candidates = (list(c) for size in range(1, len(remaining) - (n - 1 - column) + 1)
                      for c in combinations(remaining, size))
    for block in candidates:
        if all(table.block_average(rows[r], block) == Q[r][column] for r in range(1, n)):
            if column == n - 1:
                return [block]
            rest = _block_search(table, rows, Q, [g for g in remaining if g not in block], column + 1)
            if rest is not None:
                return [block] + rest
    return None


def certify_coarse_grain(witness):
    """
    Turn a coarse grain into nonstrict coaction data and check it

    The embedding sends the column basis of the encoded algebra to block
    averages; the coaction is the block-averaging coaction (P⊗id)Δ. Both
    need the column blocks to form a stable partition, so only coarse
    grains that are strict dilations in disguise can be certified.

    Returns:
        Verdict
    """
    S = build_member(witness.group)
    A = semigroup_bialgebra(S)
    B = algebra_from_quasicharacters(witness.matrix)
    partition = witness.partition
    T = block_embedding(A, partition, [Fraction(1, len(block)) for block in partition.blocks])
    try:
        return verify_nonstrict_witness(A, B, T, strict_coaction(A, partition))
    except EmbeddingError as e:
        return Verdict.fails("verify_nonstrict_witness", {"clause": "embedding", "reason": str(e)})


def coarse_grain_search(target, max_order=8):
    """
    An abelian group whose character table coarse-grains to the target matrix

    Args:
        target (Fraction, TwoAlgebra or QuasiCharacterMatrix): λ of A_λ, or the matrix itself
        max_order (int): Largest group order

    Returns:
        CoarseGrainWitness or None: The first certified witness in catalog order
    """
    Q = _as_matrix(target)
    n = len(Q)
    if n < 2:
        raise ValueError("coarse grains need a matrix of size at least 2")
    for spec in group_catalog(max_order, abelian_only=True):
        G = build_group(spec)
        if G.size < n:
            continue
        table = abelian_character_table(G)
        others = [g for g in range(G.size) if g != G.unit]
        for chosen in permutations(range(1, len(table)), n - 1):
            rows = [0, *chosen]
            blocks = _block_search(table, rows, Q, others, 1)
            if blocks is None:
                continue
            witness = CoarseGrainWitness(spec.name, Partition(G.size, [[G.unit], *blocks]),
                                         [table.label(r) for r in rows], Q)
            witness.certificate = certify_coarse_grain(witness)
            if witness.certificate:
                logger.info(f"Coarse grain of {Q.to_dict()} in {spec.name}")
                return witness
            logger.debug(f"{spec.name}: coarse grain {witness.partition.to_list()} not certified")
    logger.info(f"No coarse grain of {Q.to_dict()} in abelian groups of order ≤ {max_order}")
    return None


# -- census ----------------------------------------------------------------------

class CensusResult(BaseResult):
    """Achieved λ values against the predicate, with recorded discrepancies"""

    def __init__(self, max_order):
        self.max_order = max_order
        self.strict = {}
        self.nonstrict = {}
        self.predictions = {}
        self.discrepancies = []
        self.notes = [COARSE_GRAIN_NOTE, IRRATIONAL_NOTE]

    def to_dict(self):
        rows = []
        for lam in sorted(set(self.strict) | set(self.nonstrict), reverse=True):
            nonstrict = self.nonstrict.get(lam)
            rows.append({"lambda": format_rational(lam),
                         "strict": [w.to_dict() for w in self.strict.get(lam, [])],
                         "nonstrict": nonstrict.to_dict() if nonstrict else None,
                         "prediction": self.predictions[lam].to_dict()})
        return {"bounds": {"max_order": self.max_order}, "table": rows, "discrepancies": self.discrepancies,
                "notes": self.notes}


def lambda_census(max_order=DEFAULT_CENSUS_ORDER, include_semigroups=False, jobs=None):
    """
    Tabulate every λ realized by a 2-block stable partition of the catalog

    Each achieved A_λ gets its strict witnesses, a coarse-grain search and
    the predicate; disagreements are recorded, never suppressed.

    Args:
        max_order (int): Largest group order
        include_semigroups (bool): Add I_n and the matrix-unit semigroups to the catalog
        jobs (int, optional): Worker processes, POSALG_JOBS or the CPU count by default

    Returns:
        CensusResult
    """
    jobs = jobs if jobs is not None else get_default_jobs()
    result = CensusResult(max_order)
    cache = {}
    names = catalog_members(max_order, include_semigroups)
    logger.info(f"Census over {len(names)} catalog members up to order {max_order}")
    achieved = set()
    for name, found in _induced_members(names, 2, jobs, cache):
        for _, _, induced in found:
            lam = classify_2dim(induced)
            if isinstance(lam, str):
                result.discrepancies.append({"kind": "induced algebra not classified", "ambient": name,
                                             "reason": lam})
                continue
            achieved.add(lam)
    for lam in sorted(achieved, reverse=True):
        target = a_lambda(lam)
        result.strict[lam] = strict_dilation_search(target, max_order, include_semigroups, jobs, cache)
        result.predictions[lam] = dilation_predicate(lam) if lam > 0 else NotPredicted()
        if result.strict[lam] and not result.predictions[lam].predicted:
            result.discrepancies.append({"kind": "strict witness without prediction",
                                         "lambda": format_rational(lam),
                                         "witness": result.strict[lam][0].to_dict()})
        if not result.strict[lam]:
            result.discrepancies.append({"kind": "harvested λ failed re-verification",
                                         "lambda": format_rational(lam)})
        result.nonstrict[lam] = coarse_grain_search(lam, max_order)
        if result.strict[lam] and result.nonstrict[lam] is None:
            result.discrepancies.append({"kind": "strict witness without coarse grain",
                                         "lambda": format_rational(lam)})
    third = Fraction(1, 3)
    if result.strict.get(third):
        result.discrepancies.append({
            "kind": "stated example contradicted",
            "lambda": "1/3",
            "statement": "A_{1/3} admits a nonstrict, but not a strict, dilation",
            "observed": result.strict[third][0].to_dict(),
            "prediction": result.predictions[third].to_dict(),
            "resolution": "not resolved: the rational criterion λ = 1/n and the brute-force search "
                          "both disagree with the statement",
        })
    logger.info(f"Census done: {len(result.strict)} λ values, {len(result.discrepancies)} discrepancies")
    return result
