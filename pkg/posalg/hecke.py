# posalg/hecke.py

"""
Iwahori–Hecke algebras H_n(q) of type A and their Borel double-coset
realisation inside the group bialgebra of GL_n(F_p).
"""

import logging
from fractions import Fraction
from functools import cached_property
from itertools import permutations, product

import numpy as np
from sympy import isprime

from .algebra import AntilinearMap, StructureTensor, TwoAlgebra
from .cache import StructureConstantCache
from .config import GL_ORDER_CAP, HECKE_MAX_N, HECKE_MIN_N
from .exceptions import SizeCapError, StructureError
from .linalg import iadd_coef
from .models import Verdict
from .partitions import Partition, induced_two_algebra, is_stable_partition
from .scalars import format_rational
from .semigroups import FiniteMonoid, InverseSemigroup, group_inverse, semigroup_bialgebra

logger = logging.getLogger('posalg.hecke')


class Permutation:
    """A permutation of 0..n-1 in one-line notation, composed as (ab)(i) = a(b(i))"""

    def __init__(self, one_line):
        self.one_line = tuple(one_line)
        self.n = len(self.one_line)

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def simple(cls, n, i):
        """The Coxeter transposition σ_i exchanging i and i+1 (0-based)"""
        line = list(range(n))
        line[i], line[i + 1] = line[i + 1], line[i]
        return cls(line)

    @cached_property
    def length(self):
        """Reduced length l(g), the number of inversions"""
        line = self.one_line
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if line[i] > line[j])

    def inverse(self):
        line = [0] * self.n
        for i, v in enumerate(self.one_line):
            line[v] = i
        return Permutation(line)

    def __mul__(self, other):
        return Permutation(self.one_line[i] for i in other.one_line)

    def left_multiply_simple(self, i):
        """σ_i·self: swap the values i and i+1"""
        swap = {i: i + 1, i + 1: i}
        return Permutation(swap.get(v, v) for v in self.one_line)

    def left_descents(self):
        """i with l(σ_i g) < l(g): the value i+1 appears before i"""
        position = self.inverse().one_line
        return [i for i in range(self.n - 1) if position[i] > position[i + 1]]

    @property
    def label(self):
        return "T" + "".join(str(v + 1) for v in self.one_line)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.one_line == other.one_line

    def __hash__(self):
        return hash(self.one_line)

    def __repr__(self):
        return f"Permutation({list(self.one_line)})"


class HeckeAlgebra:
    """H_n(q) in the basis τ_g, g ∈ S_n ordered by (length, lex)"""

    def __init__(self, n, q, mult, basis):
        self.n = n
        self.q = q
        self.mult = mult
        self.basis = basis
        self.index = {g: i for i, g in enumerate(basis)}

    @property
    def dim(self):
        return len(self.basis)

    def product(self, g, h):
        """τ_g τ_h as a sparse vector over the basis"""
        return dict(self.mult.pair(self.index[g], self.index[h]))

    def __repr__(self):
        return f"HeckeAlgebra(n={self.n}, q={format_rational(self.q)})"


def hecke_basis(n):
    return sorted((Permutation(p) for p in permutations(range(n))),
                  key=lambda g: (g.length, g.one_line))


def _left_simple(q, i, vector, basis, index):
    """τ_i · v using τ_i τ_w = τ_{σ_i w} or (q-1)τ_w + q τ_{σ_i w}"""
    out = {}
    for w, coef in vector.items():
        g = basis[w]
        s_g = index[g.left_multiply_simple(i)]
        if basis[s_g].length > g.length:
            iadd_coef(out, coef, {s_g: Fraction(1)})
        else:
            iadd_coef(out, coef, {w: q - 1, s_g: q})
    return out


def build_hecke(n, q, cache=None):
    """
    Structure constants of H_n(q) in the τ basis

    τ_g for g = σ_i g′ with l(g) = 1 + l(g′) is τ_i τ_{g′}, so every row of
    products is obtained from a shorter one by a left multiplication by τ_i.

    Args:
        n (int): Rank, 2..5
        q (Fraction): Positive parameter
        cache (StructureConstantCache, optional): Disk cache, POSALG_CACHE by default

    Returns:
        HeckeAlgebra

    Raises:
        SizeCapError: If n is outside the supported range
    """
    if not HECKE_MIN_N <= n <= HECKE_MAX_N:
        raise SizeCapError("Hecke rank", n, HECKE_MAX_N)
    q = Fraction(q)
    if q <= 0:
        raise ValueError(f"Hecke parameter must be positive, got {q}")
    basis = hecke_basis(n)
    index = {g: i for i, g in enumerate(basis)}
    cache = cache if cache is not None else StructureConstantCache()
    entries = cache.load(n, q)
    if entries is None:
        logger.info(f"Computing structure constants of H_{n}({format_rational(q)})")
        dim = len(basis)
        rows = [None] * dim
        rows[0] = [{h: Fraction(1)} for h in range(dim)]
        for position in range(1, dim):
            g = basis[position]
            i = g.left_descents()[0]
            shorter = index[g.left_multiply_simple(i)]
            rows[position] = [_left_simple(q, i, v, basis, index) for v in rows[shorter]]
        entries = [(g, h, k, v) for g in range(dim) for h in range(dim) for k, v in sorted(rows[g][h].items())]
        cache.save(n, q, entries)
    return HeckeAlgebra(n, q, StructureTensor(len(basis), entries), basis)


def hecke_two_algebra(H, basis="stochastic"):
    """
    H_n(q) as a 2-algebra with grouplike diagonal comultiplication

    Args:
        H (HeckeAlgebra): The algebra
        basis (str): 'stochastic' for τ̄_g = q^(-l(g)) τ_g, or 'tau'

    Returns:
        TwoAlgebra: Δ diagonal, ε = 1 on the basis, ♯ = g ↦ g⁻¹, ♭ = conjugation
    """
    if basis not in ("stochastic", "tau"):
        raise ValueError(f"unknown Hecke basis {basis!r}")
    dim = H.dim
    lengths = [g.length for g in H.basis]
    if basis == "stochastic":
        # μ^k_{gh} = c^k_{gh} q^(l(k) - l(g) - l(h))
        mult = StructureTensor(dim, ((g, h, k, v * H.q ** (lengths[k] - lengths[g] - lengths[h]))
                                     for (g, h, k), v in H.mult.items()))
    else:
        mult = H.mult
    inverse = [H.index[g.inverse()] for g in H.basis]
    unit = [Fraction(1)] + [Fraction(0)] * (dim - 1)
    return TwoAlgebra(mult, unit, StructureTensor.diagonal(dim), [1] * dim,
                      AntilinearMap.from_permutation(inverse), AntilinearMap.identity(dim),
                      labels=[g.label for g in H.basis])


# -- GL_n(F_p) -----------------------------------------------------------------

def _determinants(mats, p):
    """Determinants mod p of a stack of integer matrices, by the Leibniz formula"""
    n = mats.shape[1]
    total = np.zeros(mats.shape[0], dtype=np.int64)
    for perm in permutations(range(n)):
        sign = Permutation(perm).length % 2
        term = np.ones(mats.shape[0], dtype=np.int64)
        for row, col in enumerate(perm):
            term = term * mats[:, row, col] % p
        total = (total - term) % p if sign else (total + term) % p
    return total


def rank_mod_p(rows, p):
    """Rank of a small integer matrix over F_p"""
    work = [[v % p for v in row] for row in rows]
    rank = 0
    cols = len(work[0]) if work else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][c]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = pow(work[rank][c], -1, p)
        work[rank] = [v * inv % p for v in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][c]:
                factor = work[r][c]
                work[r] = [(v - factor * w) % p for v, w in zip(work[r], work[rank])]
        rank += 1
    return rank


class FiniteFieldGroup:
    """GL_n(F_p) with its multiplication table"""

    def __init__(self, n, p, matrices, table):
        self.n = n
        self.p = p
        self.matrices = matrices
        self.table = table

    @property
    def order(self):
        return len(self.matrices)

    @cached_property
    def monoid(self):
        labels = ["[" + ";".join("".join(str(v) for v in row) for row in m) + "]" for m in self.matrices.tolist()]
        return FiniteMonoid(self.table, unit=0, labels=labels, name=f"GL:{self.n}:{self.p}")

    def borel(self):
        """Indices of the invertible upper-triangular matrices"""
        lower = np.tril(np.ones((self.n, self.n), dtype=bool), -1)
        return [i for i, m in enumerate(self.matrices) if not m[lower].any()]

    def __repr__(self):
        return f"FiniteFieldGroup(n={self.n}, p={self.p}, order={self.order})"


def gl_order(n, p):
    order = 1
    for k in range(n):
        order *= p ** n - p ** k
    return order


def build_gl(n, p):
    """
    Enumerate GL_n(F_p) for a prime p

    Args:
        n (int): Matrix size, 2 or 3
        p (int): Prime

    Returns:
        FiniteFieldGroup: Identity at index 0, then lexicographic order

    Raises:
        SizeCapError: If the group order exceeds the cap
        StructureError: If the enumeration disagrees with the order formula
    """
    if not isprime(p):
        raise ValueError(f"only prime fields are supported, got p = {p}")
    if n not in (2, 3):
        raise SizeCapError("GL matrix size", n, 3)
    expected = gl_order(n, p)
    if expected > GL_ORDER_CAP:
        raise SizeCapError("GL order", expected, GL_ORDER_CAP)
    entries = np.array(list(product(range(p), repeat=n * n)), dtype=np.int64).reshape(-1, n, n)
    mats = entries[_determinants(entries, p) != 0]
    identity = np.eye(n, dtype=np.int64)
    is_identity = np.all(mats == identity, axis=(1, 2))
    mats = np.concatenate([mats[is_identity], mats[~is_identity]])
    if len(mats) != expected:
        raise StructureError(f"enumerated {len(mats)} invertible matrices, expected {expected}")
    weights = p ** np.arange(n * n, dtype=np.int64)
    codes = mats.reshape(len(mats), -1) @ weights
    order = np.argsort(codes)
    products = np.einsum('aij,bjk->abik', mats, mats) % p
    product_codes = products.reshape(len(mats), len(mats), -1) @ weights
    table = order[np.searchsorted(codes[order], product_codes)]
    logger.info(f"Built GL_{n}(F_{p}) of order {expected}")
    return FiniteFieldGroup(n, p, mats, table)


def borel_double_cosets(G):
    """
    Partition GL_n(F_p) into double cosets BgB of the upper-triangular Borel subgroup

    Args:
        G (FiniteFieldGroup): The group

    Returns:
        Partition: Blocks in order of their smallest element
    """
    B = np.array(G.borel(), dtype=np.int64)
    T = G.table
    block_of = np.full(G.order, -1, dtype=np.int64)
    blocks = []
    for g in range(G.order):
        if block_of[g] >= 0:
            continue
        coset = np.unique(T[T[B, g][:, None], B[None, :]])
        block_of[coset] = len(blocks)
        blocks.append(sorted(int(x) for x in coset))
    logger.info(f"GL_{G.n}(F_{G.p}): {len(blocks)} Borel double cosets, |B| = {len(B)}")
    return Partition(G.order, blocks)


def bruhat_cell(matrix, p):
    """
    The permutation w with g ∈ B P_w B, where P_w e_j = e_{w(j)}

    Read off the ranks r(i, j) of the lower-left submatrices g[i:, :j],
    which are invariant under B on both sides.
    """
    n = len(matrix)
    r = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n):
        for j in range(1, n + 1):
            r[i][j] = rank_mod_p([row[:j] for row in matrix[i:]], p)
    line = [None] * n
    for c in range(n):
        for i in range(n):
            if r[i][c + 1] - r[i][c] - r[i + 1][c + 1] + r[i + 1][c] == 1:
                line[c] = i
    if None in line:
        raise StructureError(f"no Bruhat cell found for {matrix}")
    return Permutation(line)


def group_bialgebra(G):
    """The group bialgebra of GL_n(F_p)"""
    monoid = G.monoid
    return semigroup_bialgebra(InverseSemigroup(monoid, group_inverse(monoid)))


def iwahori_check(n, p):
    """
    Certify H_n(p) as the Borel double-coset subalgebra of ℂ[GL_n(F_p)]

    Builds the induced 2-algebra of the double-coset partition, labels each
    block by its Bruhat cell and compares every structure constant with the
    stochastic form of H_n(p).

    Args:
        n (int): Matrix size
        p (int): Prime

    Returns:
        Verdict: Holds with the block-to-permutation map and the number of
            compared identities, or Fails at the first differing constant
    """
    check = f"iwahori_check[{n},{p}]"
    G = build_gl(n, p)
    A = group_bialgebra(G)
    partition = borel_double_cosets(G)
    stable = is_stable_partition(A, partition)
    if not stable:
        return Verdict.fails(check, {"stage": "stable partition", **(stable.witness or {})},
                             notes=stable.notes)
    induced = induced_two_algebra(A, stable.payload)

    H = build_hecke(n, Fraction(p))
    target = hecke_two_algebra(H)
    if len(partition.blocks) != H.dim:
        return Verdict.fails(check, {"stage": "block count", "blocks": len(partition.blocks), "expected": H.dim})
    cells = [bruhat_cell(G.matrices[block[0]].tolist(), p) for block in partition.blocks]
    if len(set(cells)) != H.dim:
        return Verdict.fails(check, {"stage": "bruhat cells", "cells": [w.label for w in cells]})
    new_index = [H.index[w] for w in cells]
    matched = induced.relabeled(new_index, labels=[g.label for g in H.basis])

    dim = H.dim
    identities = 0
    for g, h, k in product(range(dim), repeat=3):
        left, right = matched.mult.get(g, h, k), target.mult.get(g, h, k)
        identities += 1
        if left != right:
            return Verdict.fails(check, {"stage": "structure constants",
                                         "triple": [target.label(g), target.label(h), target.label(k)],
                                         "induced": left, "hecke": right})
    if not matched.same_structure(target):
        return Verdict.fails(check, {"stage": "coalgebra structure",
                                     "reason": "comultiplication, counit or involutions differ"})
    iso = {f"B{b}": cells[b].label for b in range(dim)}
    sizes = {cells[b].label: len(partition.blocks[b]) for b in range(dim)}
    logger.info(f"iwahori_check({n}, {p}): {identities} structure identities match")
    return Verdict.holds(check, notes=f"strict dilation of H_{n}({p}) into the group bialgebra of GL_{n}(F_{p})",
                         payload={"identities": identities, "isomorphism": iso, "block_sizes": sizes,
                                  "induced": matched})
