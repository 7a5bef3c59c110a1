# posalg/algebra.py

"""
Tensor-level carriers: structure tensors, antilinear maps and 2-algebras.

A 2-algebra over a distinguished basis x_0..x_{n-1} is stored as

    x_i · x_j = Σ_k mult[i, j, k] x_k
    Δ(x_i)    = Σ_{j,k} comult[i, j, k] x_j ⊗ x_k

plus the unit vector, the counit covector, the involution ♯ and the
coinvolution ♭. Scalars are rational; antilinear maps act as v ↦ M·conj(v),
which for rational coefficient vectors is v ↦ M·v.
"""

import logging
from fractions import Fraction

from .exceptions import DimensionMismatchError, StructureError
from .linalg import iadd_coef

logger = logging.getLogger('posalg.algebra')


class StructureTensor:
    """Sparse rank-3 tensor of rationals indexed (i, j, k)"""

    def __init__(self, dim, entries=()):
        """
        Initialize from (i, j, k, value) entries

        Args:
            dim (int): Dimension n; every index must be < n
            entries (iterable): (i, j, k, value) tuples; zero values are dropped

        Raises:
            DimensionMismatchError: If an index is out of range
            StructureError: If a key appears twice
        """
        if dim < 1:
            raise DimensionMismatchError(1, dim, "structure tensor")
        self.dim = dim
        table = {}
        for i, j, k, value in entries:
            for index in (i, j, k):
                if not 0 <= index < dim:
                    raise DimensionMismatchError(dim, index + 1, "structure tensor index")
            key = (i, j, k)
            if key in table:
                raise StructureError(f"duplicate structure tensor entry {key}")
            table[key] = Fraction(value)
        self._entries = {key: value for key, value in table.items() if value != 0}
        self._by_pair = None
        self._by_first = None

    @classmethod
    def from_pairs(cls, dim, pairs):
        """Build from a mapping (i, j) -> {k: value}"""
        return cls(dim, ((i, j, k, v) for (i, j), row in pairs.items() for k, v in row.items()))

    @classmethod
    def diagonal(cls, dim):
        """The grouplike comultiplication Δ(x_i) = x_i ⊗ x_i"""
        return cls(dim, ((i, i, i, 1) for i in range(dim)))

    def entries(self):
        return sorted((i, j, k, v) for (i, j, k), v in self._entries.items())

    def items(self):
        return self._entries.items()

    def get(self, i, j, k):
        return self._entries.get((i, j, k), Fraction(0))

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, StructureTensor):
            return NotImplemented
        return self.dim == other.dim and self._entries == other._entries

    def __hash__(self):
        return hash((self.dim, frozenset(self._entries.items())))

    def pair(self, i, j):
        """Coefficients over k for fixed (i, j), read-only"""
        if self._by_pair is None:
            by_pair = {}
            for (a, b, c), v in self._entries.items():
                by_pair.setdefault((a, b), {})[c] = v
            self._by_pair = by_pair
        return self._by_pair.get((i, j), {})

    def first(self, i):
        """Coefficients over (j, k) for fixed i, read-only"""
        if self._by_first is None:
            by_first = {}
            for (a, b, c), v in self._entries.items():
                by_first.setdefault(a, {})[(b, c)] = v
            self._by_first = by_first
        return self._by_first.get(i, {})

    def rotated(self, order):
        """
        Reindex the tensor: the new key is (key[order[0]], key[order[1]], key[order[2]])
        """
        return StructureTensor(
            self.dim,
            ((key[order[0]], key[order[1]], key[order[2]], v) for key, v in self._entries.items()),
        )

    def relabeled(self, new_index):
        """Apply a basis permutation old index -> new_index[old]"""
        return StructureTensor(
            self.dim,
            ((new_index[i], new_index[j], new_index[k], v) for (i, j, k), v in self._entries.items()),
        )

    def __repr__(self):
        return f"StructureTensor(dim={self.dim}, nnz={len(self._entries)})"


class AntilinearMap:
    """v ↦ M·conj(v) with a rational matrix M, stored sparsely by (row, col)"""

    def __init__(self, dim, entries):
        """
        Args:
            dim (int): Dimension n
            entries (dict or list): {(row, col): value}, or a dense n×n list of rows
        """
        self.dim = dim
        if isinstance(entries, dict):
            items = entries.items()
        else:
            if len(entries) != dim or any(len(row) != dim for row in entries):
                raise DimensionMismatchError(dim, len(entries), "antilinear map")
            items = (((r, c), v) for r, row in enumerate(entries) for c, v in enumerate(row))
        table = {}
        for (r, c), v in items:
            if not (0 <= r < dim and 0 <= c < dim):
                raise DimensionMismatchError(dim, max(r, c) + 1, "antilinear map index")
            v = Fraction(v)
            if v != 0:
                table[(r, c)] = v
        self._entries = table
        self._columns = None

    @classmethod
    def identity(cls, dim):
        return cls(dim, {(i, i): 1 for i in range(dim)})

    @classmethod
    def from_permutation(cls, perm):
        """The map x_i ↦ x_{perm[i]} (with conjugated coefficients)"""
        return cls(len(perm), {(perm[i], i): 1 for i in range(len(perm))})

    @property
    def matrix(self):
        rows = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for (r, c), v in self._entries.items():
            rows[r][c] = v
        return rows

    def column(self, c):
        if self._columns is None:
            columns = {}
            for (r, col), v in self._entries.items():
                columns.setdefault(col, {})[r] = v
            self._columns = columns
        return self._columns.get(c, {})

    def apply(self, vector):
        out = {}
        for c, coef in vector.items():
            iadd_coef(out, coef, self.column(c))
        return out

    def transpose(self):
        return AntilinearMap(self.dim, {(c, r): v for (r, c), v in self._entries.items()})

    def as_permutation(self):
        """
        Returns:
            list or None: perm with M x_i = x_{perm[i]} when M is a permutation matrix
        """
        perm = [None] * self.dim
        for c in range(self.dim):
            column = self.column(c)
            if len(column) != 1:
                return None
            (r, v), = column.items()
            if v != 1:
                return None
            perm[c] = r
        if len(set(perm)) != self.dim:
            return None
        return perm

    def squares_to_identity(self):
        for c in range(self.dim):
            if self.apply(self.column(c)) != {c: Fraction(1)}:
                return False
        return True

    def relabeled(self, new_index):
        return AntilinearMap(self.dim, {(new_index[r], new_index[c]): v for (r, c), v in self._entries.items()})

    def __eq__(self, other):
        if not isinstance(other, AntilinearMap):
            return NotImplemented
        return self.dim == other.dim and self._entries == other._entries

    def __hash__(self):
        return hash((self.dim, frozenset(self._entries.items())))

    def __repr__(self):
        perm = self.as_permutation()
        if perm is not None:
            return f"AntilinearMap(permutation={perm})"
        return f"AntilinearMap(dim={self.dim}, nnz={len(self._entries)})"


class TwoAlgebra:
    """
    A 2-algebra A(δ, 1, ♯, Δ, ε, ♭) in a distinguished basis

    Values are treated as immutable once built; all verifiers are pure.
    """

    def __init__(self, mult, unit, comult, counit, invol, coinvol, labels=None, weakened=False):
        """
        Args:
            mult (StructureTensor): Multiplication constants
            unit (list): Coefficients of the algebra unit
            comult (StructureTensor): Comultiplication constants
            counit (list): Values of ε on the basis
            invol (AntilinearMap): ♯
            coinvol (AntilinearMap): ♭
            labels (list, optional): Basis labels
            weakened (bool): Built from a semigroup without unit

        Raises:
            DimensionMismatchError: If components disagree on dimension
        """
        dim = mult.dim
        for what, size in (("comult", comult.dim), ("unit", len(unit)), ("counit", len(counit)),
                           ("invol", invol.dim), ("coinvol", coinvol.dim)):
            if size != dim:
                raise DimensionMismatchError(dim, size, what)
        if labels is not None and len(labels) != dim:
            raise DimensionMismatchError(dim, len(labels), "labels")
        self.dim = dim
        self.mult = mult
        self.unit = [Fraction(v) for v in unit]
        self.comult = comult
        self.counit = [Fraction(v) for v in counit]
        self.invol = invol
        self.coinvol = coinvol
        self.labels = list(labels) if labels is not None else None
        self.weakened = weakened

    # -- vectors -----------------------------------------------------------

    def label(self, i):
        return self.labels[i] if self.labels else f"x{i}"

    def unit_vector(self):
        return {i: v for i, v in enumerate(self.unit) if v != 0}

    def multiply(self, left, right):
        """Product of two sparse vectors"""
        out = {}
        for i, a in left.items():
            for j, b in right.items():
                iadd_coef(out, a * b, self.mult.pair(i, j))
        return out

    def comultiply(self, vector):
        """Δ of a sparse vector, as a dict (j, k) -> coefficient"""
        out = {}
        for i, a in vector.items():
            iadd_coef(out, a, self.comult.first(i))
        return out

    def counit_of(self, vector):
        return sum((self.counit[i] * a for i, a in vector.items()), Fraction(0))

    def tensor_multiply(self, left, right):
        """Product in A⊗A of two dicts (j, k) -> coefficient"""
        out = {}
        for (a, b), x in left.items():
            for (c, d), y in right.items():
                first = self.mult.pair(a, c)
                second = self.mult.pair(b, d)
                if not first or not second:
                    continue
                for k1, v1 in first.items():
                    for k2, v2 in second.items():
                        key = (k1, k2)
                        total = out.get(key, 0) + x * y * v1 * v2
                        if total:
                            out[key] = total
                        else:
                            out.pop(key, None)
        return out

    def trace_of_left(self, k):
        """Trace of left multiplication by x_k"""
        return sum((self.mult.get(k, m, m) for m in range(self.dim)), Fraction(0))

    # -- predicates --------------------------------------------------------

    def is_commutative(self):
        return all(self.mult.pair(i, j) == self.mult.pair(j, i)
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    def is_cocommutative(self):
        return all(self.comult.get(i, j, k) == v for (i, k, j), v in self.comult.items())

    def has_grouplike_basis(self):
        """Δ(x_i) = x_i ⊗ x_i and ε(x_i) = 1 for every basis element"""
        return self.comult == StructureTensor.diagonal(self.dim) and all(c == 1 for c in self.counit)

    # -- structure ---------------------------------------------------------

    def relabeled(self, new_index, labels=None):
        """Reorder the basis: old basis element i becomes new element new_index[i]"""
        dim = self.dim
        unit = [Fraction(0)] * dim
        counit = [Fraction(0)] * dim
        for i in range(dim):
            unit[new_index[i]] = self.unit[i]
            counit[new_index[i]] = self.counit[i]
        if labels is None and self.labels is not None:
            labels = [None] * dim
            for i in range(dim):
                labels[new_index[i]] = self.labels[i]
        return TwoAlgebra(self.mult.relabeled(new_index), unit, self.comult.relabeled(new_index),
                          counit, self.invol.relabeled(new_index), self.coinvol.relabeled(new_index),
                          labels=labels, weakened=self.weakened)

    def same_structure(self, other):
        """Entrywise equality in the distinguished basis (labels ignored)"""
        return (self.dim == other.dim and self.mult == other.mult and self.unit == other.unit
                and self.comult == other.comult and self.counit == other.counit
                and self.invol == other.invol and self.coinvol == other.coinvol)

    def __eq__(self, other):
        if not isinstance(other, TwoAlgebra):
            return NotImplemented
        return self.same_structure(other)

    def __hash__(self):
        return hash((self.dim, self.mult, tuple(self.unit), self.comult, tuple(self.counit)))

    def __repr__(self):
        kind = ", weakened" if self.weakened else ""
        return f"TwoAlgebra(dim={self.dim}, mult_nnz={len(self.mult)}, comult_nnz={len(self.comult)}{kind})"


def dual(A):
    """
    The dual 2-algebra A′: transpose every structure map

    mult′[i][j][k] = comult[k][i][j], comult′[i][j][k] = mult[j][k][i],
    unit′ = counit, counit′ = unit, ♯′ = (♭)ᵀ and ♭′ = (♯)ᵀ.

    Args:
        A (TwoAlgebra): Algebra to dualize

    Returns:
        TwoAlgebra: The dual, with dual(dual(A)) equal to A entrywise
    """
    # old comult key (k, i, j) becomes (i, j, k); old mult key (j, k, i) becomes (i, j, k)
    mult = A.comult.rotated((1, 2, 0))
    comult = A.mult.rotated((2, 0, 1))
    return TwoAlgebra(mult, list(A.counit), comult, list(A.unit),
                      A.coinvol.transpose(), A.invol.transpose(),
                      labels=A.labels, weakened=A.weakened)


def group_like_algebra(dim, products, unit, inverse, labels=None, weakened=False):
    """
    Linearize a finite multiplication table into a bialgebra carrier

    Args:
        dim (int): Number of elements
        products (callable): (a, b) -> index of ab
        unit (list): Coefficients of the algebra unit
        inverse (list): a -> index of a*
        labels (list, optional): Element labels
        weakened (bool): The table has no unit element

    Returns:
        TwoAlgebra: Δ(s) = s ⊗ s, ε(s) = 1, ♯ = s ↦ s*, ♭ = coefficient conjugation
    """
    mult = StructureTensor(dim, ((a, b, products(a, b), 1) for a in range(dim) for b in range(dim)))
    return TwoAlgebra(mult, unit, StructureTensor.diagonal(dim), [1] * dim,
                      AntilinearMap.from_permutation(inverse), AntilinearMap.identity(dim),
                      labels=labels, weakened=weakened)
