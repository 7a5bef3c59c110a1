# posalg/semigroups.py

"""
Finite groups and inverse semigroups, and the bialgebras they linearize to.
"""

import logging
from fractions import Fraction
from itertools import combinations, permutations, product
from math import gcd, isqrt

import numpy as np
from sympy import factorint
from sympy.utilities.iterables import partitions

from .algebra import dual, group_like_algebra
from .config import (CATALOG_GROUP_MAX_ORDER, CATALOG_SEMIGROUP_MAX_N, SYMMETRIC_INVERSE_MAX_N,
                     SYMMETRIC_MAX_N, get_group_size_cap)
from .exceptions import (NotAssociativeError, NotAutomorphismError, NotInverseSemigroupError, NotSubgroupError,
                         SizeCapError, SplittingError, StructureError)
from .linalg import EchelonBasis, nullspace, solve
from .models import Verdict
from .splitting import dual_basis, split_commutative, splits_over_rationals

logger = logging.getLogger('posalg.semigroups')


class FiniteMonoid:
    """A finite semigroup given by its multiplication table, with optional unit and zero"""

    def __init__(self, table, unit=None, zero=None, labels=None, name=None, elements=None):
        """
        Initialize and validate a multiplication table

        Args:
            table (array-like): n×n indices, table[a][b] = index of ab
            unit (int, optional): Index of a two-sided identity
            zero (int, optional): Index of a two-sided absorbing element
            labels (list, optional): Element labels
            name (str, optional): Catalog name
            elements (list, optional): Concrete elements behind the indices

        Raises:
            StructureError: If the table is malformed, or unit/zero are wrong
            NotAssociativeError: If the table is not associative
        """
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise StructureError(f"multiplication table must be a nonempty square array, got {table.shape}")
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise StructureError("multiplication table entry out of range")
        self.size = n
        self.table = table
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if len(self.labels) != n:
            raise StructureError(f"expected {n} labels, got {len(self.labels)}")
        self.name = name
        self.elements = elements
        self._check_associative()
        everything = np.arange(n)
        if unit is not None and not (np.array_equal(table[unit], everything)
                                     and np.array_equal(table[:, unit], everything)):
            raise StructureError(f"{self.labels[unit]} is not a two-sided identity")
        if zero is not None and not (np.all(table[zero] == zero) and np.all(table[:, zero] == zero)):
            raise StructureError(f"{self.labels[zero]} is not a two-sided zero")
        self.unit = unit
        self.zero = zero

    def _check_associative(self):
        T = self.table
        columns = np.arange(self.size)[None, :]
        for a in range(self.size):
            # row a of (ab)c and of a(bc), indexed by (b, c)
            left = T[T[a][:, None], columns]
            right = T[a][T]
            bad = np.argwhere(left != right)
            if bad.size:
                b, c = (int(v) for v in bad[0])
                raise NotAssociativeError(self.labels[a], self.labels[b], self.labels[c])

    def mul(self, a, b):
        return int(self.table[a, b])

    def find_unit(self):
        everything = np.arange(self.size)
        for e in range(self.size):
            if np.array_equal(self.table[e], everything) and np.array_equal(self.table[:, e], everything):
                return e
        return None

    def idempotents(self):
        return [a for a in range(self.size) if self.table[a, a] == a]

    def is_group(self):
        if self.unit is None:
            return False
        return all(np.any(self.table[a] == self.unit) for a in range(self.size))

    def to_dict(self, inv=None):
        out = {"size": self.size}
        if self.unit is not None:
            out["unit"] = self.unit
        if self.zero is not None:
            out["zero"] = self.zero
        out["table"] = self.table.tolist()
        if inv is not None:
            out["inv"] = list(inv)
        out["labels"] = list(self.labels)
        return out

    def __repr__(self):
        return f"FiniteMonoid(name={self.name}, size={self.size})"


class InverseSemigroup:
    """A FiniteMonoid in which every element has a unique generalized inverse"""

    def __init__(self, base, inv):
        """
        Args:
            base (FiniteMonoid): The table
            inv (list): a -> index of a*

        Raises:
            NotInverseSemigroupError: If inv is not the inverse map of an inverse semigroup
        """
        T = base.table
        inv = [int(v) for v in inv]
        for a in range(base.size):
            b = inv[a]
            if inv[b] != a:
                raise NotInverseSemigroupError(f"inv(inv({base.labels[a]})) != {base.labels[a]}")
            if T[T[a, b], a] != a or T[T[b, a], b] != b:
                raise NotInverseSemigroupError(f"{base.labels[b]} is not an inverse of {base.labels[a]}")
        idempotents = base.idempotents()
        for e, f in combinations(idempotents, 2):
            if T[e, f] != T[f, e]:
                raise NotInverseSemigroupError(
                    f"idempotents {base.labels[e]} and {base.labels[f]} do not commute")
        self.base = base
        self.inv = inv

    @property
    def size(self):
        return self.base.size

    @property
    def name(self):
        return self.base.name

    @property
    def labels(self):
        return self.base.labels

    def __repr__(self):
        return f"InverseSemigroup(name={self.base.name}, size={self.base.size})"


def is_inverse(M):
    """
    Decide whether a finite semigroup is an inverse semigroup

    Args:
        M (FiniteMonoid): Table to test

    Returns:
        Verdict: Holds with the inverse map as payload, or Fails with an element
            lacking a unique generalized inverse or two non-commuting idempotents
    """
    check = "is_inverse"
    T = M.table
    everything = np.arange(M.size)
    inv = []
    for a in range(M.size):
        # b with aba = a and bab = b
        candidates = np.flatnonzero((T[T[a], a] == a) & (T[T[:, a], everything] == everything))
        if candidates.size == 0:
            return Verdict.fails(check, {"element": M.labels[a], "reason": "no generalized inverse"})
        if candidates.size > 1:
            return Verdict.fails(check, {"element": M.labels[a], "reason": "generalized inverse not unique",
                                         "inverses": [M.labels[int(b)] for b in candidates[:2]]})
        inv.append(int(candidates[0]))
    for e, f in combinations(M.idempotents(), 2):
        if T[e, f] != T[f, e]:
            return Verdict.fails(check, {"reason": "idempotents do not commute",
                                         "idempotents": [M.labels[e], M.labels[f]]})
    return Verdict.holds(check, payload=inv)


def as_inverse_semigroup(M):
    """Wrap a table as an InverseSemigroup, raising when it is not one"""
    if isinstance(M, InverseSemigroup):
        return M
    verdict = is_inverse(M)
    if not verdict:
        raise NotInverseSemigroupError(f"{M.name or 'table'} is not an inverse semigroup: {verdict.witness}")
    return InverseSemigroup(M, verdict.payload)


# -- groups --------------------------------------------------------------------

def invariant_factors(factors):
    """
    Invariant-factor form m_1 | m_2 | ... of a product of cyclic groups

    Args:
        factors (list of int): Orders of the cyclic factors

    Returns:
        list of int: Nontrivial invariant factors, ascending
    """
    powers = {}
    for m in factors:
        if m < 1:
            raise ValueError(f"cyclic factor must be positive, got {m}")
        for p, e in factorint(m).items():
            powers.setdefault(p, []).append(e)
    length = max((len(v) for v in powers.values()), default=0)
    out = [1] * length
    for p, exponents in powers.items():
        for position, e in enumerate(sorted(exponents, reverse=True)):
            out[length - 1 - position] *= p ** e
    return [m for m in out if m > 1]


def abelian_types(order):
    """
    All abelian groups of a given order, as invariant-factor lists

    Cyclic first, then by number of factors and lexicographically.
    """
    per_prime = []
    for p, e in sorted(factorint(order).items()):
        options = []
        for part in partitions(e):
            exponents = sorted((k for k, mult in part.items() for _ in range(mult)), reverse=True)
            options.append([p ** k for k in exponents])
        per_prime.append(options)
    types = set()
    for choice in product(*per_prime):
        types.add(tuple(invariant_factors([m for powers in choice for m in powers])))
    return sorted((list(t) for t in types), key=lambda t: (len(t), t))


class GroupSpec:
    """Catalog address of a group: kind plus parameters"""

    KINDS = ("cyclic", "abelian", "symmetric", "alternating", "dihedral", "dicyclic",
             "direct_product", "table")

    def __init__(self, kind, params=None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown group kind {kind!r}")
        self.kind = kind
        self.params = params

    @classmethod
    def parse(cls, text):
        """
        Parse 'cyclic:4', 'abelian:2,2', 'symmetric:3', 'dihedral:4', 'dicyclic:2', 'alternating:4'
        """
        kind, _, rest = text.partition(":")
        if kind not in cls.KINDS or kind in ("direct_product", "table") or not rest:
            raise ValueError(f"cannot parse group spec {text!r}")
        values = [int(v) for v in rest.split(",")]
        if kind == "abelian":
            return cls(kind, values)
        if len(values) != 1:
            raise ValueError(f"group kind {kind} takes one parameter")
        return cls(kind, values[0])

    @property
    def name(self):
        if self.kind == "abelian":
            return "abelian:" + ",".join(str(m) for m in self.params)
        if self.kind == "direct_product":
            return "x".join(spec.name for spec in self.params)
        if self.kind == "table":
            return "table"
        return f"{self.kind}:{self.params}"

    def __eq__(self, other):
        return isinstance(other, GroupSpec) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"GroupSpec({self.name})"


def _check_size(what, size):
    cap = get_group_size_cap()
    if size > cap:
        raise SizeCapError(what, size, cap)


def _from_elements(elements, multiply, labels, name):
    index = {g: i for i, g in enumerate(elements)}
    table = [[index[multiply(a, b)] for b in elements] for a in elements]
    return FiniteMonoid(table, unit=0, labels=labels, name=name, elements=list(elements))


def compose(a, b):
    """(ab)(i) = a(b(i)) on one-line permutations"""
    return tuple(a[i] for i in b)


def cycle_label(perm):
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        cycles.append("(" + " ".join(str(i + 1) for i in cycle) + ")")
    return "".join(cycles) or "()"


def _sign(perm):
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def _abelian(factors, name):
    factors = invariant_factors(factors)
    elements = list(product(*(range(m) for m in factors)))
    _check_size("abelian group", len(elements))

    def add(a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, factors))

    if len(factors) == 1:
        labels = [str(g[0]) for g in elements]
    else:
        labels = ["(" + ",".join(map(str, g)) + ")" for g in elements]
    group = _from_elements(elements, add, labels, name)
    group.factors = factors
    return group


def build_group(spec):
    """
    Build the multiplication table of a catalog group

    Args:
        spec (GroupSpec or str): Group address

    Returns:
        FiniteMonoid: Table with unit at index 0 and labels

    Raises:
        SizeCapError: If the group exceeds the configured size cap
    """
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    kind, params = spec.kind, spec.params
    if kind == "cyclic":
        if params < 1:
            raise ValueError(f"cyclic order must be positive, got {params}")
        return _abelian([params], spec.name)
    if kind == "abelian":
        return _abelian(params, spec.name)
    if kind in ("symmetric", "alternating"):
        n = params
        if not 1 <= n <= SYMMETRIC_MAX_N:
            raise SizeCapError("symmetric degree", n, SYMMETRIC_MAX_N)
        elements = [p for p in permutations(range(n)) if kind == "symmetric" or _sign(p) == 1]
        _check_size(f"{kind} group", len(elements))
        return _from_elements(elements, compose, [cycle_label(p) for p in elements], spec.name)
    if kind == "dihedral":
        n = params
        if n < 1:
            raise ValueError(f"dihedral parameter must be positive, got {n}")
        _check_size("dihedral group", 2 * n)
        elements = [(k, e) for e in range(2) for k in range(n)]

        def rotate_reflect(a, b):
            (k, e), (l, f) = a, b
            return ((k + (l if e == 0 else -l)) % n, (e + f) % 2)

        labels = [f"r^{k}" + ("s" if e else "") for k, e in elements]
        return _from_elements(elements, rotate_reflect, labels, spec.name)
    if kind == "dicyclic":
        m = params
        if m < 2:
            raise ValueError(f"dicyclic parameter must be at least 2, got {m}")
        _check_size("dicyclic group", 4 * m)
        elements = [(k, e) for e in range(2) for k in range(2 * m)]

        def dicyclic(a, b):
            (k, e), (l, f) = a, b
            if e == 0:
                return ((k + l) % (2 * m), f)
            if f == 0:
                return ((k - l) % (2 * m), 1)
            return ((k - l + m) % (2 * m), 0)

        labels = [f"a^{k}" + ("x" if e else "") for k, e in elements]
        return _from_elements(elements, dicyclic, labels, spec.name)
    if kind == "direct_product":
        parts = [build_group(s) for s in params]
        sizes = [g.size for g in parts]
        _check_size("direct product", int(np.prod(sizes)))
        elements = list(product(*(range(s) for s in sizes)))

        def componentwise(a, b):
            return tuple(g.mul(x, y) for g, x, y in zip(parts, a, b))

        labels = ["(" + ",".join(g.labels[x] for g, x in zip(parts, e)) + ")" for e in elements]
        return _from_elements(elements, componentwise, labels, spec.name)
    if kind == "table":
        table = np.asarray(params, dtype=np.int64)
        _check_size("group table", table.shape[0])
        group = FiniteMonoid(table, name="table")
        unit = group.find_unit()
        group.unit = unit
        if unit is None or not group.is_group():
            raise StructureError("table is not a group")
        return group
    raise ValueError(f"unknown group kind {kind!r}")


def group_inverse(G):
    T = G.table
    return [int(np.flatnonzero(T[a] == G.unit)[0]) for a in range(G.size)]


def group_catalog(max_order=CATALOG_GROUP_MAX_ORDER, abelian_only=False, extra=()):
    """
    Catalog groups up to an order bound, in deterministic order

    Per order: abelian groups (cyclic first), then dihedral, dicyclic,
    symmetric and alternating members.

    Args:
        max_order (int): Largest group order
        abelian_only (bool): Skip the nonabelian families
        extra (iterable): Further GroupSpecs appended at the end

    Returns:
        list of GroupSpec
    """
    specs = []
    for order in range(1, max_order + 1):
        for factors in abelian_types(order):
            specs.append(GroupSpec("cyclic", factors[0]) if len(factors) == 1
                         else GroupSpec("abelian", factors) if factors else GroupSpec("cyclic", 1))
        if abelian_only:
            continue
        if order % 2 == 0 and order // 2 >= 3:
            specs.append(GroupSpec("dihedral", order // 2))
        if order % 4 == 0 and order // 4 >= 2:
            specs.append(GroupSpec("dicyclic", order // 4))
        if order == 6:
            specs.append(GroupSpec("symmetric", 3))
        if order == 12:
            specs.append(GroupSpec("alternating", 4))
        if order == 24:
            specs.append(GroupSpec("symmetric", 4))
    specs.extend(extra)
    # D_3 is S_3 as an abstract group, keep the symmetric form
    return [s for s in specs if s.name != "dihedral:3"]


# -- inverse semigroups --------------------------------------------------------

def _partial_label(f):
    pairs = [f"{i + 1}>{v + 1}" for i, v in enumerate(f) if v is not None]
    return "{" + ",".join(pairs) + "}"


def symmetric_inverse_semigroup(n):
    """
    I_n: partial bijections of an n-element set under composition

    Elements are tuples with None outside the domain, ordered by rank; the
    empty map is the zero and the identity the unit.

    Args:
        n (int): Size of the underlying set, 1..4

    Returns:
        InverseSemigroup
    """
    if not 1 <= n <= SYMMETRIC_INVERSE_MAX_N:
        raise SizeCapError("symmetric inverse semigroup degree", n, SYMMETRIC_INVERSE_MAX_N)
    elements = []
    for k in range(n + 1):
        for domain in combinations(range(n), k):
            for image in permutations(range(n), k):
                f = [None] * n
                for x, y in zip(domain, image):
                    f[x] = y
                elements.append(tuple(f))
    elements.sort(key=lambda f: (sum(v is not None for v in f), tuple(-1 if v is None else v for v in f)))
    _check_size("symmetric inverse semigroup", len(elements))
    index = {f: i for i, f in enumerate(elements)}

    def then(a, b):
        return tuple(None if b[x] is None else a[b[x]] for x in range(n))

    table = [[index[then(a, b)] for b in elements] for a in elements]
    labels = ["0" if all(v is None for v in f) else _partial_label(f) for f in elements]
    identity = index[tuple(range(n))]
    labels[identity] = "1"
    base = FiniteMonoid(table, unit=identity, zero=0, labels=labels, name=f"sym_inverse:{n}",
                        elements=elements)
    inv = []
    for f in elements:
        g = [None] * n
        for x, y in enumerate(f):
            if y is not None:
                g[y] = x
        inv.append(index[tuple(g)])
    return InverseSemigroup(base, inv)


def matrix_unit_semigroup(n):
    """
    The n² matrix units e_ij together with zero, e_ij e_kl = δ_jk e_il

    Args:
        n (int): Matrix size

    Returns:
        InverseSemigroup: Unital only for n = 1
    """
    if n < 1:
        raise ValueError(f"matrix unit size must be positive, got {n}")
    _check_size("matrix unit semigroup", n * n + 1)
    units = [(i, j) for i in range(n) for j in range(n)]
    zero = len(units)
    index = {u: k for k, u in enumerate(units)}
    table = [[zero] * (zero + 1) for _ in range(zero + 1)]
    for (i, j), a in index.items():
        for (k, l), b in index.items():
            if j == k:
                table[a][b] = index[(i, l)]
    labels = [f"e{i + 1}{j + 1}" for i, j in units] + ["0"]
    base = FiniteMonoid(table, unit=0 if n == 1 else None, zero=zero, labels=labels,
                        name=f"matrix_units:{n}", elements=units + [None])
    inv = [index[(j, i)] for i, j in units] + [zero]
    return InverseSemigroup(base, inv)


def semigroup_catalog(max_n=CATALOG_SEMIGROUP_MAX_N):
    """I_n and the matrix-unit semigroups for n ≤ max_n"""
    members = [symmetric_inverse_semigroup(n) for n in range(1, min(max_n, SYMMETRIC_INVERSE_MAX_N) + 1)]
    members.extend(matrix_unit_semigroup(n) for n in range(1, max_n + 1))
    return members


def involutive_catalog(max_order=CATALOG_GROUP_MAX_ORDER, semigroup_max_n=CATALOG_SEMIGROUP_MAX_N):
    """
    Names of the catalog members whose bialgebras are involutive

    Groups up to max_order, S_4 even when it lies beyond the bound, then I_n
    and the matrix-unit semigroups up to semigroup_max_n.
    """
    specs = group_catalog(max_order)
    if max_order < 24:
        specs.append(GroupSpec("symmetric", 4))
    return [spec.name for spec in specs] + [S.name for S in semigroup_catalog(semigroup_max_n)]


def parse_semigroup_spec(text):
    """'sym_inverse:2' or 'matrix_units:2'"""
    kind, _, rest = text.partition(":")
    if kind == "sym_inverse":
        return symmetric_inverse_semigroup(int(rest))
    if kind == "matrix_units":
        return matrix_unit_semigroup(int(rest))
    raise ValueError(f"cannot parse semigroup spec {text!r}")


def build_member(text):
    """Build a catalog member (group or inverse semigroup) from its name"""
    kind = text.partition(":")[0]
    if kind in ("sym_inverse", "matrix_units"):
        return parse_semigroup_spec(text)
    group = build_group(text)
    return InverseSemigroup(group, group_inverse(group))


# -- bialgebras ----------------------------------------------------------------

def _algebra_unit(M):
    """Unit of the semigroup algebra, solved for when the table has no unit"""
    if M.unit is not None:
        return [Fraction(1) if i == M.unit else Fraction(0) for i in range(M.size)]
    T = M.table
    columns = []
    for s in range(M.size):
        column = {}
        for b in range(M.size):
            column[(0, b, int(T[s, b]))] = Fraction(1)
            column[(1, b, int(T[b, s]))] = Fraction(1)
        columns.append(column)
    target = {}
    for b in range(M.size):
        target[(0, b, b)] = Fraction(1)
        target[(1, b, b)] = Fraction(1)
    solution = solve(columns, target)
    if solution is None:
        raise StructureError(f"the algebra of {M.name or 'the semigroup'} has no unit")
    return [solution.get(i, Fraction(0)) for i in range(M.size)]


def semigroup_bialgebra(S):
    """
    Linearize an inverse semigroup: Δ(s) = s⊗s, ε(s) = 1, ♯(s) = s*, ♭ = conjugation

    Semigroups without unit produce a weakened bialgebra whose unit is the
    algebra unit of the semigroup algebra.

    Args:
        S (InverseSemigroup or FiniteMonoid): The semigroup

    Returns:
        TwoAlgebra

    Raises:
        NotInverseSemigroupError: If S is not an inverse semigroup
    """
    S = as_inverse_semigroup(S)
    M = S.base
    unit = _algebra_unit(M)
    weakened = M.unit is None
    if weakened:
        logger.info(f"{M.name}: no unit element, building a weakened bialgebra")
    return group_like_algebra(M.size, M.mul, unit, S.inv, labels=M.labels, weakened=weakened)


def dual_semigroup_bialgebra(S):
    """Functions on S: pointwise product, (Δf)(s, t) = f(st)"""
    return dual(semigroup_bialgebra(S))


def center_basis(A):
    """Basis of the center {z : z x_b = x_b z for every b}"""
    rows = {}
    for s in range(A.dim):
        for b in range(A.dim):
            for c, v in A.mult.pair(s, b).items():
                row = rows.setdefault((b, c), {})
                row[s] = row.get(s, 0) + v
            for c, v in A.mult.pair(b, s).items():
                row = rows.setdefault((b, c), {})
                row[s] = row.get(s, 0) - v
    equations = [{k: v for k, v in row.items() if v} for row in rows.values()]
    return nullspace(equations, A.dim)


def wedderburn_dims(A):
    """
    Dimensions of the simple blocks of A ⊗ ℂ

    Splits the center over ℚ into fields; a field component e of degree k
    whose two-sided block e·A has rank m contributes k blocks of dimension m/k.

    Args:
        A (TwoAlgebra): Semisimple algebra

    Returns:
        list of int: Block dimensions d², descending, summing to dim A

    Raises:
        SplittingError: If the center does not split into fields
    """
    center = center_basis(A)
    components = split_commutative(A.multiply, A.unit_vector(), center)
    dims = []
    for component in components:
        block = EchelonBasis()
        for b in range(A.dim):
            block.add(A.multiply(component.idempotent, {b: Fraction(1)}))
        m, k = len(block), component.degree
        if m % k or isqrt(m // k) ** 2 != m // k:
            raise SplittingError(f"block of rank {m} over a field of degree {k} is not a matrix block")
        dims.extend([m // k] * k)
    logger.debug(f"center of dimension {len(center)}, blocks {dims}")
    return sorted(dims, reverse=True)


def almost_antipode_check(A):
    """
    Convolutions of the identity with the inverse map S̃: a ↦ a* on a semigroup bialgebra

    Holds iff (id⋆S̃)(a) = a·a* and (S̃⋆id)(a) = a*·a, both convolutions are
    idempotent operators, and their images lie in the span of the idempotents.

    Args:
        A (TwoAlgebra): Output of semigroup_bialgebra

    Returns:
        Verdict: payload has both convolution maps and the common image
    """
    check = "almost_antipode_check"
    inverse = A.invol.as_permutation()
    if inverse is None:
        raise StructureError("the involution is not induced by an inverse map")
    n = A.dim

    def convolve(a, right_inverse):
        out = {}
        for (j, k), d in A.comult.first(a).items():
            left = {j: d} if right_inverse else {inverse[j]: d}
            right = {inverse[k]: Fraction(1)} if right_inverse else {k: Fraction(1)}
            for c, v in A.multiply(left, right).items():
                out[c] = out.get(c, 0) + v
        return {c: v for c, v in out.items() if v}

    idempotents = [a for a in range(n) if A.mult.pair(a, a) == {a: Fraction(1)}]
    maps = {}
    for name, right_inverse in (("id*S", True), ("S*id", False)):
        images = [convolve(a, right_inverse) for a in range(n)]
        for a in range(n):
            expected = A.mult.pair(a, inverse[a]) if right_inverse else A.mult.pair(inverse[a], a)
            if images[a] != expected:
                return Verdict.fails(check, {"map": name, "element": A.label(a),
                                             "value": {A.label(c): v for c, v in images[a].items()}})
            twice = {}
            for c, v in images[a].items():
                for d, w in images[c].items():
                    twice[d] = twice.get(d, 0) + v * w
            if {d: w for d, w in twice.items() if w} != images[a]:
                return Verdict.fails(check, {"map": name, "element": A.label(a), "reason": "not idempotent"})
            outside = [c for c in images[a] if c not in idempotents]
            if outside:
                return Verdict.fails(check, {"map": name, "element": A.label(a),
                                             "reason": "image leaves the span of idempotents",
                                             "component": A.label(outside[0])})
        maps[name] = images
    image = sorted({c for images in maps.values() for value in images for c in value})
    payload = {name: {A.label(a): {A.label(c): v for c, v in value.items()} for a, value in enumerate(images)}
               for name, images in maps.items()}
    payload["image"] = [A.label(c) for c in image]
    unit = A.unit_vector()
    antipode = all(images[a] == unit for images in maps.values() for a in range(n))
    notes = "both convolutions equal ε(·)·1: a true antipode" if antipode else \
        "convolutions project onto the subalgebra of idempotents"
    return Verdict.holds(check, notes=notes, payload=payload)


def recover_semigroup(A):
    """
    Reconstruct the inverse semigroup behind a cocommutative semisimple bialgebra

    The primitive idempotents f_s of the commutative dual are the points of
    the semigroup; their dual basis g_s are the grouplike elements of A, and
    the product is read off from f_u(g_s g_t) = (Δ′f_u)(g_s ⊗ g_t).

    Args:
        A (TwoAlgebra): Cocommutative bialgebra

    Returns:
        InverseSemigroup: Elements labelled by A's basis labels when the grouplikes are basis vectors

    Raises:
        SplittingError: If the dual does not split into rational points
        StructureError: If the grouplikes do not multiply to grouplikes
    """
    if not A.is_cocommutative():
        raise StructureError("recovery needs a cocommutative bialgebra")
    D = dual(A)
    components = split_commutative(D.multiply, D.unit_vector(), [{i: Fraction(1)} for i in range(D.dim)])
    if not splits_over_rationals(components):
        raise SplittingError("the dual algebra does not split over the rationals")
    points = [c.idempotent for c in components]
    grouplikes = dual_basis(points, A.dim)

    def position(g):
        if len(g) == 1 and next(iter(g.values())) == 1:
            return next(iter(g))
        return A.dim + min(g)

    order = sorted(range(len(grouplikes)), key=lambda s: position(grouplikes[s]))
    points = [points[s] for s in order]
    grouplikes = [grouplikes[s] for s in order]
    labels = []
    for s, g in enumerate(grouplikes):
        labels.append(A.label(next(iter(g))) if len(g) == 1 else f"g{s}")

    n = len(grouplikes)
    table = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        for t in range(n):
            product_ = A.multiply(grouplikes[s], grouplikes[t])
            values = [sum((f.get(a, 0) * c for a, c in product_.items()), Fraction(0)) for f in points]
            support = [u for u, v in enumerate(values) if v]
            if len(support) != 1 or values[support[0]] != 1:
                raise StructureError(f"g{s}·g{t} is not a grouplike element")
            table[s, t] = support[0]
    M = FiniteMonoid(table, labels=labels, name="recovered")
    M.unit = M.find_unit()
    zeros = [z for z in range(n) if np.all(table[z] == z) and np.all(table[:, z] == z)]
    M.zero = zeros[0] if zeros else None
    return as_inverse_semigroup(M)


def wagner_preston(S):
    """
    Right-translation representation a ↦ (x ↦ x·a on S·a*) into partial bijections of S

    Args:
        S (InverseSemigroup): Semigroup to represent

    Returns:
        list of tuple: Partial bijection per element, None outside the domain

    Raises:
        StructureError: If the representation is not an involution-preserving embedding
    """
    T = S.base.table
    n = S.size
    maps = []
    for a in range(n):
        a_star = S.inv[a]
        domain = [x for x in range(n) if T[T[x, a_star], a] == x]
        maps.append(tuple(int(T[x, a]) if x in domain else None for x in range(n)))
    if len(set(maps)) != n:
        raise StructureError("right-translation representation is not injective")
    for a in range(n):
        inverse = [None] * n
        for x, y in enumerate(maps[a]):
            if y is not None:
                inverse[y] = x
        if tuple(inverse) != maps[S.inv[a]]:
            raise StructureError(f"representation does not preserve the involution at {S.labels[a]}")
        for b in range(n):
            # x ↦ (x a) b
            composed = tuple(None if maps[a][x] is None else maps[b][maps[a][x]] for x in range(n))
            if composed != maps[int(T[a, b])]:
                raise StructureError("right-translation representation is not a homomorphism")
    return maps


# -- subgroups and automorphisms -------------------------------------------------

def generated_subgroup(G, generators):
    """Closure of a set of elements under the product (a subgroup in a finite group)"""
    members = {G.unit} | set(generators)
    frontier = list(members)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(members):
                for c in (G.mul(a, b), G.mul(b, a)):
                    if c not in members:
                        members.add(c)
                        nxt.append(c)
        frontier = nxt
    return frozenset(members)


def subgroups(G):
    """
    All subgroups, as joins of cyclic subgroups

    Returns:
        list of frozenset: Ordered by (size, sorted members)
    """
    found = {generated_subgroup(G, [g]) for g in range(G.size)}
    frontier = set(found)
    while frontier:
        nxt = set()
        for H in frontier:
            for K in list(found):
                J = generated_subgroup(G, H | K)
                if J not in found:
                    found.add(J)
                    nxt.add(J)
        frontier = nxt
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def check_subgroup(G, H):
    """
    Raises:
        NotSubgroupError: If H is not closed under product and inverse
    """
    H = set(H)
    if G.unit not in H:
        raise NotSubgroupError("subset does not contain the identity")
    inverse = group_inverse(G)
    for a in H:
        if inverse[a] not in H:
            raise NotSubgroupError(f"{G.labels[a]} has its inverse outside the subset")
        for b in H:
            if G.mul(a, b) not in H:
                raise NotSubgroupError(f"{G.labels[a]}·{G.labels[b]} lies outside the subset")
    return frozenset(H)


def is_automorphism(G, perm):
    perm = np.asarray(perm, dtype=np.int64)
    if sorted(perm.tolist()) != list(range(G.size)):
        return False
    return bool(np.array_equal(perm[G.table], G.table[perm[:, None], perm[None, :]]))


def check_automorphism(G, perm):
    """
    Raises:
        NotAutomorphismError: If perm is not an automorphism of the table
    """
    if not is_automorphism(G, perm):
        raise NotAutomorphismError(f"{list(perm)} is not an automorphism of {G.name or 'the table'}")
    return tuple(int(v) for v in perm)


def _power(G, a, k):
    result = G.unit
    for _ in range(k):
        result = G.mul(result, a)
    return result


def automorphism_generators(G):
    """
    Automorphisms from power maps x ↦ x^k and conjugations x ↦ g x g⁻¹

    Returns:
        list of tuple: Distinct non-identity automorphisms, in discovery order
    """
    exponent = 1
    for a in range(G.size):
        k, x = 1, a
        while x != G.unit:
            x = G.mul(x, a)
            k += 1
        exponent = exponent * k // gcd(exponent, k)
    identity = tuple(range(G.size))
    found = []
    for k in range(2, exponent):
        if gcd(k, exponent) != 1:
            continue
        perm = tuple(_power(G, a, k) for a in range(G.size))
        if perm != identity and perm not in found and is_automorphism(G, perm):
            found.append(perm)
    inverse = group_inverse(G)
    for g in range(G.size):
        perm = tuple(G.mul(G.mul(g, a), inverse[g]) for a in range(G.size))
        if perm != identity and perm not in found:
            found.append(perm)
    return found
