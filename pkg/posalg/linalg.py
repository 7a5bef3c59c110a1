# posalg/linalg.py

"""
Sparse exact linear algebra over ℚ.

Vectors are plain dicts ``index -> Fraction`` with zero entries removed.
``EchelonBasis`` keeps a reduced row echelon basis of the vectors added to
it, together with how each stored row combines the original vectors, which
gives membership tests, coordinates and ranks without densifying.
"""

from fractions import Fraction


def clean(vector):
    """Drop zero entries in place and return the vector"""
    for key in [k for k, v in vector.items() if v == 0]:
        del vector[key]
    return vector


def iadd_coef(target, coef, other):
    """target += coef * other, keeping target free of zeros"""
    if coef == 0:
        return target
    for key, value in other.items():
        if value == 0:
            continue
        total = target.get(key, 0) + coef * value
        if total == 0:
            target.pop(key, None)
        else:
            target[key] = total
    return target


def scaled(vector, coef):
    if coef == 0:
        return {}
    return {k: coef * v for k, v in vector.items()}


def combine(terms):
    """Sum of coef * vector over (coef, vector) pairs"""
    out = {}
    for coef, vector in terms:
        iadd_coef(out, coef, vector)
    return out


def dense(vector, dim):
    return [Fraction(vector.get(i, 0)) for i in range(dim)]


def sparse(values):
    return {i: Fraction(v) for i, v in enumerate(values) if v != 0}


def unit_vector(index):
    return {index: Fraction(1)}


class EchelonBasis:
    """
    Incrementally reduced row echelon basis

    Every stored row has a pivot with coefficient 1 and no other stored row
    has a nonzero entry in that pivot column.
    """

    def __init__(self):
        self.rows = []        # list of (pivot, row, combo)
        self._pivots = {}     # pivot -> position in rows
        self.count = 0        # vectors offered so far

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self):
        return [pivot for pivot, _, _ in self.rows]

    def reduce(self, vector):
        """
        Reduce a vector against the basis

        Returns:
            tuple: (remainder, combo) where vector = remainder + Σ combo[i] * offered_i
        """
        remainder = dict(vector)
        combo = {}
        for pivot, row, row_combo in self.rows:
            coef = remainder.get(pivot)
            if coef:
                iadd_coef(remainder, -coef, row)
                iadd_coef(combo, coef, row_combo)
        return remainder, combo

    def add(self, vector):
        """
        Offer a vector to the basis

        Returns:
            bool: True when the vector was independent of the basis
        """
        tag = self.count
        self.count += 1
        remainder, combo = self.reduce(vector)
        if not remainder:
            return False
        # remainder = vector - Σ combo * offered, record it as a combination
        own = {tag: Fraction(1)}
        iadd_coef(own, -1, combo)
        pivot = min(remainder)
        lead = remainder[pivot]
        row = scaled(remainder, 1 / lead)
        own = scaled(own, 1 / lead)
        # keep the basis fully reduced
        for position, (other_pivot, other_row, other_combo) in enumerate(self.rows):
            coef = other_row.get(pivot)
            if coef:
                iadd_coef(other_row, -coef, row)
                iadd_coef(other_combo, -coef, own)
        self._pivots[pivot] = len(self.rows)
        self.rows.append((pivot, row, own))
        return True

    def contains(self, vector):
        remainder, _ = self.reduce(vector)
        return not remainder

    def coordinates(self, vector):
        """
        Express a vector through the offered vectors

        Returns:
            dict or None: offered index -> coefficient, None if outside the span
        """
        remainder, combo = self.reduce(vector)
        if remainder:
            return None
        return combo


def rank(vectors):
    basis = EchelonBasis()
    for vector in vectors:
        basis.add(vector)
    return len(basis)


def nullspace(rows, ncols):
    """
    Basis of {x : row · x = 0 for every row}

    Args:
        rows (iterable of dict): Sparse equations over columns 0..ncols-1
        ncols (int): Number of unknowns

    Returns:
        list of dict: Sparse basis vectors of the solution space
    """
    basis = EchelonBasis()
    for row in rows:
        basis.add(row)
    pivot_rows = {pivot: row for pivot, row, _ in basis.rows}
    solutions = []
    for free in range(ncols):
        if free in pivot_rows:
            continue
        vector = {free: Fraction(1)}
        for pivot, row in pivot_rows.items():
            coef = row.get(free)
            if coef:
                vector[pivot] = -coef
        solutions.append(vector)
    return solutions


def solve(columns, target):
    """
    Find x with Σ x_j columns[j] = target

    Returns:
        dict or None: Sparse solution (one of them), None when inconsistent
    """
    basis = EchelonBasis()
    for column in columns:
        basis.add(column)
    return basis.coordinates(target)


def mat_vec(columns, x):
    """Σ x_j columns[j] for a matrix given by sparse columns"""
    return combine((coef, columns[j]) for j, coef in x.items())
