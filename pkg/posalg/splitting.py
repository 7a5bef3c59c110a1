# posalg/splitting.py

"""
Splitting commutative semisimple ℚ-algebras into fields.

A generic element x of a commutative semisimple algebra C generates C, and
its minimal polynomial is a product of distinct irreducible factors f_r.
The primitive idempotents are the Chinese-remainder lifts e_r(x) with
e_r ≡ 1 mod f_r and e_r ≡ 0 mod the other factors; the component e_r C is a
field of degree deg f_r. When every factor is linear the algebra splits
over ℚ and each e_r carries an algebra character.
"""

import logging
from fractions import Fraction

from sympy import Poly, QQ, Symbol, invert

from .exceptions import SplittingError
from .linalg import EchelonBasis, combine, iadd_coef, solve
from .scalars import from_sympy, to_sympy

logger = logging.getLogger('posalg.splitting')

_x = Symbol('x')
MAX_ATTEMPTS = 12


class Component:
    """One simple factor of a commutative semisimple algebra"""

    def __init__(self, idempotent, degree, factor):
        self.idempotent = idempotent
        self.degree = degree
        self.factor = factor

    @property
    def root(self):
        """Eigenvalue of the generic element on this component (degree 1 only)"""
        if self.degree != 1:
            return None
        coeffs = self.factor.all_coeffs()
        return from_sympy(-coeffs[1] / coeffs[0])

    def __repr__(self):
        return f"Component(degree={self.degree}, idempotent={self.idempotent})"


def _generic_element(basis, attempt):
    weights = [((i + 1) * (7 * attempt + 3)) % 101 + 1 for i in range(len(basis))]
    return combine((Fraction(w), b) for w, b in zip(weights, basis))


def _minimal_polynomial(multiply, unit, x, bound):
    powers = [unit]
    echelon = EchelonBasis()
    echelon.add(unit)
    while True:
        nxt = multiply(x, powers[-1])
        coords = echelon.coordinates(nxt)
        if coords is not None:
            # x^d = Σ coords[k] x^k
            coeffs = [Fraction(1)] + [-coords.get(k, Fraction(0)) for k in range(len(powers) - 1, -1, -1)]
            return Poly([to_sympy(c) for c in coeffs], _x, domain=QQ), powers
        if len(powers) > bound:
            raise SplittingError("Krylov sequence exceeded the algebra dimension")
        echelon.add(nxt)
        powers.append(nxt)


def _evaluate(poly, powers):
    """Evaluate a polynomial of degree < len(powers) at x, given x^0..x^(d-1)"""
    coeffs = list(reversed(poly.all_coeffs()))
    return combine((from_sympy(c), powers[k]) for k, c in enumerate(coeffs) if c != 0)


def split_commutative(multiply, unit, basis):
    """
    Primitive idempotents of a commutative semisimple algebra over ℚ

    Args:
        multiply (callable): Product of two sparse vectors
        unit (dict): Unit of the (sub)algebra as a sparse vector
        basis (list of dict): Spanning basis of the commutative (sub)algebra

    Returns:
        list of Component: Ordered by degree, then by idempotent coordinates

    Raises:
        SplittingError: If the algebra is not semisimple, or no generic element was found
    """
    dim = len(basis)
    for attempt in range(MAX_ATTEMPTS):
        x = _generic_element(basis, attempt)
        minimal, powers = _minimal_polynomial(multiply, unit, x, dim)
        _, factors = minimal.factor_list()
        if any(multiplicity > 1 for _, multiplicity in factors):
            raise SplittingError("minimal polynomial is not squarefree: the algebra is not semisimple")
        if minimal.degree() < dim:
            logger.debug(f"attempt {attempt}: element of degree {minimal.degree()} < {dim}, retrying")
            continue
        components = []
        for factor, _ in factors:
            factor = factor.monic()
            cofactor = minimal.exquo(factor)
            lift = (cofactor * invert(cofactor, factor)).rem(minimal)
            idempotent = _evaluate(lift, powers)
            components.append(Component(idempotent, factor.degree(), factor))
        components.sort(key=lambda c: (c.degree, sorted(c.idempotent.items())))
        logger.debug(f"split into {len(components)} components after {attempt + 1} attempt(s)")
        return components
    raise SplittingError(f"no generic element found in {MAX_ATTEMPTS} attempts")


def splits_over_rationals(components):
    return all(c.degree == 1 for c in components)


def character_value(multiply, component, vector):
    """χ(a) for the character of a degree-1 component: a·e = χ(a)·e"""
    e = component.idempotent
    product = multiply(vector, e)
    pivot = min(e)
    value = product.get(pivot, Fraction(0)) / e[pivot]
    check = {}
    iadd_coef(check, value, e)
    if check != product:
        raise SplittingError("vector does not act by a scalar on the component")
    return value


def dual_basis(covectors, dim):
    """
    Vectors g_j with f_i(g_j) = δ_ij for a basis of covectors f_i

    Args:
        covectors (list of dict): Linear functionals as sparse coefficient vectors
        dim (int): Dimension of the space

    Returns:
        list of dict: The dual basis
    """
    columns = [{i: f[a] for i, f in enumerate(covectors) if f.get(a)} for a in range(dim)]
    basis = []
    for j in range(len(covectors)):
        g = solve(columns, {j: Fraction(1)})
        if g is None:
            raise SplittingError("covectors are not independent")
        basis.append(g)
    return basis
