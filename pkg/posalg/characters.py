# posalg/characters.py

"""Exact character tables of finite abelian groups."""

import logging
from fractions import Fraction

from .exceptions import StructureError
from .linalg import solve
from .scalars import Cyclotomic, cyc_to_rational, root_of_unity

logger = logging.getLogger('posalg.characters')


class CharacterTable:
    """Rows are characters, columns are group elements; values in ℚ(ζ_exponent)"""

    def __init__(self, group, exponent, characters, values):
        self.group = group
        self.exponent = exponent
        self.characters = characters
        self.values = values

    def __len__(self):
        return len(self.characters)

    def label(self, row):
        k = self.characters[row]
        return "chi(" + ",".join(str(v) for v in k) + ")"

    def block_average(self, row, block):
        """
        Mean of a character over a set of group elements

        Args:
            row (int): Character index
            block (iterable of int): Element indices

        Returns:
            Fraction or None: The mean when it is rational, else None
        """
        block = list(block)
        total = Cyclotomic.from_rational(0, self.exponent)
        for g in block:
            total = total + self.values[row][g]
        return cyc_to_rational(total / len(block))

    def __repr__(self):
        return f"CharacterTable(group={self.group.name}, size={len(self.characters)})"


def abelian_character_table(G):
    """
    Character table of an abelian group in invariant-factor form

    The character indexed by k = (k_1, ..., k_r) sends g = (g_1, ..., g_r) to
    Π ζ_{m_i}^{k_i g_i}, realised as a power of ζ_E for the exponent E = m_r.

    Args:
        G (FiniteMonoid): Output of build_group for a cyclic or abelian spec

    Returns:
        CharacterTable: Characters in the same product order as the elements

    Raises:
        StructureError: If G was not built as an abelian group
    """
    factors = getattr(G, "factors", None)
    if factors is None or G.elements is None:
        raise StructureError(f"{G.name} is not a catalog abelian group")
    exponent = factors[-1] if factors else 1
    characters = list(G.elements)
    values = []
    for k in characters:
        row = []
        for g in G.elements:
            power = sum(ki * gi * (exponent // m) for ki, gi, m in zip(k, g, factors))
            row.append(root_of_unity(exponent, power))
        values.append(row)
    logger.debug(f"character table of {G.name}: {len(characters)} characters over order {exponent}")
    return CharacterTable(G, exponent, characters, values)


def row_products_are_convex(rows):
    """
    Whether every coordinatewise product of two rows is a convex combination of rows

    Args:
        rows (list of list of Fraction): Square matrix with an all-ones first row

    Returns:
        tuple: (bool, witness or None)
    """
    n = len(rows)
    columns = [{c: v for c, v in enumerate(row) if v} for row in rows]
    for i in range(n):
        for j in range(i, n):
            target = {c: rows[i][c] * rows[j][c] for c in range(n) if rows[i][c] * rows[j][c]}
            weights = solve(columns, target)
            if weights is None:
                return False, {"rows": [i, j], "reason": "product outside the row span"}
            if any(w < 0 for w in weights.values()) or sum(weights.values(), Fraction(0)) != 1:
                return False, {"rows": [i, j], "weights": weights}
    return True, None
