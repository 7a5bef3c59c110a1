from fractions import Fraction

import pytest

from posalg.characters import abelian_character_table, row_products_are_convex
from posalg.exceptions import StructureError
from posalg.scalars import root_of_unity
from posalg.semigroups import build_group

AVERAGES = [
    ("cyclic:4", 1, [1, 2, 3], Fraction(-1, 3)),
    ("cyclic:3", 1, [1, 2], Fraction(-1, 2)),
    ("cyclic:4", 2, [1, 3], Fraction(-1)),
    ("cyclic:4", 0, [1, 2, 3], Fraction(1)),
]


@pytest.mark.unit
def test_cyclic_character_values():
    table = abelian_character_table(build_group("cyclic:4"))
    assert len(table) == 4
    assert table.values[1][1] == root_of_unity(4, 1)
    assert all(v == 1 for v in table.values[0])
    assert table.label(1) == "chi(1)"


@pytest.mark.unit
def test_klein_characters_are_rational():
    table = abelian_character_table(build_group("abelian:2,2"))
    assert all(v.to_rational() in (1, -1) for row in table.values for v in row)
    assert table.label(3) == "chi(1,1)"


@pytest.mark.unit
@pytest.mark.parametrize("group, row, block, expected", AVERAGES)
def test_block_average(group, row, block, expected):
    table = abelian_character_table(build_group(group))
    assert table.block_average(row, block) == expected


@pytest.mark.unit
def test_irrational_block_average():
    table = abelian_character_table(build_group("cyclic:4"))
    assert table.block_average(1, [1]) is None


@pytest.mark.unit
def test_nonabelian_group_has_no_table():
    with pytest.raises(StructureError):
        abelian_character_table(build_group("symmetric:3"))


@pytest.mark.unit
def test_row_products_are_convex():
    assert row_products_are_convex([[1, 1], [1, -1]]) == (True, None)
    assert row_products_are_convex([[1, 1], [1, Fraction(-1, 3)]])[0]
    convex, witness = row_products_are_convex([[1, 1], [1, -2]])
    assert not convex
    assert witness["rows"] == [1, 1]
