# tests/conftest.py

from fractions import Fraction

import pytest

from posalg.algebra import AntilinearMap, StructureTensor, TwoAlgebra
from posalg.dilation import a_lambda
from posalg.semigroups import build_member, semigroup_bialgebra


def group_algebra(name):
    return semigroup_bialgebra(build_member(name))


@pytest.fixture
def z2():
    return group_algebra("cyclic:2")


@pytest.fixture
def z3():
    return group_algebra("cyclic:3")


@pytest.fixture
def z4():
    return group_algebra("cyclic:4")


@pytest.fixture
def s3():
    return group_algebra("symmetric:3")


@pytest.fixture
def a_half():
    return a_lambda(Fraction(1, 2))


@pytest.fixture
def truncated():
    """ℚ[x]/x² with x grouplike: a valid 2-algebra that is not semisimple"""
    mult = StructureTensor(2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
    return TwoAlgebra(mult, [1, 0], StructureTensor.diagonal(2), [1, 1],
                      AntilinearMap.identity(2), AntilinearMap.identity(2), labels=["1", "x"])
