# posalg/__init__.py

"""
posalg: exact workbench for positive 2-algebras, involutive bialgebras and
their dilations into group and inverse semigroup bialgebras.
"""

from .algebra import AntilinearMap, StructureTensor, TwoAlgebra, dual
from .config import TOOL_VERSION
from .dilation import (a_lambda, classify_2dim, coarse_grain_search, dilation_predicate, lambda_census,
                       quasicharacter_matrix, strict_dilation_search, verify_nonstrict_witness)
from .exceptions import PosalgError
from .formats import emit_2alg, parse_2alg
from .hecke import build_hecke, hecke_two_algebra, iwahori_check
from .models import Report, Status, Verdict
from .partitions import Partition, enumerate_stable_partitions, induced_two_algebra, is_stable_partition
from .semigroups import build_group, recover_semigroup, semigroup_bialgebra, symmetric_inverse_semigroup
from .verify import check_positive_2_algebra, check_positivity, run_all

__version__ = TOOL_VERSION

__all__ = [
    "AntilinearMap", "StructureTensor", "TwoAlgebra", "dual",
    "a_lambda", "classify_2dim", "coarse_grain_search", "dilation_predicate", "lambda_census",
    "quasicharacter_matrix", "strict_dilation_search", "verify_nonstrict_witness",
    "PosalgError", "emit_2alg", "parse_2alg",
    "build_hecke", "hecke_two_algebra", "iwahori_check",
    "Report", "Status", "Verdict",
    "Partition", "enumerate_stable_partitions", "induced_two_algebra", "is_stable_partition",
    "build_group", "recover_semigroup", "semigroup_bialgebra", "symmetric_inverse_semigroup",
    "check_positive_2_algebra", "check_positivity", "run_all",
]
