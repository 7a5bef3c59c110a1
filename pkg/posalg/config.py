# posalg/config.py

import os

TOOL_VERSION = "0.1.0"
SCHEMA_VERSION = 1

# Size caps
DEFAULT_CYCLOTOMIC_MAX_ORDER = 64
DEFAULT_GROUP_SIZE_CAP = 5040
GL_ORDER_CAP = 10000
HECKE_MIN_N = 2
HECKE_MAX_N = 5
SYMMETRIC_MAX_N = 6
SYMMETRIC_INVERSE_MAX_N = 4
EXHAUSTIVE_PARTITION_MAX = 12
ISOMORPHISM_MAX_DIM = 6
DEFAULT_CENSUS_ORDER = 16

# Catalog bounds used by the searches
CATALOG_GROUP_MAX_ORDER = 16
CATALOG_SEMIGROUP_MAX_N = 3

# Exit codes of the command line front end
EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


def _int_from_env(name, default):
    value = os.environ.get(name)
    if value is None or value == "":
        return default
    try:
        return int(value)
    except ValueError:
        return default


def get_cyclotomic_max_order():
    """
    Get the largest cyclotomic order arithmetic may reach

    Returns:
        int: Cap on m for elements of ℚ(ζ_m)
    """
    return _int_from_env("POSALG_MAX_CYCLOTOMIC_ORDER", DEFAULT_CYCLOTOMIC_MAX_ORDER)


def get_group_size_cap():
    """
    Get the largest group or semigroup the constructors will build

    Returns:
        int: Cap on the number of elements
    """
    return _int_from_env("POSALG_GROUP_SIZE_CAP", DEFAULT_GROUP_SIZE_CAP)


def get_cache_dir():
    """
    Get the Hecke structure-constant cache directory

    Returns:
        str or None: Directory path, or None when caching is disabled
    """
    path = os.environ.get("POSALG_CACHE")
    return path if path else None


def get_default_jobs():
    """
    Get the default number of search workers

    Returns:
        int: Worker count (at least 1)
    """
    return max(1, _int_from_env("POSALG_JOBS", os.cpu_count() or 1))
