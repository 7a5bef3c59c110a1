# posalg/cache.py

import os
import json
import logging

from .config import SCHEMA_VERSION, get_cache_dir
from .scalars import format_rational, parse_rational

logger = logging.getLogger('posalg.cache')


class StructureConstantCache:
    """
    Stores Hecke structure constants on disk, one JSON file per (n, q)

    Handles:
    - Loading cached constants
    - Writing new constants once computed
    - Ignoring (and logging) unreadable or unwritable cache files
    """

    def __init__(self, directory=None):
        """
        Initialize the cache

        Args:
            directory (str, optional): Cache directory. If None, uses POSALG_CACHE;
                caching is disabled when neither is set.
        """
        self.directory = directory if directory else get_cache_dir()

    @property
    def enabled(self):
        return self.directory is not None

    def _path(self, n, q):
        name = f"hecke_n{n}_q{format_rational(q).replace('/', '_')}.json"
        return os.path.join(self.directory, name)

    def load(self, n, q):
        """
        Load cached constants

        Args:
            n (int): Hecke rank
            q (Fraction): Parameter

        Returns:
            list or None: (i, j, k, value) entries, or None on a miss
        """
        if not self.enabled:
            return None
        path = self._path(n, q)
        if not os.path.exists(path):
            logger.info(f"Cache miss for H_{n}({format_rational(q)})")
            return None
        try:
            with open(path, 'r') as f:
                logger.debug(f"Loading structure constants from {path}")
                data = json.load(f)
            if data.get("schema_version") != SCHEMA_VERSION or data.get("n") != n:
                logger.warning(f"Ignoring cache file {path}: schema or rank mismatch")
                return None
            entries = [(int(i), int(j), int(k), parse_rational(v)) for i, j, k, v in data["mult"]]
            logger.info(f"Cache hit for H_{n}({format_rational(q)})")
            return entries
        except (json.JSONDecodeError, IOError, KeyError, TypeError, ValueError) as e:
            logger.warning(f"Failed to load structure constants: {e}")
            return None

    def save(self, n, q, entries):
        """Write constants; failures are logged and ignored"""
        if not self.enabled:
            return
        try:
            os.makedirs(self.directory, exist_ok=True)
            path = self._path(n, q)
            payload = {
                "schema_version": SCHEMA_VERSION,
                "n": n,
                "q": format_rational(q),
                "mult": [[i, j, k, format_rational(v)] for i, j, k, v in entries],
            }
            with open(path, 'w') as f:
                logger.debug(f"Saving structure constants to {path}")
                json.dump(payload, f)
        except Exception as e:
            logger.warning(f"Could not save structure constants: {e}", exc_info=True)
