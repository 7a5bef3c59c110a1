import json
import os
from fractions import Fraction

import pytest

from posalg.cache import StructureConstantCache
from posalg.hecke import build_hecke


@pytest.mark.unit
def test_disabled_by_default(monkeypatch):
    monkeypatch.delenv("POSALG_CACHE", raising=False)
    cache = StructureConstantCache()
    assert not cache.enabled
    assert cache.load(2, Fraction(2)) is None


@pytest.mark.unit
def test_round_trip(tmp_path):
    cache = StructureConstantCache(str(tmp_path))
    H = build_hecke(2, Fraction(1, 2), cache=cache)
    files = os.listdir(tmp_path)
    assert files == ["hecke_n2_q1_2.json"]
    assert sorted(cache.load(2, Fraction(1, 2))) == H.mult.entries()
    again = build_hecke(2, Fraction(1, 2), cache=cache)
    assert again.mult == H.mult


@pytest.mark.unit
def test_env_directory(tmp_path, monkeypatch):
    monkeypatch.setenv("POSALG_CACHE", str(tmp_path))
    build_hecke(2, 3)
    assert os.path.exists(tmp_path / "hecke_n2_q3.json")


@pytest.mark.unit
def test_corrupt_file_is_ignored(tmp_path):
    cache = StructureConstantCache(str(tmp_path))
    (tmp_path / "hecke_n2_q2.json").write_text("{not json")
    assert cache.load(2, Fraction(2)) is None
    H = build_hecke(2, 2, cache=cache)
    assert H.dim == 2


@pytest.mark.unit
def test_schema_mismatch_is_ignored(tmp_path):
    cache = StructureConstantCache(str(tmp_path))
    (tmp_path / "hecke_n2_q2.json").write_text(json.dumps({"schema_version": 0, "n": 2, "mult": []}))
    assert cache.load(2, Fraction(2)) is None
