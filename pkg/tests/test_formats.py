import json
from pathlib import Path

import pytest

from posalg.exceptions import ParseError
from posalg.formats import emit_2alg, emit_monoid, load_2alg, parse_2alg, parse_monoid, save_2alg
from posalg.semigroups import FiniteMonoid, InverseSemigroup, build_member, involutive_catalog, matrix_unit_semigroup

from conftest import group_algebra

Z4_FILE = Path(__file__).resolve().parent.parent / "data" / "z4.2alg"

NOT_ASSOCIATIVE = '{"size": 2, "table": [[1, 1], [0, 0]]}'

MEMBERS = involutive_catalog()

SMALL_MEMBERS = [name for name in MEMBERS if build_member(name).size <= 16]

LARGE_MEMBERS = [name for name in MEMBERS if build_member(name).size > 16]


def z4_document():
    return json.loads(Z4_FILE.read_text(encoding="utf-8"))


def parse_error(doc):
    with pytest.raises(ParseError) as info:
        parse_2alg(json.dumps(doc))
    return info.value


@pytest.mark.unit
def test_load_z4_file(z4):
    A = load_2alg(Z4_FILE)
    assert A == z4
    assert A.labels == ["0", "1", "2", "3"]
    assert not A.weakened


@pytest.mark.unit
def test_emit_parse_equal(s3, a_half):
    for A in (s3, a_half):
        assert parse_2alg(emit_2alg(A)) == A


@pytest.mark.unit
@pytest.mark.parametrize("name", SMALL_MEMBERS)
def test_emit_parse_catalog(name):
    A = group_algebra(name)
    assert parse_2alg(emit_2alg(A)) == A


@pytest.mark.slow
@pytest.mark.parametrize("name", LARGE_MEMBERS)
def test_emit_parse_catalog_large(name):
    A = group_algebra(name)
    assert parse_2alg(emit_2alg(A)) == A


@pytest.mark.unit
def test_emit_one_key_per_line(z4):
    lines = emit_2alg(z4).splitlines()
    assert lines[0] == "{" and lines[-1] == "}"
    assert [line.split(":")[0].strip() for line in lines[1:-1]] == [
        '"dim"', '"labels"', '"mult"', '"unit"', '"comult"', '"counit"', '"invol"', '"coinvol"']


@pytest.mark.unit
def test_save_and_load(tmp_path, a_half):
    path = tmp_path / "a_half.2alg"
    save_2alg(a_half, path)
    assert load_2alg(path) == a_half


@pytest.mark.unit
def test_zero_denominator_names_field():
    doc = z4_document()
    doc["mult"][0][3] = "1/0"
    assert parse_error(doc).field == "mult[0][3]"


@pytest.mark.unit
def test_decimal_rejected():
    doc = z4_document()
    doc["counit"][2] = "0.5"
    assert parse_error(doc).field == "counit[2]"


@pytest.mark.unit
def test_unknown_key():
    doc = z4_document()
    doc["antipode"] = []
    assert parse_error(doc).field == "antipode"


@pytest.mark.unit
def test_missing_key():
    doc = z4_document()
    del doc["counit"]
    error = parse_error(doc)
    assert error.field == "counit"
    assert "missing" in error.message


@pytest.mark.unit
def test_index_out_of_range():
    doc = z4_document()
    doc["comult"][1][0] = 4
    assert parse_error(doc).field == "comult[1][0]"


@pytest.mark.unit
def test_wrong_vector_length():
    doc = z4_document()
    doc["unit"] = ["1", "0", "0"]
    assert parse_error(doc).field == "unit"


@pytest.mark.unit
def test_involution_shape():
    doc = z4_document()
    doc["invol"]["matrix"][1] = ["0", "1"]
    assert parse_error(doc).field == "invol.matrix[1]"
    doc["invol"] = [["1"]]
    assert parse_error(doc).field == "invol"


@pytest.mark.unit
def test_syntax_error_position():
    with pytest.raises(ParseError) as info:
        parse_2alg('{\n  "dim": 2,\n  oops\n}')
    assert info.value.line == 3
    assert info.value.column is not None
    assert "line 3" in str(info.value)


@pytest.mark.unit
def test_top_level_must_be_object():
    with pytest.raises(ParseError):
        parse_2alg("[1, 2]")


@pytest.mark.unit
def test_weakened_key():
    A = group_algebra("matrix_units:2")
    text = emit_2alg(A)
    assert '"weakened": true' in text
    assert parse_2alg(text).weakened
    doc = json.loads(text)
    doc["weakened"] = "yes"
    assert parse_error(doc).field == "weakened"


@pytest.mark.unit
def test_monoid_with_inverse():
    S = matrix_unit_semigroup(2)
    parsed = parse_monoid(emit_monoid(S))
    assert isinstance(parsed, InverseSemigroup)
    assert parsed.inv == S.inv
    assert parsed.base.zero == 4
    assert parsed.labels == ["e11", "e12", "e21", "e22", "0"]
    assert (parsed.base.table == S.base.table).all()


@pytest.mark.unit
def test_monoid_without_inverse():
    M = parse_monoid('{"size": 2, "unit": 0, "table": [[0, 1], [1, 1]]}')
    assert isinstance(M, FiniteMonoid)
    assert M.unit == 0
    assert M.idempotents() == [0, 1]


@pytest.mark.unit
def test_monoid_errors():
    with pytest.raises(ParseError) as info:
        parse_monoid(NOT_ASSOCIATIVE)
    assert info.value.field == "table"
    with pytest.raises(ParseError) as info:
        parse_monoid('{"size": 2, "table": [[0, 1], [1, 2]]}')
    assert info.value.field == "table[1][1]"
    with pytest.raises(ParseError) as info:
        parse_monoid('{"size": 2, "table": [[0, 1], [1, 0]], "inv": [1, 0]}')
    assert info.value.field == "table"
