# posalg/formats.py

"""
The 2ALG JSON format for 2-algebras and the monoid table format.

2ALG keys, in this order: dim, labels (optional), mult, unit, comult,
counit, invol, coinvol, weakened (optional). Tensor entries are
[i, j, k, "p/q"]; vectors and involution matrices hold rational strings.
Unknown keys are rejected.
"""

import json
import logging

from .algebra import AntilinearMap, StructureTensor, TwoAlgebra
from .exceptions import DimensionMismatchError, ParseError, StructureError
from .scalars import format_rational, parse_rational
from .semigroups import FiniteMonoid, InverseSemigroup

logger = logging.getLogger('posalg.formats')

ALG_KEYS = ("dim", "labels", "mult", "unit", "comult", "counit", "invol", "coinvol", "weakened")
ALG_REQUIRED = ("dim", "mult", "unit", "comult", "counit", "invol", "coinvol")
MONOID_KEYS = ("size", "unit", "zero", "table", "inv", "labels")


def _dump_document(doc):
    """One top-level key per line, compact values"""
    fields = [f"  {json.dumps(key)}: {json.dumps(value, ensure_ascii=False, separators=(', ', ': '))}"
              for key, value in doc.items()]
    return "{\n" + ",\n".join(fields) + "\n}\n"


def _load_document(text, keys, required):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError("<document>", e.msg, line=e.lineno, column=e.colno) from e
    if not isinstance(doc, dict):
        raise ParseError("<document>", "top level must be an object")
    for key in doc:
        if key not in keys:
            raise ParseError(key, "unknown key")
    for key in required:
        if key not in doc:
            raise ParseError(key, "missing required key")
    return doc


def _rational(value, field):
    try:
        return parse_rational(value)
    except ValueError as e:
        raise ParseError(field, str(e)) from e


def _index(value, dim, field):
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < dim:
        raise ParseError(field, f"index must be an integer in 0..{dim - 1}, got {value!r}")
    return value


def _tensor(doc, key, dim):
    entries = doc[key]
    if not isinstance(entries, list):
        raise ParseError(key, "must be a list of [i, j, k, value] entries")
    parsed = []
    for n, entry in enumerate(entries):
        field = f"{key}[{n}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise ParseError(field, "entry must be [i, j, k, value]")
        i, j, k = (_index(entry[m], dim, f"{field}[{m}]") for m in range(3))
        parsed.append((i, j, k, _rational(entry[3], f"{field}[3]")))
    try:
        return StructureTensor(dim, parsed)
    except StructureError as e:
        raise ParseError(key, str(e)) from e


def _vector(doc, key, dim):
    values = doc[key]
    if not isinstance(values, list) or len(values) != dim:
        raise ParseError(key, f"must be a list of {dim} rationals")
    return [_rational(v, f"{key}[{n}]") for n, v in enumerate(values)]


def _involution(doc, key, dim):
    value = doc[key]
    if not isinstance(value, dict) or set(value) != {"matrix"}:
        raise ParseError(key, "must be an object with the single key 'matrix'")
    rows = value["matrix"]
    if not isinstance(rows, list) or len(rows) != dim:
        raise ParseError(f"{key}.matrix", f"must have {dim} rows")
    entries = {}
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError(f"{key}.matrix[{r}]", f"must have {dim} entries")
        for c, v in enumerate(row):
            v = _rational(v, f"{key}.matrix[{r}][{c}]")
            if v:
                entries[(r, c)] = v
    return AntilinearMap(dim, entries)


def parse_2alg(text):
    """
    Parse a 2ALG document

    Args:
        text (str): JSON text

    Returns:
        TwoAlgebra

    Raises:
        ParseError: Naming the offending field, with line and column for JSON syntax errors
    """
    doc = _load_document(text, ALG_KEYS, ALG_REQUIRED)
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError("dim", f"must be a positive integer, got {dim!r}")
    labels = doc.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != dim
                               or not all(isinstance(v, str) for v in labels)):
        raise ParseError("labels", f"must be a list of {dim} strings")
    weakened = doc.get("weakened", False)
    if not isinstance(weakened, bool):
        raise ParseError("weakened", "must be a boolean")
    try:
        return TwoAlgebra(_tensor(doc, "mult", dim), _vector(doc, "unit", dim), _tensor(doc, "comult", dim),
                          _vector(doc, "counit", dim), _involution(doc, "invol", dim),
                          _involution(doc, "coinvol", dim), labels=labels, weakened=weakened)
    except DimensionMismatchError as e:
        raise ParseError(e.what, str(e)) from e


def emit_2alg(A):
    """Serialize a TwoAlgebra; parse_2alg(emit_2alg(A)) equals A"""
    doc = {"dim": A.dim}
    if A.labels is not None:
        doc["labels"] = list(A.labels)
    doc["mult"] = [[i, j, k, format_rational(v)] for i, j, k, v in A.mult.entries()]
    doc["unit"] = [format_rational(v) for v in A.unit]
    doc["comult"] = [[i, j, k, format_rational(v)] for i, j, k, v in A.comult.entries()]
    doc["counit"] = [format_rational(v) for v in A.counit]
    doc["invol"] = {"matrix": [[format_rational(v) for v in row] for row in A.invol.matrix]}
    doc["coinvol"] = {"matrix": [[format_rational(v) for v in row] for row in A.coinvol.matrix]}
    if A.weakened:
        doc["weakened"] = True
    return _dump_document(doc)


def load_2alg(path):
    logger.debug(f"Reading 2-algebra from {path}")
    with open(path, 'r', encoding='utf-8') as f:
        return parse_2alg(f.read())


def save_2alg(A, path):
    logger.debug(f"Writing 2-algebra to {path}")
    with open(path, 'w', encoding='utf-8') as f:
        f.write(emit_2alg(A))


def parse_monoid(text):
    """
    Parse a monoid table document

    Returns:
        FiniteMonoid or InverseSemigroup: The latter when 'inv' is present

    Raises:
        ParseError: On schema violations
    """
    doc = _load_document(text, MONOID_KEYS, ("size", "table"))
    size = doc["size"]
    if not isinstance(size, int) or isinstance(size, bool) or size < 1:
        raise ParseError("size", f"must be a positive integer, got {size!r}")
    table = doc["table"]
    if not isinstance(table, list) or len(table) != size:
        raise ParseError("table", f"must have {size} rows")
    for r, row in enumerate(table):
        if not isinstance(row, list) or len(row) != size:
            raise ParseError(f"table[{r}]", f"must have {size} entries")
        for c, v in enumerate(row):
            _index(v, size, f"table[{r}][{c}]")
    unit = _index(doc["unit"], size, "unit") if "unit" in doc else None
    zero = _index(doc["zero"], size, "zero") if "zero" in doc else None
    labels = doc.get("labels")
    try:
        monoid = FiniteMonoid(table, unit=unit, zero=zero, labels=labels)
        if "inv" not in doc:
            return monoid
        inv = doc["inv"]
        if not isinstance(inv, list) or len(inv) != size:
            raise ParseError("inv", f"must be a list of {size} indices")
        return InverseSemigroup(monoid, [_index(v, size, f"inv[{n}]") for n, v in enumerate(inv)])
    except StructureError as e:
        raise ParseError("table", str(e)) from e


def emit_monoid(S):
    """Serialize a FiniteMonoid or InverseSemigroup"""
    if isinstance(S, InverseSemigroup):
        return _dump_document(S.base.to_dict(S.inv))
    return _dump_document(S.to_dict())
