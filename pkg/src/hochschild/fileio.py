"""JSON algebra files.

Schema::

    {
      "name": "lambda_1",
      "dim": 5,
      "basis": ["e1", ..., "e5"],
      "products": [{"i": 1, "j": 1, "terms": [{"k": 2, "coeff": "1"}]}, ...],
      "params": {"alpha": "2"}          # optional
    }

Indices are 1-based; pairs not listed multiply to zero.  Coefficients are
strings in the scalar grammar.
"""
from __future__ import annotations

import json

from .algebra import Algebra
from .scalar import ScalarParseError, format_scalar, parse_scalar

__all__ = ["AlgebraFileError", "parse_algebra_file", "load_algebra_file", "dump_algebra", "algebra_to_dict"]


class AlgebraFileError(ValueError):
    """Schema or content error; ``location`` is a JSON path like ``products[2].terms[0].coeff``."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


def _require(obj, key, kind, where):
    if key not in obj:
        raise AlgebraFileError(f"missing field {key!r}", where)
    val = obj[key]
    if kind is int:
        if isinstance(val, bool) or not isinstance(val, int):
            raise AlgebraFileError(f"field {key!r} must be an integer", where)
    elif not isinstance(val, kind):
        raise AlgebraFileError(f"field {key!r} has the wrong type", where)
    return val


def _scalar(text, where):
    if not isinstance(text, str):
        raise AlgebraFileError("coefficient must be a string", where)
    try:
        return parse_scalar(text)
    except ScalarParseError as exc:
        raise AlgebraFileError(str(exc), where) from exc


def parse_algebra_file(data) -> Algebra:
    """Parse bytes/str JSON (or an already-decoded dict) into an :class:`Algebra`.

    Associativity is not checked here.
    """
    if isinstance(data, (bytes, bytearray)):
        data = data.decode("utf-8")
    if isinstance(data, str):
        try:
            doc = json.loads(data)
        except json.JSONDecodeError as exc:
            raise AlgebraFileError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from exc
    else:
        doc = data
    if not isinstance(doc, dict):
        raise AlgebraFileError("top level must be an object")
    name = _require(doc, "name", str, "")
    dim = _require(doc, "dim", int, "")
    if dim < 1:
        raise AlgebraFileError("dim must be positive", "dim")
    basis = doc.get("basis")
    if basis is None:
        basis = [f"e{k + 1}" for k in range(dim)]
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise AlgebraFileError("basis must be a list of strings", "basis")
    if len(basis) != dim:
        raise AlgebraFileError(f"basis has {len(basis)} labels, expected {dim}", "basis")
    products = _require(doc, "products", list, "")
    table: dict = {}
    for p_idx, prod in enumerate(products):
        where = f"products[{p_idx}]"
        if not isinstance(prod, dict):
            raise AlgebraFileError("product must be an object", where)
        i = _require(prod, "i", int, where)
        j = _require(prod, "j", int, where)
        for key, v in (("i", i), ("j", j)):
            if not 1 <= v <= dim:
                raise AlgebraFileError(f"index {v} out of range 1..{dim}", f"{where}.{key}")
        if (i, j) in table:
            raise AlgebraFileError(f"duplicate product ({i}, {j})", where)
        terms = _require(prod, "terms", list, where)
        row = {}
        for t_idx, term in enumerate(terms):
            twhere = f"{where}.terms[{t_idx}]"
            if not isinstance(term, dict):
                raise AlgebraFileError("term must be an object", twhere)
            k = _require(term, "k", int, twhere)
            if not 1 <= k <= dim:
                raise AlgebraFileError(f"index {k} out of range 1..{dim}", f"{twhere}.k")
            coeff = _scalar(_require(term, "coeff", str, twhere), f"{twhere}.coeff")
            row[k] = row[k] + coeff if k in row else coeff
        table[(i, j)] = row
    params = doc.get("params") or {}
    if not isinstance(params, dict):
        raise AlgebraFileError("params must be an object", "params")
    params = {key: _scalar(val, f"params.{key}") for key, val in params.items()}
    return Algebra.from_products(name, dim, table, basis_labels=tuple(basis), params=params)


def load_algebra_file(path) -> Algebra:
    with open(path, "rb") as fh:
        return parse_algebra_file(fh.read())


def algebra_to_dict(A: Algebra) -> dict:
    products = [
        {"i": i, "j": j, "terms": [{"k": k, "coeff": format_scalar(v)} for k, v in sorted(terms.items())]}
        for (i, j), terms in sorted(A.product_table().items())
    ]
    doc = {"name": A.name, "dim": A.dim, "basis": list(A.basis_labels), "products": products}
    if A.params:
        doc["params"] = {k: format_scalar(v) for k, v in A.params.items()}
    return doc


def dump_algebra(A: Algebra) -> bytes:
    """Canonical serialization (sorted products, 2-space indent, trailing newline)."""
    return (json.dumps(algebra_to_dict(A), indent=2) + "\n").encode("utf-8")
