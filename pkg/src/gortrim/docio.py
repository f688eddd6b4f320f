"""JSON matrix documents and machine-readable reports.

A matrix document looks like::

    {"field": "F2", "variables": ["x", "y", "z"],
     "matrix": [["0", "y+z", ...], ...]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .linalg import FieldMatrix, PolyMatrix
from .pfaffian import SkewMatrix
from .polyring import PolySyntaxError, Ring, field_from_name, format_poly
from .trimclass import QBar, TorClass, TrimReport


class DocumentError(ValueError):
    """Malformed or invalid matrix document."""


def parse_matrix_document(doc: Union[str, dict]) -> SkewMatrix:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    for key in ("field", "variables", "matrix"):
        if key not in doc:
            raise DocumentError(f"missing key {key!r}")
    try:
        field = field_from_name(str(doc["field"]))
    except ValueError as exc:
        raise DocumentError(f"field: {exc}") from exc
    names = doc["variables"]
    if not isinstance(names, list) or len(names) != 3 or not all(isinstance(v, str) for v in names):
        raise DocumentError("variables: expected an array of 3 strings")
    try:
        ring = Ring(field, names)
    except ValueError as exc:
        raise DocumentError(f"variables: {exc}") from exc
    rows = doc["matrix"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise DocumentError("matrix: expected an array of arrays")
    m = len(rows)
    parsed = []
    for i, row in enumerate(rows, start=1):
        if len(row) != m:
            raise DocumentError(f"matrix row {i}: expected {m} entries, got {len(row)}")
        out = []
        for j, cell in enumerate(row, start=1):
            if not isinstance(cell, (str, int)):
                raise DocumentError(f"matrix[{i}][{j}]: expected a polynomial string")
            try:
                out.append(ring.parse(str(cell)))
            except PolySyntaxError as exc:
                raise DocumentError(f"matrix[{i}][{j}]: {exc}") from exc
        parsed.append(out)
    M = PolyMatrix(ring, parsed)
    n = M.nrows
    for i in range(n):
        if M.rows[i][i]:
            raise DocumentError(f"matrix[{i + 1}][{i + 1}]: diagonal entry must be 0")
        for j in range(n):
            if M.rows[i][j].constant_term() != 0:
                raise DocumentError(f"matrix[{i + 1}][{j + 1}]: entry has a nonzero constant term")
            if j > i and M.rows[j][i] != -M.rows[i][j]:
                raise DocumentError(f"matrix[{j + 1}][{i + 1}]: not the negative of matrix[{i + 1}][{j + 1}]")
    if n < 3 or n % 2 == 0:
        raise DocumentError(f"matrix: size must be odd and at least 3, got {n}")
    return SkewMatrix(M)


def load_matrix_document(path) -> SkewMatrix:
    return parse_matrix_document(Path(path).read_text())


def matrix_document(T: SkewMatrix) -> dict:
    return {
        "field": T.ring.field.name,
        "variables": list(T.ring.variables),
        "matrix": [[format_poly(x) for x in row] for row in T.matrix.rows],
    }


def dumps(obj) -> str:
    """Stable JSON text; key order is the insertion order of the dicts built here."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def report_to_dict(rep: TrimReport) -> dict:
    return {
        "trim": list(rep.trim),
        "permutation": list(rep.permutation),
        "t": rep.t,
        "field": rep.qbar.matrix.field.name,
        "qbar": rep.qbar.matrix.tolist(),
        "g_condition": rep.g_condition,
        "p": rep.p,
        "rank": rep.rank,
        "class": str(rep.tor_class),
        "format": list(rep.format),
        "format_extended": rep.format_extended,
        "mu": rep.mu,
        "pfaffian_signs": list(rep.pfaffian_signs),
        "warnings": list(rep.warnings),
    }


def report_from_dict(d: dict) -> TrimReport:
    field = field_from_name(d["field"])
    return TrimReport(
        trim=tuple(d["trim"]),
        permutation=tuple(d["permutation"]),
        t=d["t"],
        qbar=QBar(d["t"], FieldMatrix(field, d["qbar"], ncols=5)),
        g_condition=d["g_condition"],
        p=d["p"],
        rank=d["rank"],
        tor_class=TorClass.parse(d["class"]),
        format=tuple(d["format"]),
        mu=d["mu"],
        format_extended=d["format_extended"],
        pfaffian_signs=tuple(d["pfaffian_signs"]),
        warnings=list(d["warnings"]),
    )
