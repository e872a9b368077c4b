"""JSON input documents: exact-rational descriptions of metric Lie algebras.

Schema (all rationals as "p/q" or integer strings; floats are rejected):

    {
      "dim": 3,
      "brackets": [{"i": 1, "j": 2, "coeffs": ["0", "0", "1"]}, ...],
      "metric": [["-1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
      "labels": ["s", "e1", "e2"]          # optional
    }

Indices are 1-based with i < j; the antisymmetric completion is implied.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import IO

from .errors import ParseError
from .lie import LieAlgebra
from .metric import MetricLieAlgebra

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")

_TOP_KEYS = {"dim", "brackets", "metric", "labels"}


def parse_rational(x, where: str) -> Fraction:
    if isinstance(x, bool):
        raise ParseError(f"{where}: expected a rational, got a boolean")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        if not _RATIONAL_RE.match(x.strip()):
            raise ParseError(f"{where}: invalid rational {x!r} (use 'p/q' or an integer string)")
        return Fraction(x.strip())
    if isinstance(x, float):
        raise ParseError(f"{where}: floats are not accepted; write the exact rational as a string")
    raise ParseError(f"{where}: invalid rational {x!r}")


def parse_document(doc) -> MetricLieAlgebra:
    """Validate a loaded JSON document and build the metric Lie algebra.

    Raises ParseError for schema problems; antisymmetry/Jacobi/symmetry/
    degeneracy violations surface as their own exception types.
    """
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise ParseError(f"unknown keys: {sorted(unknown)}")
    for key in ("dim", "metric"):
        if key not in doc:
            raise ParseError(f"missing required key {key!r}")

    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ParseError(f"dim: expected a positive integer, got {dim!r}")

    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != dim or not all(isinstance(s, str) for s in labels):
            raise ParseError(f"labels: expected a list of {dim} strings")

    brackets: dict[tuple[int, int], list[Fraction]] = {}
    raw_brackets = doc.get("brackets", [])
    if not isinstance(raw_brackets, list):
        raise ParseError("brackets: expected a list")
    for idx, entry in enumerate(raw_brackets):
        where = f"brackets[{idx}]"
        if not isinstance(entry, dict) or set(entry) != {"i", "j", "coeffs"}:
            raise ParseError(f"{where}: expected an object with keys i, j, coeffs")
        i, j = entry["i"], entry["j"]
        for name, val in (("i", i), ("j", j)):
            if isinstance(val, bool) or not isinstance(val, int):
                raise ParseError(f"{where}.{name}: expected an integer index")
        if not (1 <= i < j <= dim):
            raise ParseError(f"{where}: indices must satisfy 1 <= i < j <= dim, got ({i}, {j})")
        if (i - 1, j - 1) in brackets:
            raise ParseError(f"{where}: duplicate bracket ({i}, {j})")
        coeffs = entry["coeffs"]
        if not isinstance(coeffs, list) or len(coeffs) != dim:
            raise ParseError(f"{where}.coeffs: expected {dim} entries")
        brackets[(i - 1, j - 1)] = [
            parse_rational(x, f"{where}.coeffs[{k}]") for k, x in enumerate(coeffs)
        ]

    metric = doc["metric"]
    if not isinstance(metric, list) or len(metric) != dim or any(
        not isinstance(row, list) or len(row) != dim for row in metric
    ):
        raise ParseError(f"metric: expected a {dim} x {dim} array")
    gram = [
        [parse_rational(x, f"metric[{r}][{c}]") for c, x in enumerate(row)]
        for r, row in enumerate(metric)
    ]

    algebra = LieAlgebra.from_brackets(dim, brackets, labels)
    return MetricLieAlgebra.make(algebra, gram)


def load(stream: IO[str]) -> MetricLieAlgebra:
    try:
        doc = json.load(stream)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return parse_document(doc)


def loads(text: str) -> MetricLieAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return parse_document(doc)


def emit_document(m: MetricLieAlgebra) -> dict:
    """Canonical document for a metric Lie algebra: nonzero upper-triangle
    brackets in (i, j) order, all rationals as canonical strings."""
    n = m.dim
    brackets = []
    for i in range(n):
        for j in range(i + 1, n):
            coeffs = m.algebra.c[i][j]
            if any(coeffs):
                brackets.append(
                    {"i": i + 1, "j": j + 1, "coeffs": [str(x) for x in coeffs]}
                )
    doc = {
        "dim": n,
        "brackets": brackets,
        "metric": [[str(x) for x in row] for row in m.gram],
    }
    if m.algebra.labels:
        doc["labels"] = list(m.algebra.labels)
    return doc
