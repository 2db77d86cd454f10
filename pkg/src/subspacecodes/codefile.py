"""On-disk representation of a subspace code.

A code file is canonical JSON (sorted keys, two-space indent, LF endings,
one trailing newline) with fields format_version, q, n, kind, codewords.
Each codeword is the ';'-joined row literal of a canonical generator matrix
(the zero subspace is the empty string).  Loading validates canonical form
and uniqueness, so load followed by save is byte-identical.
"""

from __future__ import annotations

import json

from .constructions import SubspaceCode
from .errors import InvariantViolation, ParseError
from .subspaces import field_for_order, from_literal, to_literal

FORMAT_VERSION = 1


def dumps_code(code: SubspaceCode) -> str:
    doc = {
        "format_version": FORMAT_VERSION,
        "q": code.spec.order,
        "n": code.n,
        "kind": code.kind,
        "codewords": [to_literal(w) for w in code.words],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def save_code(code: SubspaceCode, path: str) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(dumps_code(code))


def loads_code(text: str) -> SubspaceCode:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno}, column {e.colno}: {e.msg}") from e
    for key in ("format_version", "q", "n", "kind", "codewords"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    if doc["format_version"] != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {doc['format_version']!r}")
    q = int(doc["q"])
    n = int(doc["n"])
    spec = field_for_order(q)
    words = []
    seen = set()
    for i, lit in enumerate(doc["codewords"]):
        try:
            w = from_literal(lit, spec, n)
        except ParseError as e:
            raise ParseError(f"codeword {i}: {e}") from e
        if to_literal(w) != lit.strip():
            raise InvariantViolation(
                f"codeword {i}: rows are not a reduced echelon generator matrix"
            )
        if w.key() in seen:
            raise InvariantViolation(f"codeword {i}: duplicate subspace")
        seen.add(w.key())
        words.append(w)
    return SubspaceCode(spec, n, words, kind=doc["kind"])


def load_code(path: str) -> SubspaceCode:
    with open(path, "r") as fh:
        return loads_code(fh.read())
