"""JSON algebra documents: export, import, and deterministic serialization.

Layout (labels everywhere, never indices)::

    {
      "format": "rbx-algebra/1",
      "name": "sweedler",
      "ring": {"type": "rational"},
      "basis": ["1", "x", "y", "xy"],
      "unit": [["1", <scalar>]],
      "mult": [["x", "y", [["xy", <scalar>]]], ...],
      "coproduct": [["y", [["1", "y", <scalar>], ["y", "x", <scalar>]]], ...],
      "counit": [<scalar>, <scalar>, ...],
      "antipode": [["y", [["xy", <scalar>]]], ...],
      "elements": {"C[s1]": [["T[]", <scalar>], ...]}
    }

The Hopf blocks and ``elements`` are optional.  Scalars use the tagged
literal encodings (``{"rat": [n, d]}`` and friends); hand-written documents
may also give a scalar as a plain integer or as an expression string such as
``"v + v^-1"``.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from pathlib import Path

from .algebra import FiniteDimAlgebra
from .hopf import HopfAlgebra
from .scalars import ScalarParseError, ScalarRing, ring_from_spec

__all__ = [
    "FORMAT",
    "DocumentError",
    "document_from_json",
    "dumps",
    "load",
    "loads",
    "save",
    "to_document",
]

FORMAT = "rbx-algebra/1"


class DocumentError(ValueError):
    pass


def _sparse_pairs(vec: Mapping[int, object], basis, ring: ScalarRing) -> list:
    return [[basis[k], ring.to_json(vec[k])] for k in sorted(vec) if vec[k]]


def to_document(obj: FiniteDimAlgebra | HopfAlgebra) -> dict:
    H = obj if isinstance(obj, HopfAlgebra) else None
    A = H.algebra if H else obj
    ring, basis = A.ring, A.basis
    doc: dict = {
        "format": FORMAT,
        "name": (H.name if H else A.name) or "",
        "ring": ring.spec(),
        "basis": list(basis),
        "unit": _sparse_pairs(dict(enumerate(A.unit.coeffs)), basis, ring),
        "mult": [
            [basis[i], basis[j], _sparse_pairs(A.table[i][j], basis, ring)]
            for i in range(A.dim)
            for j in range(A.dim)
            if A.table[i][j]
        ],
    }
    if H is not None:
        cop = H.coproduct_data()
        doc["coproduct"] = [
            [basis[k], [[basis[a], basis[b], ring.to_json(c)] for (a, b), c in sorted(cop[k].items()) if c]]
            for k in range(A.dim)
        ]
        doc["counit"] = [ring.to_json(c) for c in H.counit_values]
        anti = H.antipode_data()
        doc["antipode"] = [[basis[k], _sparse_pairs(anti[k], basis, ring)] for k in range(A.dim)]
    named = A.named_elements
    if named:
        doc["elements"] = {
            name: _sparse_pairs(dict(enumerate(e.coeffs)), basis, ring) for name, e in sorted(named.items())
        }
    return doc


def dumps(obj: FiniteDimAlgebra | HopfAlgebra | dict) -> str:
    """Canonical JSON text (stable key order, one trailing newline)."""
    doc = obj if isinstance(obj, dict) else to_document(obj)

    def compact(x) -> str:
        return json.dumps(x, ensure_ascii=False, separators=(", ", ": "))

    # one line per table row keeps diffs readable without exploding the file
    fields = []
    for key, value in doc.items():
        if isinstance(value, list) and value and key != "basis":
            body = ",\n".join(f"    {compact(v)}" for v in value)
            fields.append(f"  {compact(key)}: [\n{body}\n  ]")
        else:
            fields.append(f"  {compact(key)}: {compact(value)}")
    return "{\n" + ",\n".join(fields) + "\n}\n"


class _Reader:
    def __init__(self, doc: Mapping):
        if not isinstance(doc, Mapping):
            raise DocumentError("an algebra document must be a JSON object")
        self.doc = doc
        try:
            self.ring = ring_from_spec(self._get("ring"))
        except ScalarParseError as exc:
            raise DocumentError(f"ring: {exc}") from None
        basis = self._get("basis")
        if not isinstance(basis, list) or not all(isinstance(b, str) and b for b in basis):
            raise DocumentError("basis: expected a list of non-empty strings")
        if len(set(basis)) != len(basis):
            raise DocumentError("basis: labels must be distinct")
        self.basis = basis
        self.index = {b: i for i, b in enumerate(basis)}

    def _get(self, key: str):
        if key not in self.doc:
            raise DocumentError(f"missing required field {key!r}")
        return self.doc[key]

    def label(self, x, where: str) -> int:
        if x not in self.index:
            raise DocumentError(f"{where}: unknown basis label {x!r}")
        return self.index[x]

    def scalar(self, x, where: str):
        try:
            if isinstance(x, bool):
                raise ScalarParseError(f"booleans are not scalars: {x!r}")
            if isinstance(x, int):
                return self.ring(x)
            if isinstance(x, str):
                return self.ring.parse(x)
            return self.ring.from_json(x)
        except (ScalarParseError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"{where}: {exc}") from None

    def pairs(self, items, where: str) -> dict:
        if not isinstance(items, list):
            raise DocumentError(f"{where}: expected a list of [label, scalar] pairs")
        out: dict = {}
        for n, item in enumerate(items):
            if not isinstance(item, list) or len(item) != 2:
                raise DocumentError(f"{where}[{n}]: expected [label, scalar]")
            k = self.label(item[0], f"{where}[{n}]")
            c = self.scalar(item[1], f"{where}[{n}]")
            out[k] = out.get(k, self.ring.zero) + c
        return {k: c for k, c in out.items() if c}

    def algebra(self) -> FiniteDimAlgebra:
        mult: dict = {}
        rows = self._get("mult")
        if not isinstance(rows, list):
            raise DocumentError("mult: expected a list of [label, label, terms] rows")
        for n, row in enumerate(rows):
            where = f"mult[{n}]"
            if not isinstance(row, list) or len(row) != 3:
                raise DocumentError(f"{where}: expected [label, label, terms]")
            key = (self.label(row[0], where), self.label(row[1], where))
            if key in mult:
                raise DocumentError(f"{where}: duplicate product {row[0]}*{row[1]}")
            mult[key] = self.pairs(row[2], where)
        unit = self.pairs(self._get("unit"), "unit")
        named = {}
        elements = self.doc.get("elements", {})
        if not isinstance(elements, Mapping):
            raise DocumentError("elements: expected an object of name -> terms")
        for name, terms in elements.items():
            named[name] = self.pairs(terms, f"elements[{name!r}]")
        return FiniteDimAlgebra(self.basis, mult, unit, self.ring, self.doc.get("name", ""), named)

    def hopf(self, A: FiniteDimAlgebra) -> HopfAlgebra:
        n = len(self.basis)
        cop = {k: {} for k in range(n)}
        for m, row in enumerate(self._get("coproduct")):
            where = f"coproduct[{m}]"
            if not isinstance(row, list) or len(row) != 2 or not isinstance(row[1], list):
                raise DocumentError(f"{where}: expected [label, [[label, label, scalar], ...]]")
            k = self.label(row[0], where)
            for t, term in enumerate(row[1]):
                w = f"{where}[{t}]"
                if not isinstance(term, list) or len(term) != 3:
                    raise DocumentError(f"{w}: expected [label, label, scalar]")
                key = (self.label(term[0], w), self.label(term[1], w))
                c = cop[k].get(key, self.ring.zero) + self.scalar(term[2], w)
                if c:
                    cop[k][key] = c
                else:
                    cop[k].pop(key, None)
        counit = self._get("counit")
        if not isinstance(counit, list) or len(counit) != n:
            raise DocumentError(f"counit: expected a list of {n} scalars")
        eps = [self.scalar(c, f"counit[{i}]") for i, c in enumerate(counit)]
        anti = {k: {} for k in range(n)}
        for m, row in enumerate(self._get("antipode")):
            where = f"antipode[{m}]"
            if not isinstance(row, list) or len(row) != 2:
                raise DocumentError(f"{where}: expected [label, terms]")
            anti[self.label(row[0], where)] = self.pairs(row[1], where)
        return HopfAlgebra(A, cop, eps, anti, name=self.doc.get("name", ""))


def document_from_json(doc: Mapping) -> FiniteDimAlgebra | HopfAlgebra:
    """Build the algebra (or Hopf algebra, when any Hopf block is present).

    No axioms are checked here; run the checkers explicitly.
    """
    reader = _Reader(doc)
    fmt = doc.get("format", FORMAT)
    if fmt != FORMAT:
        raise DocumentError(f"unsupported document format {fmt!r} (expected {FORMAT!r})")
    A = reader.algebra()
    hopf_keys = [k for k in ("coproduct", "counit", "antipode") if k in doc]
    if not hopf_keys:
        return A
    if len(hopf_keys) != 3:
        missing = sorted({"coproduct", "counit", "antipode"} - set(hopf_keys))
        raise DocumentError(f"incomplete Hopf structure: missing {', '.join(missing)}")
    return reader.hopf(A)


def loads(text: str) -> FiniteDimAlgebra | HopfAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return document_from_json(doc)


def load(path: str | Path) -> FiniteDimAlgebra | HopfAlgebra:
    return loads(Path(path).read_text(encoding="utf-8"))


def save(obj: FiniteDimAlgebra | HopfAlgebra, path: str | Path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")
