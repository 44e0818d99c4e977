import json

import pytest

from rbx import document
from rbx.algebra import FiniteDimAlgebra
from rbx.document import DocumentError, dumps, load, loads, save, to_document
from rbx.families import BUILTIN_DESCRIPTORS, build_family, hecke_algebra
from rbx.hopf import HopfAlgebra


def _algebra(obj):
    return obj.algebra if isinstance(obj, HopfAlgebra) else obj


@pytest.mark.parametrize("descriptor", [*BUILTIN_DESCRIPTORS, "hecke:I2:4", "group:dihedral:3"])
def test_round_trip_is_byte_identical(descriptor):
    obj = build_family(descriptor)
    text = dumps(obj)
    back = loads(text)
    assert isinstance(back, HopfAlgebra) == isinstance(obj, HopfAlgebra)
    assert dumps(back) == text
    A, B = _algebra(obj), _algebra(back)
    assert B.basis == A.basis
    assert B.structure_constants() == A.structure_constants()
    assert B.ring == A.ring
    assert B.check_associativity().passed and B.check_unit().passed
    if isinstance(back, HopfAlgebra):
        assert all(r.passed for r in back.check_all())
    assert B.named_elements == {k: B.element(v.coeffs) for k, v in A.named_elements.items()}


def test_sweedler_document_shape():
    doc = to_document(build_family("sweedler"))
    assert doc["format"] == document.FORMAT
    assert doc["ring"] == {"type": "rational"}
    assert doc["basis"] == ["1", "x", "y", "xy"]
    assert ["y", "x", [["xy", {"rat": [-1, 1]}]]] in doc["mult"]
    assert doc["counit"] == [{"rat": [1, 1]}, {"rat": [1, 1]}, {"rat": [0, 1]}, {"rat": [0, 1]}]


def test_hecke_document_has_laurent_literals():
    text = dumps(hecke_algebra("A:2"))
    assert '"lau"' in text
    assert '"elements"' in text and "C[s1]" in text


def test_quantum_document_ring_block():
    doc = to_document(build_family("uqsl2:3"))
    assert doc["ring"] == {"type": "cyclotomic", "d": 3}


def test_save_and_load(tmp_path):
    H = build_family("sweedler")
    path = tmp_path / "sw.json"
    save(H, path)
    assert path.read_text(encoding="utf-8") == dumps(H)
    assert dumps(load(path)) == dumps(H)


def test_hand_written_document_with_expression_scalars():
    doc = {
        "ring": {"type": "laurent", "var": "v"},
        "basis": ["1", "t"],
        "unit": [["1", 1]],
        "mult": [
            ["1", "1", [["1", 1]]],
            ["1", "t", [["t", 1]]],
            ["t", "1", [["t", 1]]],
            ["t", "t", [["t", "v^2 - 1"], ["1", "v^2"]]],
        ],
    }
    A = document.document_from_json(doc)
    assert isinstance(A, FiniteDimAlgebra)
    assert A.check_associativity().passed and A.check_unit().passed
    t = A.basis_element("t")
    v = A.ring.generator()
    assert t * t == (v * v - 1) * t + v * v * A.unit


BASE = {
    "ring": {"type": "rational"},
    "basis": ["1", "a"],
    "unit": [["1", 1]],
    "mult": [["1", "1", [["1", 1]]], ["1", "a", [["a", 1]]], ["a", "1", [["a", 1]]]],
}


@pytest.mark.parametrize(
    "patch, message",
    [
        ({"basis": ["1", "1"]}, "distinct"),
        ({"basis": "1a"}, "basis"),
        ({"mult": [["1", "b", []]]}, "unknown basis label 'b'"),
        ({"mult": [["1", "1", [["1", "1/0"]]]]}, "mult[0][0]"),
        ({"mult": [["1", "1", []], ["1", "1", []]]}, "duplicate"),
        ({"ring": {"type": "quaternion"}}, "ring"),
        ({"format": "other/2"}, "unsupported document format"),
        ({"counit": [1, 0]}, "missing antipode, coproduct"),
    ],
)
def test_document_errors(patch, message):
    with pytest.raises(DocumentError) as info:
        document.document_from_json({**BASE, **patch})
    assert message in str(info.value)


def test_missing_field():
    doc = dict(BASE)
    del doc["mult"]
    with pytest.raises(DocumentError, match="missing required field 'mult'"):
        document.document_from_json(doc)


def test_invalid_json_reports_position():
    with pytest.raises(DocumentError, match="line 2, column"):
        loads('{\n  "basis": [,]\n}')


def test_broken_associativity_survives_loading():
    doc = json.loads(dumps(build_family("sweedler")))
    for row in doc["mult"]:
        if row[0] == "y" and row[1] == "x":
            row[2] = [["xy", {"rat": [1, 1]}]]
    H = document.document_from_json(doc)
    r = H.algebra.check_associativity()
    assert not r.passed and r.labels == ("x", "y", "x")
