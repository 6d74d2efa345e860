import json
import random
from fractions import Fraction

import pytest

from multilin import randgen as rg
from multilin import serialize as ser
from multilin.errors import DimensionError, SchemaError
from multilin.multilinear import AltMultiMap, BilinearMap, SymMultiMap
from multilin.symalg import SymMatrix


def roundtrip(obj, to_json, from_json, *extra):
    return from_json(json.loads(ser.dumps(to_json(obj))), *extra)


def test_rationals():
    assert ser.rational_to_json(Fraction(-3, 4)) == "-3/4"
    assert ser.rational_from_json(7) == 7
    assert ser.rational_from_json("2/6") == Fraction(1, 3)
    for bad in (0.5, True, None, "x", "1/0"):
        with pytest.raises(SchemaError):
            ser.rational_from_json(bad)


def test_graded_roundtrips():
    rng = random.Random(0)
    for _ in range(30):
        n, n2, p, pp = rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 2), rng.randint(0, 2)
        s = rg.sym(rng, n, n2, p, pp)
        assert roundtrip(s, ser.graded_to_json, ser.sym_from_json) == s
        a = rg.alt(rng, n, n2, p, pp)
        assert roundtrip(a, ser.graded_to_json, ser.alt_from_json) == a


def test_output_is_sparse_and_stable():
    m = SymMatrix(2, 2, 1, 1, [0, Fraction(1, 2), 0, 3])
    payload = ser.graded_to_json(m)
    assert payload["entries"] == [
        {"row": [1, 0], "col": [0, 1], "value": "1/2"},
        {"row": [0, 1], "col": [0, 1], "value": "3"},
    ]
    assert ser.dumps(payload) == ser.dumps(json.loads(ser.dumps(payload)))
    assert ser.dumps(payload).endswith("}\n")


def test_polymap_and_multimap_roundtrips():
    rng = random.Random(1)
    for _ in range(20):
        phi = rg.polymap(rng, rng.randint(1, 3), rng.randint(1, 3), rng.randint(0, 3), density=0.5)
        assert roundtrip(phi, ser.polymap_to_json, ser.polymap_from_json) == phi
        p = rng.randint(0, 3)
        m = SymMultiMap(p, rg.sym(rng, 2, 3, 1, p))
        assert roundtrip(m, ser.multimap_to_json, ser.multimap_from_json, "sym") == m
        m = AltMultiMap(p, rg.alt(rng, 2, 3, 1, p))
        assert roundtrip(m, ser.multimap_to_json, ser.multimap_from_json, "alt") == m
        c = BilinearMap(rg.sym(rng, 2, 3, 1, 2), 1)
        assert roundtrip(c, ser.bilinear_to_json, ser.bilinear_from_json) == c


def _sym_payload(**changes):
    payload = {"kind": "sym", "n": 2, "n_prime": 2, "p": 1, "p_prime": 1,
               "entries": [{"row": [1, 0], "col": [1, 0], "value": "1"}]}
    payload.update(changes)
    return payload


@pytest.mark.parametrize("payload,needle", [
    (_sym_payload(kind="alt"), "kind"),
    (_sym_payload(n=-1), "n"),
    (_sym_payload(entries=[{"row": [2, 0], "col": [1, 0], "value": "1"}]), "entries[0].row"),
    (_sym_payload(entries=[{"row": [1, 0], "col": [1, 0], "value": 0.5}]), "entries[0].value"),
    (_sym_payload(entries=[{"row": [1, 0], "col": [1], "value": "1"}]), "entries[0].col"),
    (_sym_payload(entries=[{"row": [1, 0], "col": [1, 0], "value": "1"}] * 2), "entries[1]"),
    ({"kind": "sym"}, "n"),
    ([], "object"),
])
def test_schema_errors_name_the_field(payload, needle):
    with pytest.raises(SchemaError) as info:
        ser.sym_from_json(payload)
    assert needle in str(info.value)


def test_alt_indices_must_be_strict():
    payload = {"kind": "alt", "n": 3, "n_prime": 3, "p": 2, "p_prime": 0,
               "entries": [{"row": [2, 1], "col": [], "value": "1"}]}
    with pytest.raises(SchemaError):
        ser.alt_from_json(payload)


def test_invalid_json_text():
    with pytest.raises(SchemaError):
        ser.loads("{not json", "a.json")


def test_bilinear_split_conflict():
    c = BilinearMap(SymMatrix(1, 3, 1, 2), 1)
    payload = ser.bilinear_to_json(c)
    with pytest.raises(DimensionError):
        ser.bilinear_from_json(payload, split=2)
    del payload["split"]
    assert ser.bilinear_from_json(payload, split=1) == c
