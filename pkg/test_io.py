# Tests for JSON import and export of algebras

import json

import pytest

from quadratic_superalgebras import catalog, io
from quadratic_superalgebras.core import InputError, LieSuperalgebra
from quadratic_superalgebras.quadratic import QuadraticLieSuperalgebra, validate_quadratic


def same_algebra(g, h):
    return g.labels == h.labels and g.basis == h.basis and all(
        g.bracket(g.vector(i), g.vector(j)) == h.bracket(h.vector(i), h.vector(j))
        for i in range(g.dim)
        for j in range(g.dim)
    )


@pytest.mark.parametrize("key", ["g_4_1_s", "g_6_s", "g_8_2_5_s", "g_8_decomposable", "g_6_3"])
def test_export_then_import(key, tmp_path):
    q = catalog.build(key)
    path = tmp_path / f"{key}.json"
    io.dump(q, path)
    again = io.load(path)
    assert isinstance(again, QuadraticLieSuperalgebra)
    assert again.name == q.name
    assert same_algebra(again.algebra, q.algebra)
    assert again.form.gram == q.form.gram


def test_plain_algebra_has_no_form():
    h = catalog.build("heisenberg", {"n": 2, "m": 1})
    document = json.loads(io.dumps(h))
    assert "form" not in document
    assert document["schema"] == 1
    again = io.loads(io.dumps(h))
    assert isinstance(again, LieSuperalgebra)
    assert same_algebra(again, h)


def test_fixture_matches_catalog(fixture_path, g41):
    loaded = io.load(fixture_path("g_4_1_s.json"))
    assert validate_quadratic(loaded, with_algebra=True).ok
    assert same_algebra(loaded.algebra, g41.algebra)
    assert loaded.form.gram == g41.form.gram


def test_malformed_documents():
    with pytest.raises(InputError):
        io.loads("{not json")
    with pytest.raises(InputError):
        io.loads(json.dumps({"basis": [{"label": "A", "parity": 2}]}))
    document = {
        "basis": [{"label": "A", "parity": 0}, {"label": "B", "parity": 0}],
        "brackets": [{"left": "A", "right": "B", "terms": [{"coeff": "0.5", "basis": "A"}]}],
    }
    with pytest.raises(InputError):
        io.loads(json.dumps(document))
    document["brackets"][0]["terms"][0]["basis"] = "C"
    document["brackets"][0]["terms"][0]["coeff"] = "1/2"
    with pytest.raises(InputError):
        io.loads(json.dumps(document))


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        io.load(tmp_path / "absent.json")
