import io as _io
import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from iacgroups import algebra as A
from iacgroups import io
from iacgroups.cli import main
from iacgroups.constructions import family_sec6
from iacgroups.errors import FormatError
from iacgroups.field import field_make
from iacgroups.pcgroup import group_from_algebra

F3 = field_make(3)
F9 = field_make(3, 2)


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", _io.StringIO(stdin))
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_algebra(tmp_path, L, name="alg.json"):
    path = tmp_path / name
    path.write_text(io.dumps(io.algebra_to_json(L)))
    return str(path)


# -- formats ----------------------------------------------------------------------

def test_field_json():
    assert io.field_to_json(F3) == {"p": 3, "k": 1, "modulus": []}
    d = io.field_to_json(F9)
    assert io.field_from_json(d) == F9
    assert len(d["modulus"]) == 3


def test_element_encoding():
    assert io.elem_to_json(F3, 2) == 2
    for code in range(9):
        assert io.elem_from_json(F9, io.elem_to_json(F9, code)) == code
    with pytest.raises(FormatError):
        io.elem_from_json(F3, "1")
    with pytest.raises(FormatError):
        io.elem_from_json(F9, [1, 2, 0, 1])


def test_matrix_round_trip():
    M = np.arange(12).reshape(3, 4) % 9
    back = io.matrix_from_json(F9, json.loads(json.dumps(io.matrix_to_json(F9, M))))
    assert np.array_equal(back, M)


@pytest.mark.parametrize("L", [A.sl2(F3), A.th52b_algebra(field_make(7)), A.sl2(F9),
                               A.abelian_algebra(F3, 2), family_sec6(2, 5, 11)["algebra"]])
def test_algebra_round_trip_is_bit_exact(L):
    text = io.dumps(io.algebra_to_json(L))
    L2 = io.load_document(text)
    assert L2.field == L.field and np.array_equal(L2.table, L.table)
    assert io.dumps(io.algebra_to_json(L2)) == text


def test_table_lists_only_nonzero_pairs():
    d = io.algebra_to_json(A.direct_sum(A.sl2(F3), A.abelian_algebra(F3, 1)))
    assert [(e["i"], e["j"]) for e in d["table"]] == [(0, 1), (0, 2), (1, 2)]


def test_group_round_trip():
    G = group_from_algebra(A.sl2(F3))
    text = io.dumps(io.group_to_json(G))
    G2 = io.load_document(text)
    assert G2.p == 3 and np.array_equal(G2.table, G.table)


def test_bad_documents():
    for text in ("[1, 2]", "{", '{"dim": 3}', '{"group": {"p": 3}}'):
        with pytest.raises(FormatError):
            io.load_document(text)


def test_dumps_is_deterministic():
    doc = {"b": [[1, 2], [3, 4]], "a": {"x": []}}
    assert io.dumps(doc) == io.dumps(json.loads(io.dumps(doc)))
    assert io.dumps(doc).endswith("}\n")


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([(3, 1), (5, 1), (3, 2), (5, 2)]), st.integers(2, 5), st.data())
def test_random_tables_round_trip(pk, r, data):
    F = field_make(*pk)
    D = r * (r - 1) // 2
    T = np.array(data.draw(st.lists(st.integers(0, F.q - 1), min_size=D * r, max_size=D * r))).reshape(D, r)
    L = A.ACAlgebra(F, r, T)
    L2 = io.load_document(io.dumps(io.algebra_to_json(L)))
    assert np.array_equal(L2.table, T)


# -- command line -----------------------------------------------------------------

def test_census_q3(capsys):
    code, out, _ = run(capsys, "census", "--q", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["q"] == 3
    assert [c["aut_order"] for c in doc["classes"]] == [20, 5]


def test_census_is_byte_identical(capsys):
    _, first, _ = run(capsys, "census", "--q", "7")
    _, second, _ = run(capsys, "census", "--q", "7")
    assert first == second


def test_construct_and_roundtrip(capsys, tmp_path):
    out_path = tmp_path / "sl2_f3.json"
    assert run(capsys, "construct", "sl2", "--p", "3", "-o", str(out_path))[0] == 0
    code, out, _ = run(capsys, "roundtrip", str(out_path))
    assert code == 0 and "tables identical: true" in out


def test_gamma_piped_to_verify(capsys, monkeypatch):
    _, text, _ = run(capsys, "construct", "gamma", "--m", "6", "--p", "13")
    code, out, _ = run(capsys, "verify", "-", stdin=text, monkeypatch=monkeypatch)
    assert code == 0
    lines = set(out.splitlines())
    assert {"jacobi=false", "malcev=true", "simple=true"} <= lines


def test_verify_expect_failure(capsys, tmp_path):
    path = write_algebra(tmp_path, A.sl2(F3))
    code, out, _ = run(capsys, "verify", path, "--expect", "jacobi=false")
    assert code == 1 and "violated: jacobi" in out
    assert run(capsys, "verify", path, "--expect", "jacobi=true")[0] == 0


def test_verify_group_input(capsys, tmp_path):
    path = tmp_path / "g.json"
    path.write_text(io.dumps(io.group_to_json(group_from_algebra(A.sl2(F3)))))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and "simple=true" in out


def test_aut_and_list(capsys, tmp_path):
    path = write_algebra(tmp_path, A.sl2(F3))
    code, out, _ = run(capsys, "aut", path)
    assert code == 0 and json.loads(out)["count"] == 24
    code, out, _ = run(capsys, "aut", path, "--list")
    doc = json.loads(out)
    assert len(doc["automorphisms"]) == 24 and sum(doc["order_profile"].values()) == 24


def test_iso(capsys, tmp_path):
    L = A.th52b_algebra(field_make(7))
    p1 = write_algebra(tmp_path, L, "a.json")
    g = np.array([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 1]])
    p2 = write_algebra(tmp_path, L.transport(g), "b.json")
    code, out, _ = run(capsys, "iso", p1, p2)
    assert code == 0 and json.loads(out)["isomorphic"]
    p3 = write_algebra(tmp_path, A.abelian_algebra(field_make(7), 4), "c.json")
    code, out, _ = run(capsys, "iso", p1, p3)
    assert code == 1 and "isomorphic=false" in out


def test_decompose(capsys, tmp_path):
    path = write_algebra(tmp_path, A.direct_sum(A.sl2(F3), A.sl2(F3)))
    code, out, _ = run(capsys, "decompose", path)
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 2
    assert all(d["simple"] and d["isomorphic_to_first"] for d in doc["ideals"])


def test_decompose_abelian_is_verification_failure(capsys, tmp_path):
    path = write_algebra(tmp_path, A.abelian_algebra(F3, 2))
    code, out, _ = run(capsys, "decompose", path)
    assert code == 1 and "AbelianAlgebra" in out


def test_dualize_round_trip(capsys, tmp_path):
    src = write_algebra(tmp_path, A.sl2(F3))
    grp = tmp_path / "g.json"
    assert run(capsys, "dualize", "--to-group", src, "-o", str(grp))[0] == 0
    code, out, _ = run(capsys, "dualize", "--to-algebra", str(grp))
    assert code == 0 and out == open(src).read()


def test_dualize_pcp(capsys, tmp_path):
    src = write_algebra(tmp_path, A.sl2(F3))
    code, out, _ = run(capsys, "dualize", "--to-group", "--format", "pcp", src)
    assert code == 0 and out.strip()


def test_audit(capsys, tmp_path):
    path = write_algebra(tmp_path, A.sl2(F3))
    code, out, _ = run(capsys, "audit", path)
    doc = json.loads(out)
    assert code == 0 and doc["agree"] and doc["proper_nonzero"] == 26
    assert set(doc["rows"][0]) >= {"dim", "is_subalgebra", "powerful", "is_ideal", "powerfully_embedded"}


def test_audit_budget_exceeded(capsys, tmp_path):
    path = write_algebra(tmp_path, A.direct_sum(A.sl2(F3), A.sl2(F3)))
    code, _, err = run(capsys, "audit", path)
    assert code == 1 and "TooLargeForExhaustive" in err


def test_cg(capsys):
    code, out, _ = run(capsys, "cg", "--m", "2", "--n", "2", "--p", "11")
    doc = json.loads(out)
    assert code == 0 and all(doc["checks"].values())
    assert [(x["det"], x["k"]) for x in doc["tensor"]] == [(0, 4), (1, 2), (2, 0)]


@pytest.mark.parametrize("argv,needle", [
    (["census"], "--q"),
    (["cg", "--m", "1"], "--n"),
    (["census", "--q", "3", "--budget", "0"], "--budget"),
    (["frobnicate"], "frobnicate"),
])
def test_usage_errors(capsys, argv, needle):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
    assert needle in capsys.readouterr().err


@pytest.mark.parametrize("argv,name", [
    (["census", "--q", "5"], "UnsupportedQ"),
    (["construct", "gamma", "--m", "4", "--p", "13"], "BadCongruence"),
    (["construct", "sec6", "--b", "2", "--n", "4", "--q", "13"], "BadHypothesis"),
])
def test_typed_input_errors(capsys, argv, name):
    code, _, err = run(capsys, *argv)
    assert code == 2 and name in err


def test_missing_file(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "/nonexistent/file.json"])
    assert info.value.code == 2


def test_malformed_input(capsys, monkeypatch):
    code, _, err = run(capsys, "verify", "-", stdin="not json", monkeypatch=monkeypatch)
    assert code == 2 and "FormatError" in err
