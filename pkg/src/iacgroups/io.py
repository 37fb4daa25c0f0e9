"""JSON and text formats for fields, matrices, algebras, groups and reports.

Field elements are written as plain integers over a prime field and as
coefficient lists (lowest degree first) over an extension field. Algebra
tables list only the nonzero products e_i e_j with i < j.
"""

import json

import numpy as np

from . import linalg as la
from .algebra import alg_make
from .errors import FormatError
from .field import field_make
from .pcgroup import PcGroup


def field_to_json(F):
    return {"p": F.p, "k": F.k, "modulus": list(F.modulus) if F.modulus else []}


def field_from_json(d):
    try:
        p, k = int(d["p"]), int(d.get("k", 1))
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"bad field record: {d!r}") from e
    modulus = d.get("modulus") or None
    return field_make(p, k, tuple(modulus) if modulus else None)


def elem_to_json(F, code):
    code = int(code)
    if F.k == 1:
        return code
    return [int(c) for c in F.digits[code]]


def elem_from_json(F, x):
    if isinstance(x, list):
        if len(x) > F.k:
            raise FormatError(f"too many coefficients in {x!r}")
        return int(sum((int(c) % F.p) * F.p**i for i, c in enumerate(x)))
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"bad field element {x!r}")
    return int(x) % F.p


def vector_to_json(F, v):
    return [elem_to_json(F, c) for c in np.asarray(v).ravel()]


def vector_from_json(F, xs):
    return np.array([elem_from_json(F, x) for x in xs], dtype=np.int64)


def matrix_to_json(F, M):
    return [vector_to_json(F, row) for row in np.asarray(M)]


def matrix_from_json(F, rows):
    if not rows:
        return np.zeros((0, 0), dtype=np.int64)
    return np.stack([vector_from_json(F, row) for row in rows])


def algebra_to_json(L):
    F = L.field
    table = []
    for t, (i, j) in enumerate(la.pair_list(L.dim)):
        if L.table[t].any():
            table.append({"i": i, "j": j, "c": vector_to_json(F, L.table[t])})
    return {"field": field_to_json(F), "dim": L.dim, "table": table}


def algebra_from_json(d):
    try:
        F = field_from_json(d["field"])
        r = int(d["dim"])
        entries = [(int(e["i"]), int(e["j"]), vector_from_json(F, e["c"])) for e in d["table"]]
    except (KeyError, TypeError) as e:
        raise FormatError("an algebra needs field, dim and table") from e
    return alg_make(F, r, entries)


def group_to_json(G):
    rel = []
    for t, (i, j) in enumerate(la.pair_list(G.r)):
        if G.table[t].any():
            rel.append({"i": i, "j": j, "c": [int(c) for c in G.table[t]]})
    return {"group": {"p": G.p, "r": G.r, "commutators": rel}}


def group_from_json(d):
    try:
        g = d["group"]
        p, r = int(g["p"]), int(g["r"])
        T = np.zeros((r * (r - 1) // 2, r), dtype=np.int64)
        for e in g["commutators"]:
            T[la.pair_index(int(e["i"]), int(e["j"]), r)] = [int(c) for c in e["c"]]
    except (KeyError, TypeError) as e:
        raise FormatError("a group needs p, r and commutators") from e
    return PcGroup(p, r, T)


def census_to_json(result):
    classes = []
    for L, aut, size in zip(result["representatives"], result["aut_orders"], result["orbit_sizes"]):
        classes.append({"table": algebra_to_json(L)["table"], "aut_order": int(aut), "orbit_size": int(size)})
    return {"q": result["q"], "classes": classes}


def audit_to_json(report):
    keys = ("dim", "is_subalgebra", "powerful", "is_ideal", "powerfully_embedded")
    rows = [{k: row[k] for k in keys} | {"basis": row["basis"]} for row in report["rows"]]
    out = {k: v for k, v in report.items() if k not in ("rows", "mismatches")}
    out["mismatches"] = len(report["mismatches"])
    out["rows"] = rows
    return out


def _flat(x):
    return isinstance(x, list) and all(not isinstance(y, (list, dict)) for y in x)


def _encode(obj, level):
    pad = "  " * level
    if isinstance(obj, dict) and obj:
        items = [f'{pad}  {json.dumps(str(k))}: {_encode(v, level + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list) and obj and not _flat(obj):
        items = [pad + "  " + _encode(v, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj)


def dumps(obj):
    """Deterministic JSON text with flat lists kept on one line."""
    return _encode(obj, 0) + "\n"


def load_document(text):
    """Parse a JSON document and return an ACAlgebra or a PcGroup."""
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"not JSON: {e}") from e
    if not isinstance(d, dict):
        raise FormatError("expected a JSON object")
    if "group" in d:
        return group_from_json(d)
    return algebra_from_json(d)


__all__ = [
    "FormatError",
    "field_to_json",
    "field_from_json",
    "elem_to_json",
    "elem_from_json",
    "matrix_to_json",
    "matrix_from_json",
    "algebra_to_json",
    "algebra_from_json",
    "group_to_json",
    "group_from_json",
    "census_to_json",
    "audit_to_json",
    "dumps",
    "load_document",
]
