"""JSON serialization: the hopf-v1 schema, matched pairs, linear maps
and group tables.  Scalars use the field's serial form (integers,
"num/den" strings, or coefficient arrays)."""

from __future__ import annotations

import json

import numpy as np

from .fields import Field, field_from_json
from .hopf import FiniteGroupTable, HopfAlgebra, Presentation
from .linmap import LinMap
from .products import MatchedPair

HOPF_SCHEMA = "hopf-v1"


def _arr_to_json(field: Field, arr):
    if not isinstance(arr, np.ndarray) or arr.ndim == 0:
        value = arr[()] if isinstance(arr, np.ndarray) else arr
        return field.scalar_to_json(value)
    return [_arr_to_json(field, sub) for sub in arr]


def _arr_from_json(field: Field, data, shape):
    flat = []

    def walk(x, depth):
        if depth == len(shape):
            flat.append(field.scalar_from_json(x))
            return
        for sub in x:
            walk(sub, depth + 1)
    walk(data, 0)
    if field.is_prime:
        return np.array(flat, np.int64).reshape(shape)
    out = np.empty(len(flat), dtype=object)
    out[:] = flat
    return out.reshape(shape)


def hopf_to_json(H: HopfAlgebra) -> dict:
    f = H.field
    out = {
        "schema": HOPF_SCHEMA,
        "dim": H.dim,
        "labels": list(H.labels),
        "field": f.to_json(),
        "mult": _arr_to_json(f, H.mult),
        "unit": _arr_to_json(f, H.unit),
        "comult": _arr_to_json(f, H.comult),
        "counit": _arr_to_json(f, H.counit),
        "antipode": _arr_to_json(f, H.antipode),
    }
    if H.presentation is not None:
        out["presentation"] = {
            "atoms": list(H.presentation.atoms),
            "words": [list(w) for w in H.presentation.words],
        }
    return out


def hopf_from_json(obj: dict) -> HopfAlgebra:
    if obj.get("schema") != HOPF_SCHEMA:
        raise ValueError(f"expected schema {HOPF_SCHEMA!r}")
    f = field_from_json(obj["field"])
    d = int(obj["dim"])
    labels = tuple(obj["labels"])
    if len(labels) != d:
        raise ValueError("label count does not match dim")
    pres = None
    if "presentation" in obj:
        pres = Presentation(tuple(obj["presentation"]["atoms"]),
                            tuple(tuple(w)
                                  for w in obj["presentation"]["words"]))
    return HopfAlgebra(
        f, labels,
        _arr_from_json(f, obj["mult"], (d, d, d)),
        _arr_from_json(f, obj["unit"], (d,)),
        _arr_from_json(f, obj["comult"], (d, d, d)),
        _arr_from_json(f, obj["counit"], (d,)),
        _arr_from_json(f, obj["antipode"], (d, d)),
        presentation=pres,
    )


def matched_pair_to_json(mp: MatchedPair) -> dict:
    f = mp.field
    return {
        "schema": "matched-pair-v1",
        "A": hopf_to_json(mp.A),
        "H": hopf_to_json(mp.H),
        "left_action": _arr_to_json(f, mp.left),
        "right_action": _arr_to_json(f, mp.right),
    }


def matched_pair_from_json(obj: dict) -> MatchedPair:
    A = hopf_from_json(obj["A"])
    H = hopf_from_json(obj["H"])
    f = A.field
    left = _arr_from_json(f, obj["left_action"], (H.dim, A.dim, A.dim))
    right = _arr_from_json(f, obj["right_action"], (H.dim, A.dim, H.dim))
    return MatchedPair(A, H, left, right)


def linmap_to_json(m: LinMap) -> dict:
    return {
        "schema": "linmap-v1",
        "dom_hash": m.dom.key().hex(),
        "cod_hash": m.cod.key().hex(),
        "matrix": _arr_to_json(m.field, m.mat),
    }


def hopf_map_to_json(m: LinMap) -> dict:
    """A map whose domain travels inline (for factorization inputs)."""
    return {
        "schema": "hopf-map-v1",
        "dom": hopf_to_json(m.dom),
        "cod_hash": m.cod.key().hex(),
        "matrix": _arr_to_json(m.field, m.mat),
    }


def hopf_map_from_json(obj: dict, cod: HopfAlgebra) -> LinMap:
    dom = hopf_from_json(obj["dom"])
    if obj.get("cod_hash") and obj["cod_hash"] != cod.key().hex():
        raise ValueError("map codomain hash does not match the target file")
    mat = _arr_from_json(dom.field, obj["matrix"], (cod.dim, dom.dim))
    return LinMap(dom, cod, mat)


def group_table_to_json(G: FiniteGroupTable) -> dict:
    return G.to_json()


def group_table_from_json(obj: dict) -> FiniteGroupTable:
    return FiniteGroupTable.from_json(obj)


def dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
