"""JSON file formats for groups, algebras, and graded module objects.

Scalars: integers stay integers, other rationals are "p/q" strings,
prime-field elements are least residues.  Fields: "Q" or {"p": prime}.
Structure constants are dense nested arrays in files regardless of the
sparse in-memory form.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .exactla import FieldSpec, ExactMatrix, GF, QQ
from .algebra import FinAlgebra
from .groups import FiniteGroup
from .gradedcat import (
    GradedAlgebraObject,
    GradedModuleObject,
    GradedObject,
    graded_group_algebra,
    unit_algebra_object,
)


def encode_scalar(x):
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else str(f)


def decode_scalar(s, field: FieldSpec):
    if isinstance(s, str):
        return field.coerce(Fraction(s))
    return field.coerce(s)


def encode_field(field: FieldSpec):
    return "Q" if field.kind == "rational" else {"p": field.p}


def decode_field(doc) -> FieldSpec:
    if doc == "Q":
        return QQ
    if isinstance(doc, dict) and "p" in doc:
        return GF(int(doc["p"]))
    raise ValueError(f"unrecognized field spec {doc!r}")


def algebra_to_doc(a: FinAlgebra) -> dict:
    structure = [
        [[encode_scalar(c) for c in row] for row in plane]
        for plane in a.structure_constants()
    ]
    return {
        "dim": a.dim,
        "field": encode_field(a.field),
        "structure": structure,
        "unit": [encode_scalar(c) for c in a.unit],
    }


def algebra_from_doc(doc: dict) -> FinAlgebra:
    field = decode_field(doc["field"])
    n = doc["dim"]
    structure = doc["structure"]
    prods = {}
    for i in range(n):
        for j in range(n):
            prods[(i, j)] = [(k, decode_scalar(structure[i][j][k], field))
                             for k in range(n)]
    unit = [decode_scalar(c, field) for c in doc["unit"]]
    return FinAlgebra(n, field, prods, unit, label=doc.get("label", "file"))


def graded_algebra_to_doc(a: GradedAlgebraObject) -> dict:
    doc = algebra_to_doc(a.algebra)
    doc["grades"] = list(a.obj.grades)
    return doc


def graded_algebra_from_doc(doc: dict, group: FiniteGroup) -> GradedAlgebraObject:
    alg = algebra_from_doc(doc)
    obj = GradedObject(group, doc["grades"])
    return GradedAlgebraObject(obj, alg)


def module_object_to_doc(m: GradedModuleObject) -> dict:
    return {
        "side": m.side,
        "dim": m.dim,
        "grades": list(m.obj.grades),
        "action": [
            [[encode_scalar(mat[r, c]) for c in range(m.dim)] for r in range(m.dim)]
            for mat in m.action
        ],
    }


def module_object_from_doc(doc: dict, algebra: GradedAlgebraObject) -> GradedModuleObject:
    field = algebra.field
    dim = doc["dim"]
    obj = GradedObject(algebra.group, doc["grades"])
    action = []
    for mat in doc["action"]:
        flat = [decode_scalar(mat[r][c], field) for r in range(dim) for c in range(dim)]
        action.append(ExactMatrix(dim, dim, flat, field))
    return GradedModuleObject(doc["side"], algebra, obj, action)


def load_module_object(path: str, algebra: GradedAlgebraObject) -> GradedModuleObject:
    with open(path, "r", encoding="utf-8") as fh:
        return module_object_from_doc(json.load(fh), algebra)


def resolve_algebra_spec(spec: str, group: FiniteGroup,
                         field: FieldSpec) -> GradedAlgebraObject:
    """CLI algebra spec: 'group-algebra', 'unit', or a file path."""
    if spec == "group-algebra":
        return graded_group_algebra(group, field)
    if spec == "unit":
        return unit_algebra_object(group, field)
    with open(spec, "r", encoding="utf-8") as fh:
        return graded_algebra_from_doc(json.load(fh), group)


def parse_field_flag(flag: str) -> FieldSpec:
    """--field Q or --field Fp:prime."""
    if flag == "Q":
        return QQ
    if flag.startswith("Fp:"):
        return GF(int(flag.split(":", 1)[1]))
    raise ValueError(f"unrecognized field flag {flag!r} (use Q or Fp:p)")
