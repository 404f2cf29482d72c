import json

import pytest

from boxcat.groups import (
    FiniteGroup,
    GroupValidationError,
    build_group,
    conjugacy_class_count,
    cyclic_group,
    explicit_group,
    group_from_json,
    symmetric_group,
)


def test_trivial_group():
    g = cyclic_group(1)
    assert g.order == 1
    assert g.identity == 0
    assert conjugacy_class_count(g) == 1


def test_cyclic_three_inverses():
    g = cyclic_group(3)
    assert g.order == 3
    for x in range(1, 3):
        assert g.inv(x) != x
        assert g.mul(x, g.inv(x)) == g.identity


def test_cyclic_class_count_equals_order():
    for n in (1, 2, 3, 4, 6):
        assert conjugacy_class_count(cyclic_group(n)) == n


def test_symmetric_three():
    g = symmetric_group(3)
    assert g.order == 6
    assert conjugacy_class_count(g) == 3
    assert not g.is_abelian()
    assert g.exponent() == 6


def test_symmetric_four_class_count():
    assert conjugacy_class_count(symmetric_group(4)) == 5


def test_product_inverse_antihomomorphism():
    for g in (cyclic_group(4), symmetric_group(3)):
        for a in range(g.order):
            for b in range(g.order):
                assert g.inv(g.mul(a, b)) == g.mul(g.inv(b), g.inv(a))


def test_nonassociative_table_rejected():
    # 2x2 table with an identity but broken associativity is impossible;
    # use order 3: row/col 0 as identity, rest deliberately broken
    table = [[0, 1, 2], [1, 0, 0], [2, 0, 1]]
    with pytest.raises(GroupValidationError):
        FiniteGroup(table)


def test_missing_identity_rejected():
    table = [[1, 1], [1, 1]]  # associative but has no identity
    with pytest.raises(GroupValidationError):
        FiniteGroup(table)


def test_json_roundtrip(tmp_path):
    g = symmetric_group(3)
    doc = {"order": g.order, "table": [list(r) for r in g.table]}
    g2 = group_from_json(json.dumps(doc))
    assert g2.table == g.table
    path = tmp_path / "s3.json"
    path.write_text(json.dumps(doc))
    g3 = build_group(str(path))
    assert g3.table == g.table


def test_json_order_mismatch():
    with pytest.raises(GroupValidationError):
        group_from_json({"order": 3, "table": [[0]]})


def test_build_group_builtins():
    assert build_group("cyclic:5").order == 5
    assert build_group("symmetric:3").order == 6


def test_explicit_group_klein_four():
    # Z/2 x Z/2 as an explicit table
    table = [
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ]
    g = explicit_group(table, label="klein")
    assert g.is_abelian()
    assert conjugacy_class_count(g) == 4
    assert g.exponent() == 2
