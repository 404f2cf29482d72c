"""Finite groups presented by full multiplication tables.

All grading groups in this artifact have order <= 24, so every axiom is
checked exhaustively (associativity is O(n^3)) and conjugacy classes are
found by plain orbit enumeration.
"""

from __future__ import annotations

import json
from itertools import permutations


class GroupValidationError(ValueError):
    """The table fails a group axiom; the message names the witness."""


class FiniteGroup:
    """Group on elements 0..n-1 given by its Cayley table.

    table[i][j] is the product i*j.  Identity and inverses are inferred
    and the axioms are verified at construction time.
    """

    __slots__ = ("order", "table", "identity", "inverse", "label")

    def __init__(self, table, label: str = "explicit"):
        n = len(table)
        tbl = tuple(tuple(row) for row in table)
        for i, row in enumerate(tbl):
            if len(row) != n:
                raise GroupValidationError(f"row {i} has length {len(row)}, expected {n}")
            for j, v in enumerate(row):
                if not (isinstance(v, int) and 0 <= v < n):
                    raise GroupValidationError(f"entry table[{i}][{j}] = {v!r} out of range")
        ident = None
        for e in range(n):
            if all(tbl[e][x] == x and tbl[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise GroupValidationError("no two-sided identity element")
        inv = [None] * n
        for x in range(n):
            for y in range(n):
                if tbl[x][y] == ident and tbl[y][x] == ident:
                    inv[x] = y
                    break
            if inv[x] is None:
                raise GroupValidationError(f"element {x} has no inverse")
        for a in range(n):
            for b in range(n):
                ab = tbl[a][b]
                for c in range(n):
                    if tbl[ab][c] != tbl[a][tbl[b][c]]:
                        raise GroupValidationError(
                            f"associativity fails at triple ({a}, {b}, {c})"
                        )
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "table", tbl)
        object.__setattr__(self, "identity", ident)
        object.__setattr__(self, "inverse", tuple(inv))
        object.__setattr__(self, "label", label)

    def __setattr__(self, *a):
        raise AttributeError("FiniteGroup is immutable")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conjugate(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(self.order))

    def exponent(self) -> int:
        """Least m with x^m = identity for all x."""
        from math import lcm

        m = 1
        for x in range(self.order):
            k, y = 1, x
            while y != self.identity:
                y = self.table[y][x]
                k += 1
            m = lcm(m, k)
        return m

    def conjugacy_classes(self) -> list[frozenset]:
        """Orbits of the conjugation action, by exhaustive enumeration."""
        seen = set()
        classes = []
        for x in range(self.order):
            if x in seen:
                continue
            orbit = {self.conjugate(g, x) for g in range(self.order)}
            seen |= orbit
            classes.append(frozenset(orbit))
        return classes

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, label={self.label!r})"


def conjugacy_class_count(g: FiniteGroup) -> int:
    return len(g.conjugacy_classes())


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, label=f"cyclic({n})")


def symmetric_group(n: int) -> FiniteGroup:
    """S_n on permutations of 0..n-1 in lexicographic order.

    Product sigma*tau acts by tau first, then sigma (function composition).
    """
    if n < 1:
        raise ValueError("symmetric group degree must be >= 1")
    elems = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}
    table = [
        [index[tuple(p[q[k]] for k in range(n))] for q in elems]
        for p in elems
    ]
    return FiniteGroup(table, label=f"symmetric({n})")


def explicit_group(table, label: str = "explicit") -> FiniteGroup:
    return FiniteGroup(table, label=label)


def group_from_json(doc) -> FiniteGroup:
    """Group file format: {"order": n, "table": [[...]]}, 0-based indices."""
    if isinstance(doc, (str, bytes)):
        doc = json.loads(doc)
    if not isinstance(doc, dict) or "table" not in doc:
        raise GroupValidationError("group document must contain a 'table' field")
    table = doc["table"]
    if "order" in doc and doc["order"] != len(table):
        raise GroupValidationError(
            f"declared order {doc['order']} != table size {len(table)}"
        )
    return FiniteGroup(table, label=doc.get("label", "file"))


def load_group(path: str) -> FiniteGroup:
    with open(path, "r", encoding="utf-8") as fh:
        return group_from_json(json.load(fh))


def build_group(spec: str) -> FiniteGroup:
    """Builtin group names: 'cyclic:n' / 'symmetric:n', else a file path."""
    if spec.startswith("cyclic:"):
        return cyclic_group(int(spec.split(":", 1)[1]))
    if spec.startswith("symmetric:"):
        return symmetric_group(int(spec.split(":", 1)[1]))
    return load_group(spec)
