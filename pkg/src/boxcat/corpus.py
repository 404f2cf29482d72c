"""Deterministic randomized test instances.

Randomness only ever generates instances (objects, modules, short exact
sequences, quadruples); no computation below consumes randomness.  All
generators take an explicit random.Random so sweeps are reproducible
from a seed.
"""

from __future__ import annotations

import random

from .exactla import ExactMatrix, FieldSpec, rank, solve_matrix
from .gradedcat import (
    GradedAlgebraObject,
    GradedModuleObject,
    GradedObject,
    conjugate_module,
    free_left_module,
    free_right_module,
    module_object_direct_sum,
)


def random_graded_object(rng: random.Random, group, max_total: int = 2,
                         min_total: int = 1) -> GradedObject:
    total = rng.randint(min_total, max_total)
    grades = sorted(rng.randrange(group.order) for _ in range(total))
    return GradedObject(group, grades)


def random_grade_preserving_invertible(rng: random.Random, obj: GradedObject,
                                       field: FieldSpec) -> ExactMatrix:
    """Random invertible map with zero blocks off the grade diagonal."""
    n = obj.dim
    for _ in range(64):
        flat = [field.zero] * (n * n)
        for r in range(n):
            for c in range(n):
                if obj.grades[r] == obj.grades[c]:
                    if field.kind == "prime":
                        flat[r * n + c] = rng.randrange(field.p)
                    else:
                        flat[r * n + c] = rng.randint(-2, 2)
        m = ExactMatrix(n, n, flat, field)
        if rank(m) == n:
            return m
    raise RuntimeError("failed to sample an invertible grade-preserving map")


def random_free_right(rng: random.Random, b: GradedAlgebraObject,
                      max_total: int = 2, conjugated: bool = False) -> GradedModuleObject:
    c = random_graded_object(rng, b.group, max_total)
    m = free_right_module(b, c, validate=False)
    if conjugated:
        u = random_grade_preserving_invertible(rng, m.obj, b.field)
        m = conjugate_module(m, u)
    return m


def random_free_left(rng: random.Random, a: GradedAlgebraObject,
                     max_total: int = 2, conjugated: bool = False) -> GradedModuleObject:
    c = random_graded_object(rng, a.group, max_total)
    m = free_left_module(a, c, validate=False)
    if conjugated:
        u = random_grade_preserving_invertible(rng, m.obj, a.field)
        m = conjugate_module(m, u)
    return m


def random_ses(rng: random.Random, b: GradedAlgebraObject, max_total: int = 2):
    """Short exact sequence 0 -> x -> y -> z -> 0 of right module objects,
    with the middle term conjugated away from its split coordinates."""
    x = random_free_right(rng, b, max_total)
    z = random_free_right(rng, b, max_total)
    y0 = module_object_direct_sum(x, z)
    u = random_grade_preserving_invertible(rng, y0.obj, b.field)
    y = conjugate_module(y0, u)
    uinv = solve_matrix(u, ExactMatrix.identity(u.rows, b.field))
    fld = b.field
    dx, dz = x.dim, z.dim
    incl = ExactMatrix(dx + dz, dx,
                       [fld.one if r == c else fld.zero
                        for r in range(dx + dz) for c in range(dx)], fld)
    proj = ExactMatrix(dz, dx + dz,
                       [fld.one if c == dx + r else fld.zero
                        for r in range(dz) for c in range(dx + dz)], fld)
    f = u @ incl
    g = proj @ uinv
    return (x, y, z, f, g)


def random_hom_quadruple(rng: random.Random, a: GradedAlgebraObject,
                         b: GradedAlgebraObject, max_total: int = 1):
    """(x, x', y, y') for the hom-formula sweep: small free modules,
    occasionally conjugated so nothing is in split coordinates."""
    conj = rng.random() < 0.3
    x = random_free_left(rng, a, max_total, conjugated=conj)
    xp = random_free_left(rng, a, max_total, conjugated=rng.random() < 0.3)
    y = random_free_right(rng, b, max_total, conjugated=rng.random() < 0.3)
    yp = random_free_right(rng, b, max_total, conjugated=conj)
    return x, xp, y, yp


def random_coherence_instance(rng: random.Random, a: GradedAlgebraObject,
                              b: GradedAlgebraObject, max_total: int = 2):
    """(x, c, c', y) for pentagon and triangle instances."""
    x = random_free_left(rng, a, 1)
    y = random_free_right(rng, b, 1)
    c = random_graded_object(rng, a.group, max_total)
    cp = random_graded_object(rng, a.group, max_total)
    return x, c, cp, y
