"""Acceptance suite: the structural identities the package exists to
verify, each as exact integer/matrix equality, one line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import random

import pytest

from boxcat.exactla import ExactMatrix, GF, QQ, rank
from boxcat.groups import conjugacy_class_count, cyclic_group, symmetric_group
from boxcat.algebra import (
    group_algebra,
    matrix_algebra,
    split_simple_count,
    tensor_product_algebra,
)
from boxcat.gradedcat import (
    dual_object_with_zigzag,
    free_right_module,
    graded_group_algebra,
    exactness_probe,
    line_object,
    regular_left_module,
    regular_right_module,
    unit_algebra_object,
    unit_object,
)
from boxcat.modcat import (
    end_comparison_to_algebra,
    internal_end,
    internal_hom,
    reconstruction_counit_check,
    reconstruction_unit_check,
)
from boxcat.balanced import (
    EnvelopingAlgebra,
    box_object,
    build_balanced_product,
    coequalizer_presentation,
    corner_functor_bimodule,
    extend_balanced_functor,
    hom_formula_check,
    identity_functor_bimodule,
    module_as_functor_bimodule,
    pentagon_check,
    simple_count_balanced,
    triangle_check,
)
from boxcat.corpus import (
    random_coherence_instance,
    random_free_left,
    random_free_right,
    random_graded_object,
    random_hom_quadruple,
    random_ses,
)

GROUPS = {
    "Z2/Q": (cyclic_group(2), QQ),
    "Z3/F7": (cyclic_group(3), GF(7)),
    "S3/Q": (symmetric_group(3), QQ),
}


@pytest.fixture(scope="module")
def group_algebras():
    return {tag: graded_group_algebra(grp, fld)
            for tag, (grp, fld) in GROUPS.items()}


@pytest.fixture(scope="module")
def balanced_products(group_algebras):
    # validate=True: the enveloping algebras pass the exhaustive
    # associativity check once here and are reused below
    return {tag: build_balanced_product(a, a, validate=True)
            for tag, a in group_algebras.items()}


def announce(num, desc, ok):
    print(f"ACCEPTANCE {num:2d} [{'PASS' if ok else 'FAIL'}] {desc}")
    assert ok, f"criterion {num} failed: {desc}"


def test_criterion_01_group_representation_count(balanced_products):
    expected = {"Z2/Q": 2, "Z3/F7": 3, "S3/Q": 3}
    ok = True
    for tag, bp in balanced_products.items():
        n = simple_count_balanced(bp, assume_split=True)
        grp = GROUPS[tag][0]
        ok &= n == expected[tag] == conjugacy_class_count(grp)
    announce(1, "bimodule simple count = conjugacy class count "
                "(2, 3, 3 for Z2, Z3 mod 7, S3)", ok)


def test_criterion_02_unit_law_simple_count():
    ok = True
    for tag, (grp, fld) in GROUPS.items():
        u = unit_algebra_object(grp, fld)
        bp = build_balanced_product(u, u)
        ok &= simple_count_balanced(bp, assume_split=True) == grp.order
    announce(2, "unit algebras on both sides give exactly |K| simples", ok)


def test_criterion_03_hom_formula_sweep(group_algebras):
    rng = random.Random(2024)
    ok = True
    for tag, a in group_algebras.items():
        for _ in range(50):
            max_total = 1 if tag == "S3/Q" else 2
            x, xp, y, yp = random_hom_quadruple(rng, a, a, max_total=max_total)
            res = hom_formula_check(x, xp, y, yp)
            ok &= res.lhs == res.rhs
    announce(3, "hom formula lhs = rhs on 50 randomized quadruples per group", ok)


def test_criterion_04_internal_hom_of_unit_is_group_algebra(group_algebras):
    ok = True
    for tag, a in group_algebras.items():
        reg = regular_right_module(a)
        ih = internal_hom(reg, reg)
        ok &= ih.component_dims() == (1,) * a.group.order
    announce(4, "internal end of the unit object has dimension 1 in every grade", ok)


def test_criterion_05_zigzag_equations():
    rng = random.Random(5)
    ok = True
    for tag, (grp, fld) in GROUPS.items():
        objs = [unit_object(grp)]
        objs += [line_object(grp, g) for g in range(grp.order)]
        objs += [random_graded_object(rng, grp, max_total=4) for _ in range(8)]
        for obj in objs:
            ok &= dual_object_with_zigzag(obj, fld).report.ok
    announce(5, "all four zigzag composites are identity matrices on the corpus", ok)


def test_criterion_06_balancing_coherence(group_algebras):
    rng = random.Random(6)
    ok = True
    for tag, a in group_algebras.items():
        for _ in range(30):
            x, c, cp, y = random_coherence_instance(rng, a, a)
            ok &= pentagon_check(x, c, cp, y).ok
            ok &= triangle_check(x, y).ok
    announce(6, "pentagon and triangle instances close exactly on 30 "
                "randomized triples per group", ok)


def test_criterion_07_morita_reconstruction(group_algebras):
    rng = random.Random(7)
    ok = True
    for tag, a in group_algebras.items():
        reg = regular_right_module(a)
        endalg, ih = internal_end(reg)
        ok &= end_comparison_to_algebra(reg, endalg, ih).ok
        ok &= reconstruction_unit_check(reg, regular_right_module(endalg), ih).ok
        ok &= reconstruction_counit_check(reg, reg, endalg, ih).ok
        if tag != "S3/Q":
            # free rank-2 projective generator and random free targets
            p = free_right_module(a, random_graded_object(rng, a.group, 2))
            endp, ihp = internal_end(p)
            m = random_free_right(rng, a, 2)
            ok &= reconstruction_counit_check(p, m, endp, ihp).ok
            ok &= reconstruction_unit_check(p, regular_right_module(endp), ihp).ok
    announce(7, "reconstruction unit and counit are isomorphisms for free "
                "projective generators; internal end of the regular module "
                "matches the algebra after normalization", ok)


def test_criterion_08_coequalizer_presentation(group_algebras):
    rng = random.Random(8)
    ok = True
    for tag, a in group_algebras.items():
        xs = [box_object(regular_left_module(a), regular_right_module(a),
                         validate=False)]
        n_extra = 1 if tag == "S3/Q" else 3
        for _ in range(n_extra):
            xs.append(box_object(
                random_free_left(rng, a, 1, conjugated=tag != "S3/Q"),
                random_free_right(rng, a, 1, conjugated=tag != "S3/Q"),
                validate=False,
            ))
        for x in xs:
            rep = coequalizer_presentation(x)
            ok &= rep.ok
    announce(8, "every corpus bimodule is isomorphic to the cokernel of its "
                "presentation difference map", ok)


def test_criterion_09_extension_soundness():
    # corpus kept at the two small groups: the construction is dimension
    # generic and the larger group adds minutes, not coverage
    rng = random.Random(9)
    ok = True
    for tag in ("Z2/Q", "Z3/F7"):
        grp, fld = GROUPS[tag]
        a = graded_group_algebra(grp, fld)
        env = EnvelopingAlgebra(a, a, validate=False)
        free_cap = 2 if tag == "Z2/Q" else 1
        xs = [
            box_object(regular_left_module(a), regular_right_module(a),
                       validate=False),
            box_object(random_free_left(rng, a, 1),
                       random_free_right(rng, a, free_cap), validate=False),
        ]
        ws = [identity_functor_bimodule(env)]
        from boxcat.algebra import AlgModule, central_primitive_idempotents

        e_alg = env.algebra
        ws.append(module_as_functor_bimodule(
            env, AlgModule(e_alg, "right", e_alg.dim,
                           [e_alg.right_mult_matrix(i) for i in range(e_alg.dim)],
                           validate=False)))
        if tag == "Z2/Q":
            idems = central_primitive_idempotents(e_alg)
            assert idems is not None
            ws += [corner_functor_bimodule(env, e) for e in idems]
        for w in ws:
            for x in xs:
                module, rep = extend_balanced_functor(w, env, x)
                ok &= rep.ok
                ok &= rep.details["extension_dim"] == rep.details["oracle_dim"]
    announce(9, "functor extension agrees with direct tensoring for every "
                "corpus functor/bimodule pair (dimension + full-rank map)", ok)


def test_criterion_10_plain_product_simple_counts_multiply():
    a = group_algebra(cyclic_group(2), QQ)
    b = group_algebra(symmetric_group(3), QQ)
    t = tensor_product_algebra(a, b)
    ok = split_simple_count(t, assume_split=True) == 6
    m = tensor_product_algebra(matrix_algebra(2, QQ), matrix_algebra(2, QQ))
    ok &= split_simple_count(m, assume_split=True) == 1
    announce(10, "plain product simple counts multiply (2 * 3 = 6; "
                 "matrix algebras give 1)", ok)


def test_criterion_11_exactness_probes(group_algebras):
    rng = random.Random(11)
    ok = True
    for tag, a in group_algebras.items():
        grp = a.group
        seq = random_ses(rng, a, max_total=1)
        for g in range(grp.order):
            ok &= exactness_probe(line_object(grp, g), seq).ok
        # pairing exactness in the right variable (fixed left argument)
        x = regular_left_module(a)
        m, y, z, f, g_map = seq
        ix = ExactMatrix.identity(x.dim, a.field)
        bf, bg = ix.kron(f), ix.kron(g_map)
        ok &= rank(bf) == x.dim * m.dim
        ok &= rank(bg) == x.dim * z.dim
        ok &= (bg @ bf).is_zero()
        ok &= rank(bf) + rank(bg) == x.dim * y.dim
        # and in the left variable (fixed right argument)
        seq_l = _left_ses(rng, a)
        ml, yl, zl, fl, gl = seq_l
        yr = regular_right_module(a)
        iy = ExactMatrix.identity(yr.dim, a.field)
        cf, cg = fl.kron(iy), gl.kron(iy)
        ok &= rank(cf) == ml.dim * yr.dim
        ok &= rank(cg) == zl.dim * yr.dim
        ok &= (cg @ cf).is_zero()
        ok &= rank(cf) + rank(cg) == yl.dim * yr.dim
    announce(11, "tensoring and pairing preserve short exact sequences "
                 "(exact rank arithmetic)", ok)


def _left_ses(rng, a):
    from boxcat.corpus import random_grade_preserving_invertible
    from boxcat.gradedcat import conjugate_module, module_object_direct_sum
    from boxcat.exactla import solve_matrix

    x = random_free_left(rng, a, 1)
    z = random_free_left(rng, a, 1)
    y0 = module_object_direct_sum(x, z)
    u = random_grade_preserving_invertible(rng, y0.obj, a.field)
    y = conjugate_module(y0, u)
    uinv = solve_matrix(u, ExactMatrix.identity(u.rows, a.field))
    fld = a.field
    dx, dz = x.dim, z.dim
    incl = ExactMatrix(dx + dz, dx,
                       [fld.one if r == c else fld.zero
                        for r in range(dx + dz) for c in range(dx)], fld)
    proj = ExactMatrix(dz, dx + dz,
                       [fld.one if c == dx + r else fld.zero
                        for r in range(dz) for c in range(dx + dz)], fld)
    return (x, y, z, u @ incl, proj @ uinv)
