"""Batch frontend: build balanced products from group/algebra files or
builtins, run the invariant suites over the built-in corpus, and check
the hom formula on supplied module-object files.

The JSON report goes to stdout, a human summary to stderr, and the exit
status is 0 exactly when every check passed.  Randomness (--seed) only
generates test instances, never enters a computation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .exactla import ExactMatrix, GF, QQ, kernel_basis, rank, cokernel
from .groups import build_group, conjugacy_class_count
from .algebra import (
    FinAlgebra,
    PreconditionError,
    hom_space,
    regular_left,
    regular_right,
    semisimplicity_certificate,
    splitting_field_ok,
    tensor_over_algebra,
    validate_algebra,
)
from .gradedcat import (
    dual_object_with_zigzag,
    exactness_probe,
    free_right_module,
    graded_group_algebra,
    line_object,
    regular_left_module,
    regular_right_module,
    validate_algebra_object,
    validate_module_object,
)
from .modcat import (
    end_comparison_to_algebra,
    generator_check,
    internal_end,
    internal_hom,
    reconstruction_counit_check,
    reconstruction_unit_check,
)
from .balanced import (
    EnvelopingAlgebra,
    box_object,
    build_balanced_product,
    coequalizer_presentation,
    extend_balanced_functor,
    hom_formula_check,
    identity_functor_bimodule,
    pentagon_check,
    simple_count_balanced,
    triangle_check,
)
from .corpus import (
    random_coherence_instance,
    random_graded_object,
    random_hom_quadruple,
    random_ses,
)
from .io import load_module_object, parse_field_flag, resolve_algebra_spec
from .reports import RunReport


def _corpus_algebras(fault: bool = False):
    """Built-in verification corpus: small groups over both field kinds."""
    from .groups import cyclic_group

    out = []
    a2 = graded_group_algebra(cyclic_group(2), QQ)
    if fault:
        prods = dict(a2.algebra.products)
        prods[(0, 1)] = ((0, QQ.one),)  # corrupt e*g: breaks unit law and associativity
        bad = FinAlgebra(2, QQ, prods, a2.algebra.unit, label=a2.algebra.label)
        from .gradedcat import GradedAlgebraObject

        a2 = GradedAlgebraObject(a2.obj, bad, validate=False)
    out.append(a2)
    out.append(graded_group_algebra(cyclic_group(3), GF(7)))
    return out


def suite_linalg(report: RunReport, rng: random.Random):
    for field, tag in ((QQ, "Q"), (GF(5), "F5")):
        ok = True
        for _ in range(8):
            m = ExactMatrix(4, 6, [rng.randint(-3, 3) for _ in range(24)], field)
            ker = kernel_basis(m)
            ok &= rank(m) + len(ker) == 6
            ok &= all(all(x == field.zero for x in m.apply(v)) for v in ker)
            proj, dim = cokernel(m)
            ok &= (proj @ m).is_zero() and dim == 4 - rank(m)
        report.add(f"linalg.rank_nullity_cokernel[{tag}]", ok)
    entries = [[rng.randint(-3, 3) for _ in range(24)] for _ in range(6)]
    agreement = all(
        rank(ExactMatrix(4, 6, e, QQ)) == rank(ExactMatrix(4, 6, e, GF(1000003)))
        for e in entries
    )
    report.add("linalg.prime_field_agreement", agreement)


def suite_algebra(report: RunReport, rng: random.Random, fault: bool = False):
    for a in _corpus_algebras(fault):
        alg = a.algebra
        rep = validate_algebra(alg)
        report.add_report(f"algebra.validate[{alg.label}]", rep)
        if not rep.ok:
            continue
        cert = semisimplicity_certificate(alg)
        report.add(f"algebra.certificate[{alg.label}]",
                   cert == "certified_semisimple", certificate=cert)
        homs = hom_space(regular_left(alg), regular_left(alg))
        report.add(f"algebra.end_regular_dim[{alg.label}]", len(homs) == alg.dim,
                   dim=len(homs))
        tdim, _ = tensor_over_algebra(regular_right(alg), regular_left(alg))
        report.add(f"algebra.tensor_unit_law[{alg.label}]", tdim == alg.dim,
                   dim=tdim)


def suite_graded(report: RunReport, rng: random.Random, fault: bool = False):
    for a in _corpus_algebras(fault):
        grp = a.group
        rep = validate_algebra_object(a)
        report.add_report(f"graded.algebra_object[{a.algebra.label}]", rep)
        if not rep.ok:
            continue
        obj = random_graded_object(rng, grp, max_total=3)
        dd = dual_object_with_zigzag(obj, a.field)
        report.add_report(f"graded.zigzag[{a.algebra.label}]", dd.report,
                          dims=list(obj.dims()))
        seq = random_ses(rng, a, max_total=1)
        ok = True
        for g in range(grp.order):
            ok &= exactness_probe(line_object(grp, g), seq).ok
        report.add(f"graded.tensor_exactness[{a.algebra.label}]", ok)
        report.add(f"graded.regular_module[{a.algebra.label}]",
                   validate_module_object(regular_right_module(a)).ok)


def suite_modcat(report: RunReport, rng: random.Random, fault: bool = False):
    for a in _corpus_algebras(fault):
        label = a.algebra.label
        if fault and not validate_algebra_object(a).ok:
            report.add(f"modcat.skipped_invalid_algebra[{label}]", False)
            continue
        p = regular_right_module(a)
        ih = internal_hom(p, p)
        dims = ih.component_dims()
        report.add(f"modcat.internal_end_dims[{label}]",
                   dims == (1,) * a.group.order, dims=list(dims))
        endalg, ih2 = internal_end(p)
        report.add_report(f"modcat.end_vs_algebra[{label}]",
                          end_comparison_to_algebra(p, endalg, ih2))
        xs = [p, free_right_module(a, random_graded_object(rng, a.group, 2))]
        report.add_report(f"modcat.generator[{label}]", generator_check(p, xs))
        report.add_report(f"modcat.reconstruction_unit[{label}]",
                          reconstruction_unit_check(p, regular_right_module(endalg), ih2))
        report.add_report(f"modcat.reconstruction_counit[{label}]",
                          reconstruction_counit_check(p, xs[1], endalg, ih2))


def suite_balanced(report: RunReport, rng: random.Random, fault: bool = False,
                   sweep: int = 8):
    for a in _corpus_algebras(fault):
        label = a.algebra.label
        grp = a.group
        if fault:
            rep = validate_algebra_object(a)
            if not rep.ok:
                report.add_report(f"balanced.algebra_object[{label}]", rep)
                continue
        env = EnvelopingAlgebra(a, a, validate=False)
        rep = validate_algebra(env.algebra)
        report.add_report(f"balanced.enveloping_associative[{label}]", rep,
                          dim=env.dim)
        if not rep.ok:
            continue
        x = box_object(regular_left_module(a), regular_right_module(a))
        m = env.bimodule_to_module(x)
        back = env.module_to_bimodule(m)
        report.add(f"balanced.roundtrip[{label}]",
                   back.obj == x.obj
                   and [t.data for t in back.left_action] == [t.data for t in x.left_action]
                   and [t.data for t in back.right_action] == [t.data for t in x.right_action])
        ok = True
        worst = None
        for _ in range(sweep):
            q = random_hom_quadruple(rng, a, a, max_total=1)
            res = hom_formula_check(*q)
            if not res.ok:
                ok = False
                worst = (res.lhs, res.rhs)
        report.add(f"balanced.hom_formula_sweep[{label}]", ok, sweep=sweep,
                   counterexample=worst)
        ok = True
        for _ in range(max(3, sweep // 2)):
            xm, c, cp, y = random_coherence_instance(rng, a, a)
            ok &= pentagon_check(xm, c, cp, y).ok
            ok &= triangle_check(xm, y).ok
        report.add(f"balanced.coherence[{label}]", ok)
        report.add_report(f"balanced.coequalizer[{label}]",
                          coequalizer_presentation(x))
        w = identity_functor_bimodule(env)
        _, erep = extend_balanced_functor(w, env, x)
        report.add_report(f"balanced.extension_identity[{label}]", erep)
        try:
            n = simple_count_balanced(
                build_balanced_product(a, a, validate=False), assume_split=True
            )
            report.add(f"balanced.simple_count[{label}]",
                       n == conjugacy_class_count(grp), count=n)
        except PreconditionError as exc:
            report.add(f"balanced.simple_count[{label}]", False, error=str(exc))


SUITES = {
    "linalg": suite_linalg,
    "algebra": suite_algebra,
    "graded": suite_graded,
    "modcat": suite_modcat,
    "balanced": suite_balanced,
}


def cmd_verify(args) -> RunReport:
    report = RunReport("verify", inputs={"scope": args.scope, "seed": args.seed,
                                         "inject_fault": args.inject_fault})
    rng = random.Random(args.seed)
    scopes = list(SUITES) if args.scope == "all" else [args.scope]
    for scope in scopes:
        fn = SUITES[scope]
        if scope == "linalg":
            fn(report, rng)
        else:
            fn(report, rng, fault=args.inject_fault)
    return report


def cmd_balanced_product(args) -> RunReport:
    group = build_group(args.group)
    field = parse_field_flag(args.field)
    report = RunReport("balanced-product", inputs={
        "group": args.group, "order": group.order, "field": args.field,
        "algebra_a": args.algebra_a, "algebra_b": args.algebra_b,
        "seed": args.seed,
    })
    rng = random.Random(args.seed)
    a = resolve_algebra_spec(args.algebra_a, group, field)
    b = resolve_algebra_spec(args.algebra_b, group, field)
    report.add_report("validate_algebra_a", validate_algebra_object(a))
    report.add_report("validate_algebra_b", validate_algebra_object(b))
    bp = build_balanced_product(a, b, validate=False)
    rep = validate_algebra(bp.enveloping.algebra)
    report.add_report("enveloping_associative", rep, dim=bp.enveloping.dim)
    cert = semisimplicity_certificate(bp.enveloping.algebra)
    report.add("enveloping_certificate", cert == "certified_semisimple",
               certificate=cert)
    split_ok = args.assume_split or (
        all(spec == "unit" or splitting_field_ok(group, field)
            for spec in (args.algebra_a, args.algebra_b)
            if spec in ("unit", "group-algebra"))
        and all(spec in ("unit", "group-algebra")
                for spec in (args.algebra_a, args.algebra_b))
    )
    if cert == "certified_semisimple" and split_ok:
        n = simple_count_balanced(bp, assume_split=True)
        report.add("simple_count", True, count=n)
    else:
        report.add("simple_count_skipped", True,
                   reason="certificate or splitting policy unavailable")
    ok = True
    worst = None
    for _ in range(args.sweep):
        q = random_hom_quadruple(rng, a, b, max_total=1)
        res = hom_formula_check(*q)
        if not res.ok:
            ok = False
            worst = (res.lhs, res.rhs)
    report.add("hom_formula_sweep", ok, sweep=args.sweep, counterexample=worst)
    return report


def cmd_homcheck(args) -> RunReport:
    group = build_group(args.group)
    field = parse_field_flag(args.field)
    report = RunReport("homcheck", inputs={
        "group": args.group, "field": args.field,
        "algebra_a": args.algebra_a, "algebra_b": args.algebra_b,
        "files": [args.x, args.xp, args.y, args.yp],
    })
    a = resolve_algebra_spec(args.algebra_a, group, field)
    b = resolve_algebra_spec(args.algebra_b, group, field)
    x = load_module_object(args.x, a)
    xp = load_module_object(args.xp, a)
    y = load_module_object(args.y, b)
    yp = load_module_object(args.yp, b)
    for name, m, side in (("x", x, "left"), ("x_prime", xp, "left"),
                          ("y", y, "right"), ("y_prime", yp, "right")):
        report.add(f"load_{name}", m.side == side, side=m.side, dim=m.dim)
    res = hom_formula_check(x, xp, y, yp)
    report.add("hom_formula", res.ok, lhs=res.lhs, rhs=res.rhs)
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxcat",
        description="balanced products of graded module categories, exactly",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bp = sub.add_parser("balanced-product",
                        help="build a balanced product and run its checks")
    bp.add_argument("--group", required=True,
                    help="group file, cyclic:n, or symmetric:n")
    bp.add_argument("--field", default="Q", help="Q or Fp:p")
    bp.add_argument("--algebra-a", default="group-algebra",
                    help="file | group-algebra | unit")
    bp.add_argument("--algebra-b", default="group-algebra",
                    help="file | group-algebra | unit")
    bp.add_argument("--report", help="also write the JSON report to this path")
    bp.add_argument("--seed", type=int, default=0)
    bp.add_argument("--sweep", type=int, default=10,
                    help="number of randomized hom-formula quadruples")
    bp.add_argument("--assume-split", action="store_true",
                    help="assert that the field splits the algebras "
                         "(needed for simple counts with file inputs)")
    bp.set_defaults(fn=cmd_balanced_product)

    vf = sub.add_parser("verify", help="run invariant suites on the built-in corpus")
    vf.add_argument("--scope", default="all",
                    choices=["linalg", "algebra", "graded", "modcat", "balanced", "all"])
    vf.add_argument("--seed", type=int, default=0)
    vf.add_argument("--report", help="also write the JSON report to this path")
    vf.add_argument("--inject-fault", action="store_true",
                    help="corrupt one corpus structure constant (self-test)")
    vf.set_defaults(fn=cmd_verify)

    hc = sub.add_parser("homcheck",
                        help="hom formula on four module-object files")
    hc.add_argument("--group", required=True)
    hc.add_argument("--field", default="Q")
    hc.add_argument("--algebra-a", default="group-algebra")
    hc.add_argument("--algebra-b", default="group-algebra")
    hc.add_argument("--report")
    hc.add_argument("x")
    hc.add_argument("xp")
    hc.add_argument("y")
    hc.add_argument("yp")
    hc.set_defaults(fn=cmd_homcheck)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.fn(args)
    except (PreconditionError, ValueError, OSError) as exc:
        report = RunReport(args.command, inputs={})
        report.add("setup", False, failures=[str(exc)])
    report.finish()
    payload = report.to_json()
    print(payload)
    if getattr(args, "report", None):
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    print(report.summary(), file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
