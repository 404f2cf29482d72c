"""Module-category machinery over the graded category: internal homs by
per-grade representability, cotensors via duals, the internal
endomorphism algebra of a module object, generator/projectivity probes,
and the reconstruction functor with its unit/counit rank checks.

The category of right module objects over an algebra object B is a left
module category over the graded category; left module objects form the
mirrored right module category.  Internal homs are computed one grade at
a time as concrete intertwiner solution spaces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactla import (
    ExactMatrix,
    cokernel_with_support,
    coords_in_span,
    factor_through,
    mul_block_kron_right,
    rank,
)
from .algebra import FinAlgebra, PreconditionError, Report, intertwiner_space
from .gradedcat import (
    GradedAlgebraObject,
    GradedModuleObject,
    GradedMorphism,
    GradedObject,
    c_tensor_module,
    dual_object,
    graded_object_from_dims,
    module_hom_space,
    tensor_objects,
)


@dataclass
class InternalHomValue:
    """The representing object of c -> Hom(c (x) source, target) (right
    modules) or c -> Hom(source (x) c, target) (left modules).

    classified[g] lists a basis of the grade-g component as shifted
    intertwiner matrices source -> target; evaluation is the canonical
    action map out of value (x) source (resp. source (x) value).
    """

    source: GradedModuleObject
    target: GradedModuleObject
    side: str
    value: GradedObject
    classified: dict
    evaluation: GradedMorphism

    def component_dims(self) -> tuple:
        return self.value.dims()

    def offset(self, g: int) -> int:
        dims = self.value.dims()
        return sum(dims[:g])

    def flat_index(self, g: int, alpha: int) -> int:
        return self.offset(g) + alpha

    def coords_of(self, g: int, mat: ExactMatrix):
        """Coordinates of a shifted intertwiner in the grade-g basis."""
        return coords_in_span(self.classified[g], mat)

    @property
    def dim(self) -> int:
        return self.value.dim


def internal_hom(m1: GradedModuleObject, m2: GradedModuleObject) -> InternalHomValue:
    """Internal hom of two module objects on the same side.

    The grade-g component solves the intertwiner system for maps whose
    matrix shifts grades by g on the appropriate side; the evaluation
    morphism is assembled from the classified bases and verified to be a
    module morphism.
    """
    if m1.side != m2.side:
        raise PreconditionError("internal hom needs modules on the same side")
    if m1.algebra.algebra.products != m2.algebra.algebra.products:
        raise PreconditionError("internal hom needs a common algebra object")
    group = m1.obj.group
    fld = m1.field
    mul = group.mul
    constraints = [(m1.action[i], m2.action[i]) for i in range(m1.algebra.dim)]
    classified = {}
    for g in range(group.order):
        if m1.side == "right":
            allowed = [(r, c) for r in range(m2.dim) for c in range(m1.dim)
                       if m2.obj.grades[r] == mul(g, m1.obj.grades[c])]
        else:
            allowed = [(r, c) for r in range(m2.dim) for c in range(m1.dim)
                       if m2.obj.grades[r] == mul(m1.obj.grades[c], g)]
        classified[g] = intertwiner_space(m1.dim, m2.dim, constraints, fld, allowed)
    dims = [len(classified[g]) for g in range(group.order)]
    value = graded_object_from_dims(group, dims)

    # evaluation: value (x) m1 -> m2 (right side) or m1 (x) value -> m2
    total = value.dim
    flat = [fld.zero] * (m2.dim * total * m1.dim)
    pos = 0
    for g in range(group.order):
        for phi in classified[g]:
            for out in range(m2.dim):
                for w in range(m1.dim):
                    v = phi[out, w]
                    if v:
                        if m1.side == "right":
                            col = pos * m1.dim + w
                        else:
                            col = w * total + pos
                        flat[out * (total * m1.dim) + col] = v
            pos += 1
    if m1.side == "right":
        src = tensor_objects(value, m1.obj)
    else:
        src = tensor_objects(m1.obj, value)
    ev = GradedMorphism(src, m2.obj, ExactMatrix(m2.dim, total * m1.dim, flat, fld))
    _check_evaluation_is_module_map(m1, m2, value, ev)
    return InternalHomValue(m1, m2, m1.side, value, classified, ev)


def _check_evaluation_is_module_map(m1, m2, value, ev):
    fld = m1.field
    iv = ExactMatrix.identity(value.dim, fld)
    for j in range(m1.algebra.dim):
        if m1.side == "right":
            big = iv.kron(m1.action[j])
        else:
            big = m1.action[j].kron(iv)
        if ev.matrix @ big != m2.action[j] @ ev.matrix:
            raise PreconditionError(
                f"internal hom evaluation fails the module law at basis {j}"
            )


def adjunction_dim_check(ih: InternalHomValue) -> Report:
    """dim Hom(k_g, value) = dim Hom(k_g (x) m1, m2) for every grade, and
    the classification bijection round-trips."""
    rep = Report()
    dims = ih.component_dims()
    for g in range(ih.value.group.order):
        rep.details[f"grade_{g}"] = dims[g]
        for alpha, phi in enumerate(ih.classified[g]):
            coords = ih.coords_of(g, phi)
            want = tuple(ih.source.field.one if i == alpha else ih.source.field.zero
                         for i in range(dims[g]))
            if coords != want:
                rep.fail(f"classification not a bijection at grade {g}")
    return rep


# -- cotensor ------------------------------------------------------------


def cotensor(c: GradedObject, m: GradedModuleObject) -> GradedModuleObject:
    """Right adjoint of c (x) -: realized as dual(c) (x) m."""
    return c_tensor_module(dual_object(c), m)


def cotensor_adjunction_check(c: GradedObject, x: GradedModuleObject,
                              m: GradedModuleObject) -> Report:
    """Hom(c (x) x, m) = Hom(x, cotensor(c, m)) via the explicit
    transpose f |-> (xi |-> sum_i e_i* (x) f(e_i (x) xi))."""
    rep = Report()
    h1 = module_hom_space(c_tensor_module(c, x), m)
    mc = cotensor(c, m)
    h2 = module_hom_space(x, mc)
    rep.details["lhs_dim"] = len(h1)
    rep.details["rhs_dim"] = len(h2)
    if len(h1) != len(h2):
        rep.fail(f"adjunction dims differ: {len(h1)} vs {len(h2)}")
        return rep
    if not h1:
        return rep
    fld = m.field
    images = []
    for f in h1:
        flat = [fld.zero] * (mc.dim * x.dim)
        for i in range(c.dim):
            for mo in range(m.dim):
                for xi in range(x.dim):
                    v = f[mo, i * x.dim + xi]
                    if v:
                        flat[(i * m.dim + mo) * x.dim + xi] = v
        images.append(ExactMatrix(mc.dim, x.dim, flat, fld))
    cols = []
    for img in images:
        coords = coords_in_span(h2, img)
        if coords is None:
            rep.fail("transposed morphism is not a module morphism")
            return rep
        cols.append(list(coords))
    bij = ExactMatrix.from_cols(cols, fld)
    if rank(bij) != len(h1):
        rep.fail("adjunction transpose is not a bijection")
    rep.details["bijection_rank"] = rank(bij)
    return rep


# -- internal endomorphism algebra ---------------------------------------


def internal_end(p: GradedModuleObject) -> tuple[GradedAlgebraObject, InternalHomValue]:
    """The internal hom of p with itself, as a graded algebra object.

    Multiplication composes classified intertwiners (shift g after shift
    h lands in shift g*h); the unit classifies the identity map.
    """
    if p.dim == 0:
        raise PreconditionError("internal end of the zero module refused")
    if p.side != "right":
        raise PreconditionError("internal end implemented for right module objects")
    ih = internal_hom(p, p)
    group = p.obj.group
    fld = p.field
    prods = {}
    for g in range(group.order):
        for a, phi in enumerate(ih.classified[g]):
            for h in range(group.order):
                gh = group.mul(g, h)
                for b, psi in enumerate(ih.classified[h]):
                    comp = phi @ psi
                    coords = ih.coords_of(gh, comp)
                    if coords is None:
                        raise PreconditionError(
                            "composite of classified maps escapes the classified basis"
                        )
                    terms = [(ih.flat_index(gh, t), cc)
                             for t, cc in enumerate(coords) if cc]
                    prods[(ih.flat_index(g, a), ih.flat_index(h, b))] = terms
    e = group.identity
    ident_coords = ih.coords_of(e, ExactMatrix.identity(p.dim, fld))
    if ident_coords is None:
        raise PreconditionError("identity map is not classified at the unit grade")
    unit = [fld.zero] * ih.dim
    for t, cc in enumerate(ident_coords):
        unit[ih.flat_index(e, t)] = cc
    alg = FinAlgebra(ih.dim, fld, prods, unit, label="iend")
    return GradedAlgebraObject(ih.value, alg), ih


def end_comparison_to_algebra(p: GradedModuleObject,
                              endalg: GradedAlgebraObject,
                              ih: InternalHomValue) -> Report:
    """For p the regular right module over B, the map phi -> phi(unit)
    is a grade-preserving algebra isomorphism internal_end(p) -> B.

    After this normalization the structure constants agree exactly; the
    report carries the transported-constant comparison.
    """
    b = p.algebra
    fld = p.field
    rep = Report()
    cols = []
    for g in range(p.obj.group.order):
        for phi in ih.classified[g]:
            cols.append(list(phi.apply(b.algebra.unit)))
    theta = (ExactMatrix.from_cols(cols, fld) if cols
             else ExactMatrix.zeros(b.dim, 0, fld))
    rep.details["theta_rank"] = rank(theta)
    if theta.rows != theta.cols or rank(theta) != b.dim:
        rep.fail("evaluation at the unit is not bijective")
        return rep
    # grade preservation of theta
    for col, g in enumerate(endalg.obj.grades):
        for row in range(b.dim):
            if theta[row, col] and b.obj.grades[row] != g:
                rep.fail("unit evaluation map is not grade-preserving")
                return rep
    # multiplicativity: theta(u v) = theta(u) theta(v) on basis pairs,
    # i.e. transported structure constants equal B's exactly
    for i in range(endalg.dim):
        for j in range(endalg.dim):
            lhs = [fld.zero] * b.dim
            for k, c in endalg.algebra.product(i, j):
                col = theta.col(k)
                lhs = [x + c * y for x, y in zip(lhs, col)]
            rhs = b.algebra.multiply(theta.col(i), theta.col(j))
            if tuple(fld.coerce(x) for x in lhs) != tuple(rhs):
                rep.fail(f"transported constants differ at pair ({i}, {j})")
                return rep
    if tuple(theta.apply(endalg.algebra.unit)) != tuple(b.algebra.unit):
        rep.fail("unit is not preserved")
    return rep


# -- generator and projectivity probes ------------------------------------


def generator_check(p: GradedModuleObject, xs) -> Report:
    """Surjectivity of the canonical map value(p, x) (x) p -> x for each
    test object x; p is a generator on the family iff all pass."""
    rep = Report()
    for idx, x in enumerate(xs):
        ih = internal_hom(p, x)
        r = rank(ih.evaluation.matrix)
        ok = r == x.dim
        rep.details[f"x_{idx}"] = {"rank": r, "dim": x.dim, "surjective": ok}
        if not ok:
            rep.fail(f"evaluation onto test object {idx} has rank {r} < {x.dim}")
    return rep


def projectivity_probe(p: GradedModuleObject, m: GradedModuleObject,
                       z: GradedModuleObject, q: ExactMatrix) -> Report:
    """Does internal_hom(p, -) preserve the surjection q: m ->> z?

    A finite stand-in for right-exactness: the induced map on internal
    homs must again be surjective, grade by grade.
    """
    rep = Report()
    if rank(q) != z.dim:
        raise PreconditionError("probe input is not surjective")
    ihm = internal_hom(p, m)
    ihz = internal_hom(p, z)
    fld = p.field
    cols = []
    for g in range(p.obj.group.order):
        for phi in ihm.classified[g]:
            comp = q @ phi
            coords = ihz.coords_of(g, comp)
            if coords is None:
                rep.fail("pushforward escapes the classified basis")
                return rep
            col = [fld.zero] * ihz.dim
            for t, cc in enumerate(coords):
                col[ihz.flat_index(g, t)] = cc
            cols.append(col)
    induced = (ExactMatrix.from_cols(cols, fld) if cols
               else ExactMatrix.zeros(ihz.dim, 0, fld))
    r = rank(induced)
    rep.details["rank"] = r
    rep.details["target_dim"] = ihz.dim
    if r != ihz.dim:
        rep.fail(f"internal hom does not preserve the surjection ({r} < {ihz.dim})")
    return rep


# -- reconstruction --------------------------------------------------------


def module_over_internal_end(endalg: GradedAlgebraObject, ih: InternalHomValue,
                             target_ih: InternalHomValue) -> GradedModuleObject:
    """value(p, m) as a right module object over internal_end(p): the
    action precomposes classified maps of target_ih with those of ih."""
    group = endalg.obj.group
    fld = endalg.field
    action = []
    for h in range(group.order):
        for psi in ih.classified[h]:
            flat = [fld.zero] * (target_ih.dim * target_ih.dim)
            for g in range(group.order):
                gh = group.mul(g, h)
                for a, phi in enumerate(target_ih.classified[g]):
                    comp = phi @ psi
                    coords = target_ih.coords_of(gh, comp)
                    if coords is None:
                        raise PreconditionError("precomposition escapes the basis")
                    src = target_ih.flat_index(g, a)
                    for t, cc in enumerate(coords):
                        if cc:
                            flat[target_ih.flat_index(gh, t) * target_ih.dim + src] = cc
            action.append(ExactMatrix(target_ih.dim, target_ih.dim, flat, fld))
    return GradedModuleObject("right", endalg, target_ih.value, action)


def reconstruction_functor(p: GradedModuleObject, x: GradedModuleObject,
                           ih: InternalHomValue) -> tuple[GradedModuleObject, ExactMatrix]:
    """Coequalizer of x (x) End (x) p => x (x) p for a right module x over
    internal_end(p); returns the module object and the quotient projection.

    One leg is the module action of x, the other evaluates classified
    maps on p; the residual action of p's algebra descends to the quotient.
    """
    endobj = ih.value
    fld = p.field
    dp, dx = p.dim, x.dim
    if x.algebra.obj != endobj:
        raise PreconditionError("x must be a module over internal_end(p)")
    group = p.obj.group
    phis = []
    for g in range(group.order):
        phis.extend(ih.classified[g])

    def columns():
        for xi in range(dx):
            for af in range(endobj.dim):
                act = x.action[af]
                phi = phis[af]
                for w in range(dp):
                    col = []
                    for out in range(dx):
                        c = act[out, xi]
                        if c:
                            col.append((out * dp + w, c))
                    for out in range(dp):
                        c = phi[out, w]
                        if c:
                            col.append((xi * dp + out, fld.neg(c)))
                    yield col

    tens = tensor_objects(x.obj, p.obj)
    proj, dim, free = cokernel_with_support(columns(), dx * dp, fld)
    qobj = GradedObject(group, tuple(tens.grades[t] for t in free))
    action = []
    for j in range(p.algebra.dim):
        moved = mul_block_kron_right(proj, p.action[j], dx)
        act = factor_through(proj, moved)
        if act is None:
            raise PreconditionError("residual action does not descend to the quotient")
        action.append(act)
    module = GradedModuleObject("right", p.algebra, qobj, action)
    return module, proj


def reconstruction_unit_check(p: GradedModuleObject, x: GradedModuleObject,
                              ih: InternalHomValue) -> Report:
    """The unit x -> value(p, F(x)) assembled from xi |-> proj(xi (x) -)
    must be a bijection when p is a projective generator."""
    rep = Report()
    fx, proj = reconstruction_functor(p, x, ih)
    ihq = internal_hom(p, fx)
    fld = p.field
    dp = p.dim
    cols = []
    for xi in range(x.dim):
        g = x.obj.grades[xi]
        flat = [fld.zero] * (fx.dim * dp)
        for w in range(dp):
            col = proj.col(xi * dp + w)
            for out, v in enumerate(col):
                if v:
                    flat[out * dp + w] = v
        mat = ExactMatrix(fx.dim, dp, flat, fld)
        coords = ihq.coords_of(g, mat)
        if coords is None:
            rep.fail(f"unit image of basis {xi} is not classified")
            return rep
        col = [fld.zero] * ihq.dim
        for t, cc in enumerate(coords):
            col[ihq.flat_index(g, t)] = cc
        cols.append(col)
    unit = (ExactMatrix.from_cols(cols, fld) if cols
            else ExactMatrix.zeros(ihq.dim, 0, fld))
    r = rank(unit)
    rep.details.update({"unit_rank": r, "source_dim": x.dim, "target_dim": ihq.dim})
    if not (ihq.dim == x.dim and r == x.dim):
        rep.fail("reconstruction unit is not an isomorphism")
    return rep


def reconstruction_counit_check(p: GradedModuleObject, m: GradedModuleObject,
                                endalg: GradedAlgebraObject,
                                ih: InternalHomValue) -> Report:
    """The counit F(value(p, m)) -> m induced by evaluation must be a
    bijection when p is a projective generator."""
    rep = Report()
    target_ih = internal_hom(p, m)
    xh = module_over_internal_end(endalg, ih, target_ih)
    fx, proj = reconstruction_functor(p, xh, ih)
    eps = factor_through(proj, target_ih.evaluation.matrix)
    if eps is None:
        rep.fail("evaluation does not descend to the coequalizer")
        return rep
    r = rank(eps)
    rep.details.update({"counit_rank": r, "source_dim": fx.dim, "target_dim": m.dim})
    if not (fx.dim == m.dim and r == m.dim):
        rep.fail("reconstruction counit is not an isomorphism")
    return rep
