"""The tensor category of K-graded vector spaces and its internal
algebra/module/bimodule objects.

Conventions that everything downstream relies on:

* every basis vector carries a grade tag; objects built from a dims
  vector lay their basis out grade-major (all grade-0 vectors first);
* tensor products enumerate pair bases lexicographically, so iterated
  tensors are strictly left-associativized and the associator is the
  literal identity permutation (grade-major ordering of pairs would
  force a nontrivial permutation here, breaking that);
* duals invert grade tags in place, evaluation/coevaluation are the
  canonical pairings, and the zigzag composites are asserted to be
  identity matrices exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactla import ExactMatrix, FieldSpec, solve_matrix
from .groups import FiniteGroup
from .algebra import (
    AlgModule,
    FinAlgebra,
    PreconditionError,
    Report,
    intertwiner_space,
    validate_algebra,
    validate_module,
)


class GradedObject:
    """Object of the graded category: a grade tag per basis vector."""

    __slots__ = ("group", "grades")

    def __init__(self, group: FiniteGroup, grades):
        grades = tuple(grades)
        for g in grades:
            if not (isinstance(g, int) and 0 <= g < group.order):
                raise ValueError(f"grade tag {g!r} out of range")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "grades", grades)

    def __setattr__(self, *a):
        raise AttributeError("GradedObject is immutable")

    @property
    def dim(self) -> int:
        return len(self.grades)

    def dims(self) -> tuple:
        """Component dimension per grade, indexed by group element."""
        out = [0] * self.group.order
        for g in self.grades:
            out[g] += 1
        return tuple(out)

    def grade_of(self, i: int) -> int:
        return self.grades[i]

    def __eq__(self, other):
        return (isinstance(other, GradedObject)
                and self.group == other.group and self.grades == other.grades)

    def __hash__(self):
        return hash((self.group.table, self.grades))

    def __repr__(self):
        return f"GradedObject(dims={self.dims()})"


def graded_object_from_dims(group: FiniteGroup, dims) -> GradedObject:
    """Grade-major layout: dims[0] vectors of grade 0, then grade 1, ..."""
    grades = []
    for g, d in enumerate(dims):
        grades.extend([g] * d)
    return GradedObject(group, grades)


def unit_object(group: FiniteGroup) -> GradedObject:
    return GradedObject(group, (group.identity,))


def line_object(group: FiniteGroup, g: int) -> GradedObject:
    return GradedObject(group, (g,))


def zero_object(group: FiniteGroup) -> GradedObject:
    return GradedObject(group, ())


def tensor_objects(u: GradedObject, v: GradedObject) -> GradedObject:
    """Pair basis (i, j) -> i * dim(v) + j, grade = grade(i) * grade(j)."""
    if u.group != v.group:
        raise PreconditionError("tensor of objects over different groups")
    mul = u.group.mul
    grades = [mul(gi, gj) for gi in u.grades for gj in v.grades]
    return GradedObject(u.group, grades)


def dual_object(u: GradedObject) -> GradedObject:
    """Same index order, inverted grade tags."""
    inv = u.group.inverse
    return GradedObject(u.group, tuple(inv[g] for g in u.grades))


class GradedMorphism:
    """Grade-preserving linear map between graded objects."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: GradedObject, target: GradedObject, matrix: ExactMatrix):
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise PreconditionError("morphism matrix shape mismatch")
        if source.group != target.group:
            raise PreconditionError("morphism between objects over different groups")
        for r in range(matrix.rows):
            for c in range(matrix.cols):
                if matrix[r, c] and target.grades[r] != source.grades[c]:
                    raise PreconditionError(
                        f"entry ({r},{c}) joins grades "
                        f"{source.grades[c]} -> {target.grades[r]}"
                    )
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, *a):
        raise AttributeError("GradedMorphism is immutable")

    def __matmul__(self, other: "GradedMorphism") -> "GradedMorphism":
        if other.target != self.source:
            raise PreconditionError("composition source/target mismatch")
        return GradedMorphism(other.source, self.target, self.matrix @ other.matrix)

    def tensor(self, other: "GradedMorphism") -> "GradedMorphism":
        return GradedMorphism(
            tensor_objects(self.source, other.source),
            tensor_objects(self.target, other.target),
            self.matrix.kron(other.matrix),
        )

    def __eq__(self, other):
        return (isinstance(other, GradedMorphism)
                and self.source == other.source
                and self.target == other.target
                and self.matrix == other.matrix)

    def __repr__(self):
        return f"GradedMorphism({self.source} -> {self.target})"


def identity_morphism(u: GradedObject, field: FieldSpec) -> GradedMorphism:
    return GradedMorphism(u, u, ExactMatrix.identity(u.dim, field))


def left_unitor(u: GradedObject, field: FieldSpec) -> GradedMorphism:
    """1 (x) u -> u; the pair index map is the identity."""
    return GradedMorphism(tensor_objects(unit_object(u.group), u), u,
                          ExactMatrix.identity(u.dim, field))


def right_unitor(u: GradedObject, field: FieldSpec) -> GradedMorphism:
    """u (x) 1 -> u."""
    return GradedMorphism(tensor_objects(u, unit_object(u.group)), u,
                          ExactMatrix.identity(u.dim, field))


@dataclass
class DualData:
    dual: GradedObject
    ev: GradedMorphism          # dual (x) u -> 1
    coev: GradedMorphism        # 1 -> u (x) dual
    ev_left: GradedMorphism     # u (x) dual -> 1
    coev_left: GradedMorphism   # 1 -> dual (x) u
    report: Report


def dual_object_with_zigzag(u: GradedObject, field: FieldSpec) -> DualData:
    """Canonical dual with both evaluation/coevaluation pairs.

    The report asserts all four zigzag composites equal identities; in
    this category the left and right duals coincide on the nose.
    """
    d = dual_object(u)
    n = u.dim
    one_obj = unit_object(u.group)
    zero, one = field.zero, field.one

    def pairing(src_left, src_right):
        # morphism src_left (x) src_right -> 1 pairing e_i with e_i
        flat = [zero] * (src_left.dim * src_right.dim)
        for i in range(n):
            flat[i * n + i] = one
        return GradedMorphism(tensor_objects(src_left, src_right), one_obj,
                              ExactMatrix(1, src_left.dim * src_right.dim, flat, field))

    def copairing(dst_left, dst_right):
        flat = [zero] * (dst_left.dim * dst_right.dim)
        for i in range(n):
            flat[i * n + i] = one
        return GradedMorphism(one_obj, tensor_objects(dst_left, dst_right),
                              ExactMatrix(dst_left.dim * dst_right.dim, 1, flat, field))

    ev = pairing(d, u)
    coev = copairing(u, d)
    ev_left = pairing(u, d)
    coev_left = copairing(d, u)

    rep = Report()
    iu = ExactMatrix.identity(n, field)
    # (id_u (x) ev) o (coev (x) id_u) = id_u
    z1 = iu.kron(ev.matrix) @ coev.matrix.kron(iu)
    # (ev (x) id_d) o (id_d (x) coev) = id_d
    z2 = ev.matrix.kron(iu) @ iu.kron(coev.matrix)
    # left-dual pair
    z3 = iu.kron(ev_left.matrix) @ coev_left.matrix.kron(iu)
    z4 = ev_left.matrix.kron(iu) @ iu.kron(coev_left.matrix)
    for name, z in (("zigzag_right_1", z1), ("zigzag_right_2", z2),
                    ("zigzag_left_1", z3), ("zigzag_left_2", z4)):
        ok = z == iu
        rep.details[name] = ok
        if not ok:
            rep.fail(f"{name} composite differs from the identity")
    return DualData(d, ev, coev, ev_left, coev_left, rep)


# -- algebra objects ----------------------------------------------------


class GradedAlgebraObject:
    """Algebra object: a FinAlgebra whose structure constants respect the
    grading and whose unit is supported in the identity grade."""

    __slots__ = ("obj", "algebra")

    def __init__(self, obj: GradedObject, algebra: FinAlgebra, validate: bool = True):
        if obj.dim != algebra.dim:
            raise PreconditionError("graded object and algebra dimension differ")
        object.__setattr__(self, "obj", obj)
        object.__setattr__(self, "algebra", algebra)
        if validate:
            rep = validate_algebra_object(self)
            if not rep.ok:
                raise PreconditionError("invalid algebra object: " + "; ".join(rep.failures))

    def __setattr__(self, *a):
        raise AttributeError("GradedAlgebraObject is immutable")

    @property
    def group(self) -> FiniteGroup:
        return self.obj.group

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.obj.dim

    def __repr__(self):
        return f"GradedAlgebraObject({self.algebra.label!r}, dims={self.obj.dims()})"


def validate_algebra_object(a: GradedAlgebraObject) -> Report:
    rep = validate_algebra(a.algebra)
    if not rep.ok:
        return rep
    grades = a.obj.grades
    mul = a.group.mul
    for (i, j), terms in a.algebra.products.items():
        want = mul(grades[i], grades[j])
        for k, c in terms:
            if c and grades[k] != want:
                rep.fail(
                    f"product e_{i} e_{j} hits grade {grades[k]}, expected {want}"
                )
                return rep
    e = a.group.identity
    for k, c in enumerate(a.algebra.unit):
        if c and grades[k] != e:
            rep.fail(f"unit supported at grade {grades[k]} (basis {k})")
            return rep
    return rep


def graded_group_algebra(group: FiniteGroup, field: FieldSpec) -> GradedAlgebraObject:
    """k[K] with basis vector g tagged with grade g."""
    from .algebra import group_algebra

    alg = group_algebra(group, field)
    obj = GradedObject(group, tuple(range(group.order)))
    return GradedAlgebraObject(obj, alg, validate=False)


def unit_algebra_object(group: FiniteGroup, field: FieldSpec) -> GradedAlgebraObject:
    from .algebra import ground_field_algebra

    return GradedAlgebraObject(unit_object(group), ground_field_algebra(field),
                               validate=False)


def regrade_to_identity(a: GradedAlgebraObject) -> GradedAlgebraObject:
    """Same underlying algebra with every basis vector regraded to e.

    Always a valid algebra object; used to show grading data matters
    downstream even when the plain algebra is unchanged.
    """
    obj = GradedObject(a.group, (a.group.identity,) * a.dim)
    return GradedAlgebraObject(obj, a.algebra, validate=False)


# -- module objects -----------------------------------------------------


class GradedModuleObject:
    """One-sided module object: action matrices with the grade shift
    grade(out) = grade(a) * grade(in) (left) or grade(in) * grade(a) (right)."""

    __slots__ = ("side", "algebra", "obj", "action")

    def __init__(self, side: str, algebra: GradedAlgebraObject, obj: GradedObject,
                 action, validate: bool = True):
        if side not in ("left", "right"):
            raise ValueError("side must be left or right")
        action = tuple(action)
        object.__setattr__(self, "side", side)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "obj", obj)
        object.__setattr__(self, "action", action)
        if validate:
            rep = validate_module_object(self)
            if not rep.ok:
                raise PreconditionError("invalid module object: " + "; ".join(rep.failures))

    def __setattr__(self, *a):
        raise AttributeError("GradedModuleObject is immutable")

    @property
    def dim(self) -> int:
        return self.obj.dim

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    def as_plain_module(self) -> AlgModule:
        return AlgModule(self.algebra.algebra, self.side, self.dim, self.action,
                         validate=False)

    def __repr__(self):
        return (f"GradedModuleObject({self.side}, dims={self.obj.dims()}, "
                f"over {self.algebra.algebra.label!r})")


def validate_module_object(m: GradedModuleObject) -> Report:
    if m.obj.group != m.algebra.group:
        rep = Report()
        rep.fail("module object and algebra live over different groups")
        return rep
    rep = validate_module(m.as_plain_module())
    if not rep.ok:
        return rep
    mul = m.obj.group.mul
    agr = m.algebra.obj.grades
    ogr = m.obj.grades
    for i, mat in enumerate(m.action):
        for r in range(mat.rows):
            for c in range(mat.cols):
                if mat[r, c]:
                    want = mul(agr[i], ogr[c]) if m.side == "left" else mul(ogr[c], agr[i])
                    if ogr[r] != want:
                        rep.fail(
                            f"action of basis {i} joins grade {ogr[c]} to "
                            f"{ogr[r]}, expected {want}"
                        )
                        return rep
    return rep


def regular_left_module(a: GradedAlgebraObject) -> GradedModuleObject:
    act = [a.algebra.left_mult_matrix(i) for i in range(a.dim)]
    return GradedModuleObject("left", a, a.obj, act, validate=False)


def regular_right_module(a: GradedAlgebraObject) -> GradedModuleObject:
    act = [a.algebra.right_mult_matrix(i) for i in range(a.dim)]
    return GradedModuleObject("right", a, a.obj, act, validate=False)


def zero_module_object(a: GradedAlgebraObject, side: str) -> GradedModuleObject:
    z = ExactMatrix.zeros(0, 0, a.field)
    return GradedModuleObject(side, a, zero_object(a.group), [z] * a.dim,
                              validate=False)


def c_tensor_module(c: GradedObject, m: GradedModuleObject,
                    validate: bool = True) -> GradedModuleObject:
    """c (x) m for a right module object m; the algebra acts on the right
    tensor factor only."""
    if m.side != "right":
        raise PreconditionError("c_tensor_module expects a right module object")
    if c.group != m.obj.group:
        raise PreconditionError("group mismatch")
    ident = ExactMatrix.identity(c.dim, m.field)
    act = [ident.kron(mat) for mat in m.action]
    return GradedModuleObject("right", m.algebra, tensor_objects(c, m.obj), act,
                              validate=validate)


def module_tensor_c(m: GradedModuleObject, c: GradedObject,
                    validate: bool = True) -> GradedModuleObject:
    """m (x) c for a left module object m; the algebra acts on the left
    tensor factor only."""
    if m.side != "left":
        raise PreconditionError("module_tensor_c expects a left module object")
    if c.group != m.obj.group:
        raise PreconditionError("group mismatch")
    ident = ExactMatrix.identity(c.dim, m.field)
    act = [mat.kron(ident) for mat in m.action]
    return GradedModuleObject("left", m.algebra, tensor_objects(m.obj, c), act,
                              validate=validate)


def free_right_module(b: GradedAlgebraObject, c: GradedObject,
                      validate: bool = True) -> GradedModuleObject:
    """c (x) B with B acting by right multiplication on itself."""
    return c_tensor_module(c, regular_right_module(b), validate=validate)


def free_left_module(a: GradedAlgebraObject, c: GradedObject,
                     validate: bool = True) -> GradedModuleObject:
    """A (x) c with A acting by left multiplication on itself."""
    return module_tensor_c(regular_left_module(a), c, validate=validate)


def object_as_module(obj: GradedObject, field: FieldSpec, side: str = "right",
                     unit_alg: GradedAlgebraObject | None = None) -> GradedModuleObject:
    """A graded object seen as a module over the unit algebra object;
    modules over the unit algebra are exactly graded objects."""
    if unit_alg is None:
        unit_alg = unit_algebra_object(obj.group, field)
    ident = ExactMatrix.identity(obj.dim, field)
    return GradedModuleObject(side, unit_alg, obj, [ident], validate=False)


def module_object_direct_sum(m1: GradedModuleObject, m2: GradedModuleObject) -> GradedModuleObject:
    if m1.side != m2.side or m1.algebra.algebra.products != m2.algebra.algebra.products:
        raise PreconditionError("direct sum needs matching side and algebra")
    fld = m1.field
    d1, d2 = m1.dim, m2.dim
    obj = GradedObject(m1.obj.group, m1.obj.grades + m2.obj.grades)
    action = []
    for i in range(m1.algebra.dim):
        flat = [fld.zero] * ((d1 + d2) ** 2)
        for r in range(d1):
            for c in range(d1):
                flat[r * (d1 + d2) + c] = m1.action[i][r, c]
        for r in range(d2):
            for c in range(d2):
                flat[(d1 + r) * (d1 + d2) + d1 + c] = m2.action[i][r, c]
        action.append(ExactMatrix(d1 + d2, d1 + d2, flat, fld))
    return GradedModuleObject(m1.side, m1.algebra, obj, action, validate=False)


def conjugate_module(m: GradedModuleObject, u: ExactMatrix) -> GradedModuleObject:
    """Transport the action along a grade-preserving isomorphism u.

    The result is isomorphic to m but its matrices are no longer in any
    obvious normal form; used to generate non-split-looking test data.
    """
    uinv = solve_matrix(u, ExactMatrix.identity(u.rows, u.field))
    if uinv is None:
        raise PreconditionError("conjugating map is not invertible")
    GradedMorphism(m.obj, m.obj, u)  # raises unless grade-preserving
    act = [u @ mat @ uinv for mat in m.action]
    return GradedModuleObject(m.side, m.algebra, m.obj, act, validate=False)


def module_hom_space(m1: GradedModuleObject, m2: GradedModuleObject) -> list[ExactMatrix]:
    """Module-object morphisms m1 -> m2: grade-preserving intertwiners."""
    if m1.side != m2.side or m1.algebra.algebra.products != m2.algebra.algebra.products:
        raise PreconditionError("hom needs matching side and algebra object")
    allowed = [(r, c) for r in range(m2.dim) for c in range(m1.dim)
               if m2.obj.grades[r] == m1.obj.grades[c]]
    constraints = [(m1.action[i], m2.action[i]) for i in range(m1.algebra.dim)]
    return intertwiner_space(m1.dim, m2.dim, constraints, m1.field, allowed)


# -- bimodule objects -----------------------------------------------------


class GradedBimoduleObject:
    """Two-sided module object: commuting left and right actions of two
    algebra objects, both grade-compatible."""

    __slots__ = ("left_algebra", "right_algebra", "obj", "left_action", "right_action")

    def __init__(self, left_algebra: GradedAlgebraObject,
                 right_algebra: GradedAlgebraObject, obj: GradedObject,
                 left_action, right_action, validate: bool = True):
        object.__setattr__(self, "left_algebra", left_algebra)
        object.__setattr__(self, "right_algebra", right_algebra)
        object.__setattr__(self, "obj", obj)
        object.__setattr__(self, "left_action", tuple(left_action))
        object.__setattr__(self, "right_action", tuple(right_action))
        if validate:
            rep = validate_bimodule_object(self)
            if not rep.ok:
                raise PreconditionError("invalid bimodule object: " + "; ".join(rep.failures))

    def __setattr__(self, *a):
        raise AttributeError("GradedBimoduleObject is immutable")

    @property
    def dim(self) -> int:
        return self.obj.dim

    @property
    def field(self) -> FieldSpec:
        return self.left_algebra.field

    def as_left_module(self) -> GradedModuleObject:
        return GradedModuleObject("left", self.left_algebra, self.obj,
                                  self.left_action, validate=False)

    def as_right_module(self) -> GradedModuleObject:
        return GradedModuleObject("right", self.right_algebra, self.obj,
                                  self.right_action, validate=False)

    def __repr__(self):
        return (f"GradedBimoduleObject(dims={self.obj.dims()}, "
                f"{self.left_algebra.algebra.label!r} | "
                f"{self.right_algebra.algebra.label!r})")


def validate_bimodule_object(x: GradedBimoduleObject) -> Report:
    rep = validate_module_object(x.as_left_module())
    if not rep.ok:
        rep.failures = ["left " + f for f in rep.failures]
        return rep
    rep = validate_module_object(x.as_right_module())
    if not rep.ok:
        rep.failures = ["right " + f for f in rep.failures]
        return rep
    rep = Report()
    for i in range(x.left_algebra.dim):
        li = x.left_action[i]
        for j in range(x.right_algebra.dim):
            if li @ x.right_action[j] != x.right_action[j] @ li:
                rep.fail(f"actions do not commute at pair ({i}, {j})")
                return rep
    return rep


# -- exactness probes ----------------------------------------------------


def _check_exact(f: ExactMatrix, g: ExactMatrix, dims, rep: Report, tag: str):
    from .exactla import rank as _rank

    dx, dy, dz = dims
    rf, rg = _rank(f), _rank(g)
    rep.details[tag] = {"rank_f": rf, "rank_g": rg, "dims": dims}
    if rf != dx:
        rep.fail(f"{tag}: first map not injective (rank {rf} != {dx})")
    if rg != dz:
        rep.fail(f"{tag}: second map not surjective (rank {rg} != {dz})")
    if not (g @ f).is_zero():
        rep.fail(f"{tag}: composite g o f nonzero")
    if rf + rg != dy:
        rep.fail(f"{tag}: rank({rf}) + rank({rg}) != middle dim {dy}")


def exactness_probe(c: GradedObject, seq) -> Report:
    """Tensor a short exact sequence of right module objects by c and
    re-verify the exactness bookkeeping.

    seq = (x, y, z, f, g) with f: x -> y and g: y -> z module morphisms.
    """
    x, y, z, f, g = seq
    rep = Report()
    _check_exact(f, g, (x.dim, y.dim, z.dim), rep, "input")
    if not rep.ok:
        raise PreconditionError("input sequence not exact: " + "; ".join(rep.failures))
    ic = ExactMatrix.identity(c.dim, x.field)
    cf, cg = ic.kron(f), ic.kron(g)
    _check_exact(cf, cg, (c.dim * x.dim, c.dim * y.dim, c.dim * z.dim), rep, "tensored")
    return rep
