"""Finite-dimensional associative unital algebras by structure constants,
their one-sided modules and bimodules, and the operations that make
"finite linear category" computable: hom spaces, tensor over an algebra,
trace-form semisimplicity certificates, centers, and the endomorphism
algebra of a module with its evaluation counit.

Structure constants are stored sparsely as (i, j) -> ((k, coeff), ...);
the file format stays the dense dim^3 nested array.  Everything is
immutable after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .exactla import (
    ExactMatrix,
    FieldSpec,
    _Rref,
    coords_in_span,
    cokernel_from_columns,
    factor_through,
    kernel_basis,
    rank,
    solve_affine,
)
from .groups import FiniteGroup


class PreconditionError(ValueError):
    """An operation was called outside its contract; message explains."""


@dataclass
class Report:
    """Pass/fail verdict with the first violated instances named."""

    ok: bool = True
    failures: list = dc_field(default_factory=list)
    details: dict = dc_field(default_factory=dict)

    def fail(self, msg: str):
        self.ok = False
        self.failures.append(msg)

    def __bool__(self):
        return self.ok


def _terms_canonical(terms, field: FieldSpec):
    out = {}
    for k, c in terms:
        c = field.coerce(c)
        if c:
            out[k] = out.get(k, field.zero) + c
    if field.kind == "prime":
        out = {k: v % field.p for k, v in out.items()}
    return tuple(sorted((k, v) for k, v in out.items() if v))


class FinAlgebra:
    """Associative unital algebra: e_i * e_j = sum_k c[i][j][k] e_k."""

    __slots__ = ("dim", "field", "products", "unit", "label", "flags")

    def __init__(self, dim: int, field: FieldSpec, products: dict, unit,
                 label: str = "", flags: frozenset = frozenset()):
        prods = {}
        for (i, j), terms in products.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"product index ({i},{j}) out of range")
            t = _terms_canonical(terms, field)
            for k, _ in t:
                if not 0 <= k < dim:
                    raise ValueError(f"product target {k} out of range")
            if t:
                prods[(i, j)] = t
        u = tuple(field.coerce(x) for x in unit)
        if len(u) != dim:
            raise ValueError("unit vector has wrong length")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "products", prods)
        object.__setattr__(self, "unit", u)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "flags", flags)

    def __setattr__(self, *a):
        raise AttributeError("FinAlgebra is immutable")

    @staticmethod
    def from_dense(structure, unit, field: FieldSpec, label: str = "") -> "FinAlgebra":
        dim = len(structure)
        prods = {}
        for i in range(dim):
            for j in range(dim):
                terms = [(k, structure[i][j][k]) for k in range(dim)]
                prods[(i, j)] = terms
        return FinAlgebra(dim, field, prods, unit, label=label)

    def structure_constants(self) -> list:
        """Dense dim^3 nested list; intended for files and small algebras."""
        z = self.field.zero
        out = [[[z] * self.dim for _ in range(self.dim)] for _ in range(self.dim)]
        for (i, j), terms in self.products.items():
            for k, c in terms:
                out[i][j][k] = c
        return out

    def product(self, i: int, j: int) -> tuple:
        return self.products.get((i, j), ())

    def multiply(self, u, v) -> tuple:
        """Product of two coefficient vectors."""
        fld = self.field
        acc = {}
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                for k, c in self.product(i, j):
                    acc[k] = acc.get(k, fld.zero) + ui * vj * c
        out = [fld.zero] * self.dim
        for k, val in acc.items():
            out[k] = fld.coerce(val)
        return tuple(out)

    def left_mult_matrix(self, i: int) -> ExactMatrix:
        """Matrix of x -> e_i x; column j holds e_i e_j."""
        fld = self.field
        flat = [fld.zero] * (self.dim * self.dim)
        for j in range(self.dim):
            for k, c in self.product(i, j):
                flat[k * self.dim + j] = c
        return ExactMatrix(self.dim, self.dim, flat, fld)

    def right_mult_matrix(self, i: int) -> ExactMatrix:
        """Matrix of x -> x e_i; column j holds e_j e_i."""
        fld = self.field
        flat = [fld.zero] * (self.dim * self.dim)
        for j in range(self.dim):
            for k, c in self.product(j, i):
                flat[k * self.dim + j] = c
        return ExactMatrix(self.dim, self.dim, flat, fld)

    def left_mult_of_vector(self, u) -> ExactMatrix:
        fld = self.field
        flat = [fld.zero] * (self.dim * self.dim)
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j in range(self.dim):
                for k, c in self.product(i, j):
                    flat[k * self.dim + j] += ui * c
        return ExactMatrix(self.dim, self.dim, flat, fld)

    def right_mult_of_vector(self, u) -> ExactMatrix:
        fld = self.field
        flat = [fld.zero] * (self.dim * self.dim)
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j in range(self.dim):
                for k, c in self.product(j, i):
                    flat[k * self.dim + j] += ui * c
        return ExactMatrix(self.dim, self.dim, flat, fld)

    def opposite(self) -> "FinAlgebra":
        prods = {(j, i): terms for (i, j), terms in self.products.items()}
        return FinAlgebra(self.dim, self.field, prods, self.unit,
                          label=f"op({self.label})" if self.label else "op")

    def __repr__(self):
        return f"FinAlgebra(dim={self.dim}, field={self.field}, label={self.label!r})"


# -- constructions ----------------------------------------------------


def ground_field_algebra(field: FieldSpec) -> FinAlgebra:
    return FinAlgebra(1, field, {(0, 0): ((0, field.one),)}, (field.one,), label="k")


def group_algebra(g: FiniteGroup, field: FieldSpec) -> FinAlgebra:
    """k[G] on the group basis; e_i e_j = e_{table[i][j]}.

    In characteristic p dividing |G| the algebra is still constructed but
    flagged, since Maschke's guarantee is gone.
    """
    one = field.one
    prods = {(i, j): ((g.table[i][j], one),) for i in range(g.order) for j in range(g.order)}
    unit = tuple(one if i == g.identity else field.zero for i in range(g.order))
    flags = frozenset()
    if field.kind == "prime" and g.order % field.p == 0:
        flags = frozenset({"maschke-risk"})
    return FinAlgebra(g.order, field, prods, unit, label=f"k[{g.label}]", flags=flags)


def matrix_algebra(n: int, field: FieldSpec) -> FinAlgebra:
    """n x n matrix algebra on the E_{ab} basis, index a*n + b."""
    one = field.one
    prods = {}
    for a in range(n):
        for b in range(n):
            for d in range(n):
                prods[(a * n + b, b * n + d)] = ((a * n + d, one),)
    unit = [field.zero] * (n * n)
    for a in range(n):
        unit[a * n + a] = one
    return FinAlgebra(n * n, field, prods, unit, label=f"mat({n})")


def tensor_product_algebra(a1: FinAlgebra, a2: FinAlgebra) -> FinAlgebra:
    """Plain tensor product algebra on the pair basis (i, j) -> i*dim2 + j.

    Simple counts multiply when both factors are split semisimple.
    """
    if a1.field != a2.field:
        raise PreconditionError(f"field mismatch: {a1.field} vs {a2.field}")
    d2 = a2.dim
    prods = {}
    for (i, ip), t1 in a1.products.items():
        for (j, jp), t2 in a2.products.items():
            terms = [(k * d2 + l, c1 * c2) for k, c1 in t1 for l, c2 in t2]
            prods[(i * d2 + j, ip * d2 + jp)] = terms
    unit = [a1.unit[i] * a2.unit[j] for i in range(a1.dim) for j in range(d2)]
    return FinAlgebra(a1.dim * d2, a1.field, prods, unit,
                      label=f"{a1.label}(x){a2.label}")


# -- validation --------------------------------------------------------


def validate_algebra(a: FinAlgebra) -> Report:
    """Unit laws and exhaustive associativity over all basis triples."""
    rep = Report()
    fld = a.field
    dim = a.dim
    for x in range(dim):
        if a.multiply(a.unit, _basis_vec(x, dim, fld)) != _basis_vec(x, dim, fld):
            rep.fail(f"unit * e_{x} != e_{x}")
            break
        if a.multiply(_basis_vec(x, dim, fld), a.unit) != _basis_vec(x, dim, fld):
            rep.fail(f"e_{x} * unit != e_{x}")
            break
    tri = _assoc_violation(a)
    if tri is not None:
        rep.fail("associativity fails at triple (%d, %d, %d)" % tri)
        rep.details["triple"] = tri
    return rep


def _basis_vec(x: int, dim: int, fld: FieldSpec):
    return tuple(fld.one if i == x else fld.zero for i in range(dim))


def _assoc_violation(a: FinAlgebra):
    """First (i, j, l) with (e_i e_j) e_l != e_i (e_j e_l), or None.

    Written as a tight loop with a monomial fast path: the enveloping
    algebras reaching dim 216 have single-term products throughout.
    """
    get = a.products.get
    dim = a.dim
    prime = a.field.kind == "prime"
    p = a.field.p
    empty = ()
    for i in range(dim):
        for j in range(dim):
            pij = get((i, j), empty)
            mono_ij = len(pij) == 1 and pij[0][1] == a.field.one
            for l in range(dim):
                if mono_ij:
                    lhs = get((pij[0][0], l), empty)
                else:
                    accl = {}
                    for k, c in pij:
                        for m, c2 in get((k, l), empty):
                            accl[m] = accl.get(m, 0) + c * c2
                    if prime:
                        lhs = tuple(sorted((m, v % p) for m, v in accl.items() if v % p))
                    else:
                        lhs = tuple(sorted((m, v) for m, v in accl.items() if v))
                pjl = get((j, l), empty)
                if len(pjl) == 1 and pjl[0][1] == a.field.one:
                    rhs = get((i, pjl[0][0]), empty)
                else:
                    accr = {}
                    for k, c in pjl:
                        for m, c2 in get((i, k), empty):
                            accr[m] = accr.get(m, 0) + c * c2
                    if prime:
                        rhs = tuple(sorted((m, v % p) for m, v in accr.items() if v % p))
                    else:
                        rhs = tuple(sorted((m, v) for m, v in accr.items() if v))
                if lhs != rhs:
                    return (i, j, l)
    return None


# -- modules -----------------------------------------------------------


class AlgModule:
    """Module given by one action matrix per algebra basis vector.

    Left: act[i] act[j] = sum_k c[i][j][k] act[k]   (homomorphism).
    Right: act[j] act[i] = sum_k c[i][j][k] act[k]  (anti-compatible);
    act[i] is the matrix of x -> x * e_i.
    """

    __slots__ = ("algebra", "side", "dim", "action")

    def __init__(self, algebra: FinAlgebra, side: str, dim: int, action,
                 validate: bool = True):
        if side not in ("left", "right"):
            raise ValueError(f"side must be left or right, got {side!r}")
        action = tuple(action)
        if len(action) != algebra.dim:
            raise ValueError("need one action matrix per algebra basis vector")
        for m in action:
            if m.rows != dim or m.cols != dim or m.field != algebra.field:
                raise ValueError("action matrix shape or field mismatch")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "side", side)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "action", action)
        if validate:
            rep = validate_module(self)
            if not rep.ok:
                raise PreconditionError("invalid module: " + "; ".join(rep.failures))

    def __setattr__(self, *a):
        raise AttributeError("AlgModule is immutable")

    def act_vector(self, u) -> ExactMatrix:
        """Action matrix of the algebra element with coefficient vector u."""
        fld = self.algebra.field
        out = ExactMatrix.zeros(self.dim, self.dim, fld)
        for i, ui in enumerate(u):
            if ui:
                out = out + self.action[i].scale(ui)
        return out

    def __repr__(self):
        return f"AlgModule({self.side}, dim={self.dim}, over {self.algebra.label!r})"


def validate_module(m: AlgModule) -> Report:
    rep = Report()
    a = m.algebra
    ident = ExactMatrix.identity(m.dim, a.field)
    if m.act_vector(a.unit) != ident:
        rep.fail("unit does not act as identity")
        return rep
    for i in range(a.dim):
        for j in range(a.dim):
            expected = ExactMatrix.zeros(m.dim, m.dim, a.field)
            for k, c in a.product(i, j):
                expected = expected + m.action[k].scale(c)
            got = (m.action[i] @ m.action[j]) if m.side == "left" else (m.action[j] @ m.action[i])
            if got != expected:
                rep.fail(f"action incompatible with product at pair ({i}, {j})")
                rep.details["pair"] = (i, j)
                return rep
    return rep


def regular_left(a: FinAlgebra) -> AlgModule:
    return AlgModule(a, "left", a.dim, [a.left_mult_matrix(i) for i in range(a.dim)],
                     validate=False)


def regular_right(a: FinAlgebra) -> AlgModule:
    return AlgModule(a, "right", a.dim, [a.right_mult_matrix(i) for i in range(a.dim)],
                     validate=False)


def zero_module(a: FinAlgebra, side: str) -> AlgModule:
    z = ExactMatrix.zeros(0, 0, a.field)
    return AlgModule(a, side, 0, [z] * a.dim, validate=False)


def module_direct_sum(m1: AlgModule, m2: AlgModule) -> AlgModule:
    if m1.algebra is not m2.algebra and m1.algebra.products != m2.algebra.products:
        raise PreconditionError("direct sum needs modules over the same algebra")
    if m1.side != m2.side:
        raise PreconditionError("direct sum needs modules on the same side")
    fld = m1.algebra.field
    d1, d2 = m1.dim, m2.dim
    action = []
    for i in range(m1.algebra.dim):
        flat = [fld.zero] * ((d1 + d2) * (d1 + d2))
        a1, a2 = m1.action[i], m2.action[i]
        for r in range(d1):
            for c in range(d1):
                flat[r * (d1 + d2) + c] = a1[r, c]
        for r in range(d2):
            for c in range(d2):
                flat[(d1 + r) * (d1 + d2) + (d1 + c)] = a2[r, c]
        action.append(ExactMatrix(d1 + d2, d1 + d2, flat, fld))
    return AlgModule(m1.algebra, m1.side, d1 + d2, action, validate=False)


class AlgBimodule:
    """Two-sided module: left action of one algebra, right of another,
    with the two actions commuting."""

    __slots__ = ("left_algebra", "right_algebra", "dim", "left_action", "right_action")

    def __init__(self, left_algebra: FinAlgebra, right_algebra: FinAlgebra,
                 dim: int, left_action, right_action, validate: bool = True):
        object.__setattr__(self, "left_algebra", left_algebra)
        object.__setattr__(self, "right_algebra", right_algebra)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "left_action", tuple(left_action))
        object.__setattr__(self, "right_action", tuple(right_action))
        if validate:
            rep = validate_bimodule(self)
            if not rep.ok:
                raise PreconditionError("invalid bimodule: " + "; ".join(rep.failures))

    def __setattr__(self, *a):
        raise AttributeError("AlgBimodule is immutable")

    def as_left(self) -> AlgModule:
        return AlgModule(self.left_algebra, "left", self.dim, self.left_action,
                         validate=False)

    def as_right(self) -> AlgModule:
        return AlgModule(self.right_algebra, "right", self.dim, self.right_action,
                         validate=False)


def validate_bimodule(x: AlgBimodule) -> Report:
    rep = validate_module(x.as_left())
    if not rep.ok:
        rep.failures = ["left " + f for f in rep.failures]
        return rep
    rep = validate_module(x.as_right())
    if not rep.ok:
        rep.failures = ["right " + f for f in rep.failures]
        return rep
    rep = Report()
    for i in range(x.left_algebra.dim):
        for j in range(x.right_algebra.dim):
            if x.left_action[i] @ x.right_action[j] != x.right_action[j] @ x.left_action[i]:
                rep.fail(f"left/right actions do not commute at pair ({i}, {j})")
                return rep
    return rep


# -- hom spaces and intertwiners ---------------------------------------


def intertwiner_space(dim_in: int, dim_out: int, constraints, field: FieldSpec,
                      allowed=None) -> list[ExactMatrix]:
    """Basis of {f : dim_in -> dim_out} with f rho_in = rho_out f for all
    (rho_in, rho_out) in constraints, f supported on the allowed positions.

    Solved by intersecting one constraint kernel at a time on sparsely
    stored candidates, so the first constraint collapses the search space
    before any large dense system forms.
    """
    if allowed is None:
        allowed = [(r, c) for r in range(dim_out) for c in range(dim_in)]
    if not allowed or dim_in == 0 or dim_out == 0:
        return []
    one = field.one
    prime = field.kind == "prime"
    p = field.p
    # candidate maps as sparse dicts (row, col) -> scalar
    basis = [{pos: one} for pos in allowed]
    for rho_in, rho_out in constraints:
        if not basis:
            return []
        in_rows = _sparse_rows(rho_in)
        out_cols = _sparse_cols(rho_out)
        residuals = []
        for f in basis:
            res = {}
            for (r, c), v in f.items():
                for j, w in in_rows[c]:
                    res[(r, j)] = res.get((r, j), 0) + v * w
                for i, w in out_cols[r]:
                    res[(i, c)] = res.get((i, c), 0) - w * v
            if prime:
                res = {k: val % p for k, val in res.items() if val % p}
            else:
                res = {k: val for k, val in res.items() if val}
            residuals.append(res)
        # kernel of the stacked residual matrix; all-zero rows dropped
        positions = sorted(set().union(*residuals)) if residuals else []
        if positions:
            rows = []
            for pos in positions:
                rows.append([res.get(pos, field.zero) for res in residuals])
            w = ExactMatrix.from_rows(rows, field)
            ker = kernel_basis(w)
        else:
            ker = None  # every residual already vanished
        if ker is None:
            continue
        if not ker:
            return []
        new_basis = []
        for vec in ker:
            merged = {}
            for b, coeff in enumerate(vec):
                if coeff:
                    for pos, val in basis[b].items():
                        merged[pos] = merged.get(pos, field.zero) + coeff * val
            if prime:
                merged = {k: v % p for k, v in merged.items() if v % p}
            else:
                merged = {k: v for k, v in merged.items() if v}
            new_basis.append(merged)
        basis = new_basis
    out = []
    for f in basis:
        flat = [field.zero] * (dim_out * dim_in)
        for (r, c), v in f.items():
            flat[r * dim_in + c] = v
        out.append(ExactMatrix(dim_out, dim_in, flat, field))
    return out


def _sparse_rows(m: ExactMatrix) -> list:
    out = [[] for _ in range(m.rows)]
    for r in range(m.rows):
        base = r * m.cols
        for j in range(m.cols):
            v = m.data[base + j]
            if v:
                out[r].append((j, v))
    return out


def _sparse_cols(m: ExactMatrix) -> list:
    out = [[] for _ in range(m.cols)]
    for r in range(m.rows):
        base = r * m.cols
        for j in range(m.cols):
            v = m.data[base + j]
            if v:
                out[j].append((r, v))
    return out


def hom_space(m: AlgModule, n: AlgModule) -> list[ExactMatrix]:
    """Basis of module maps m -> n (f(a x) = a f(x), resp. the right law)."""
    if m.algebra.products != n.algebra.products or m.algebra.field != n.algebra.field:
        raise PreconditionError("hom_space needs modules over the same algebra")
    if m.side != n.side:
        raise PreconditionError("hom_space needs modules on the same side")
    constraints = [(m.action[i], n.action[i]) for i in range(m.algebra.dim)]
    return intertwiner_space(m.dim, n.dim, constraints, m.algebra.field)


# -- tensor over an algebra --------------------------------------------


def tensor_over_algebra(m: AlgModule, n: AlgModule,
                        spanning=None) -> tuple[int, ExactMatrix]:
    """m (x)_A n as the cokernel of m(x)A(x)n => m(x)n.

    m must be a right module and n a left module over the same algebra.
    Returns (dim, projection from the plain tensor product); the pair
    basis of m(x)n is lexicographic (x_m, y_n).

    spanning, when given, is a family of algebra elements (coefficient
    vectors) generating the algebra as a unital algebra; the balancing
    relations of products telescope into those of the factors, so the
    relation subspace, and hence the cokernel, is unchanged while the
    column count drops from dim(A) to len(spanning).
    """
    if m.side != "right" or n.side != "left":
        raise PreconditionError("tensor_over_algebra needs (right, left) modules")
    if m.algebra.products != n.algebra.products or m.algebra.field != n.algebra.field:
        raise PreconditionError("tensor_over_algebra needs a common algebra")
    a = m.algebra
    fld = a.field
    dn = n.dim
    if spanning is None:
        acts = [(m.action[i], n.action[i]) for i in range(a.dim)]
    else:
        acts = [(m.act_vector(v), n.act_vector(v)) for v in spanning]

    def columns():
        for mi, ni in acts:
            for x in range(m.dim):
                for y in range(dn):
                    col = []
                    for xm in range(m.dim):
                        c = mi[xm, x]
                        if c:
                            col.append((xm * dn + y, c))
                    for yn in range(dn):
                        c = ni[yn, y]
                        if c:
                            col.append((x * dn + yn, fld.neg(c)))
                    yield col

    proj, dim = cokernel_from_columns(columns(), m.dim * dn, fld)
    return dim, proj


# -- semisimplicity and simple counting --------------------------------


def trace_gram_matrix(a: FinAlgebra) -> ExactMatrix:
    """Gram matrix of the trace form T(x, y) = trace(L_{xy}) = trace(L_x L_y)."""
    fld = a.field
    tr = [fld.zero] * a.dim
    for k in range(a.dim):
        t = fld.zero
        for m in range(a.dim):
            for k2, c in a.product(k, m):
                if k2 == m:
                    t += c
        tr[k] = fld.coerce(t)
    flat = [fld.zero] * (a.dim * a.dim)
    for (i, j), terms in a.products.items():
        s = fld.zero
        for k, c in terms:
            if tr[k]:
                s += c * tr[k]
        flat[i * a.dim + j] = fld.coerce(s)
    return ExactMatrix(a.dim, a.dim, flat, fld)


def semisimplicity_certificate(a: FinAlgebra) -> str:
    """'certified_semisimple' if the trace form is nondegenerate, else
    'unknown'.  One-sided in positive characteristic: degeneracy never
    certifies non-semisimplicity."""
    gram = trace_gram_matrix(a)
    return "certified_semisimple" if rank(gram) == a.dim else "unknown"


def center_basis(a: FinAlgebra, generating=None) -> list[tuple]:
    """Basis of {x : x y = y x for all y}, by kernel intersection.

    Commuting with a unital generating family is enough, so callers that
    know one (enveloping algebras do) can pass it; the default sweeps the
    whole basis.
    """
    fld = a.field
    if generating is None:
        generating = [_basis_vec(i, a.dim, fld) for i in range(a.dim)]
    vecs = [list(_basis_vec(i, a.dim, fld)) for i in range(a.dim)]
    for g in generating:
        if not vecs:
            break
        cols = []
        nonzero = False
        for v in vecs:
            lv = a.multiply(g, v)
            rv = a.multiply(v, g)
            res = [x - y for x, y in zip(lv, rv)]
            if fld.kind == "prime":
                res = [x % fld.p for x in res]
            if any(res):
                nonzero = True
            cols.append(res)
        if not nonzero:
            continue
        w = ExactMatrix.from_cols(cols, fld)
        ker = kernel_basis(w)
        if len(ker) == len(vecs):
            continue
        new_vecs = []
        for kv in ker:
            acc = [fld.zero] * a.dim
            for b, coeff in enumerate(kv):
                if coeff:
                    vb = vecs[b]
                    for t in range(a.dim):
                        if vb[t]:
                            acc[t] += coeff * vb[t]
            if fld.kind == "prime":
                acc = [x % fld.p for x in acc]
            new_vecs.append(acc)
        vecs = new_vecs
    return [tuple(fld.coerce(x) for x in v) for v in vecs]


def split_simple_count(a: FinAlgebra, assume_split: bool = False,
                       generating=None) -> int:
    """Number of simple modules of a split semisimple algebra = dim Z(a).

    Refuses unless the trace-form certificate holds and the caller
    asserts the field splits the algebra (see splitting policy helpers).
    """
    if not assume_split:
        raise PreconditionError(
            "caller must assert a splitting field (assume_split=True); "
            "the artifact never computes splitting fields"
        )
    if semisimplicity_certificate(a) != "certified_semisimple":
        raise PreconditionError(
            "semisimplicity certificate unavailable (trace form degenerate); "
            "refusing to count simples"
        )
    return len(center_basis(a, generating=generating))


def splitting_field_ok(g: FiniteGroup, field: FieldSpec) -> bool:
    """Documented splitting policy for group algebras k[G].

    Rationals: symmetric groups (and any group of exponent <= 2).
    Prime p: p not dividing |G| and p = 1 mod exponent(G).
    """
    if field.kind == "rational":
        return g.label.startswith("symmetric(") or g.exponent() <= 2
    p = field.p
    return g.order % p != 0 and (p - 1) % g.exponent() == 0


# -- central idempotents (optional cross-check machinery) ---------------


def _min_poly_of_matrix(m: ExactMatrix) -> list:
    """Monic minimal polynomial coefficients [c0, c1, ..., 1]."""
    fld = m.field
    n = m.rows
    power = ExactMatrix.identity(n, fld)
    acc = _Rref(n * n, fld)
    powers = [power]
    while True:
        if not acc.insert(list(power.data)):
            # current power is dependent on the earlier ones: solve for coeffs
            prev = powers[:-1]
            coords = coords_in_span(
                [pm for pm in prev], powers[-1]
            )
            coeffs = [fld.neg(c) for c in coords] + [fld.one]
            return coeffs
        power = power @ m
        powers.append(power)


def _poly_roots(coeffs, field: FieldSpec):
    """All roots in the field of a monic polynomial, or None if it does
    not split with distinct roots of full degree."""
    from fractions import Fraction

    deg = len(coeffs) - 1
    if field.kind == "prime":
        roots = [x for x in range(field.p) if _poly_eval(coeffs, x, field) == 0]
        return roots if len(roots) == deg else None
    # integer rescale: roots p/q with q | lead, p | const
    denoms = 1
    for c in coeffs:
        denoms = denoms * Fraction(c).denominator // _gcd(denoms, Fraction(c).denominator)
    ints = [int(Fraction(c) * denoms) for c in coeffs]
    lead, const = ints[-1], ints[0]
    if const == 0:
        cands = {Fraction(0)}
        while ints and ints[0] == 0:
            ints = ints[1:]
        if not ints:
            return None
        const = ints[0]
    else:
        cands = set()
    for p_div in _divisors(abs(const)):
        for q_div in _divisors(abs(lead)):
            cands.add(Fraction(p_div, q_div))
            cands.add(Fraction(-p_div, q_div))
    roots = sorted(x for x in cands if _poly_eval(coeffs, x, field) == 0)
    return roots if len(roots) == deg else None


def _poly_eval(coeffs, x, field: FieldSpec):
    acc = field.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return field.coerce(acc)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int):
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def central_primitive_idempotents(a: FinAlgebra):
    """Orthogonal central idempotents summing to 1, one per block, for a
    split semisimple algebra; None when no separating central element
    with fully split minimal polynomial is found among the candidates.

    Candidate search is deterministic: center basis vectors in order,
    then pairwise sums, then small integer combinations.
    """
    fld = a.field
    zb = center_basis(a)
    s = len(zb)
    if s == 0:
        return None
    if s == 1:
        return [a.unit]
    zmat = ExactMatrix.from_cols(zb, fld)

    def center_coords(vec):
        return solve_affine(zmat, vec)

    candidates = list(zb)
    for i in range(s):
        for j in range(i + 1, s):
            candidates.append(tuple(x + y for x, y in zip(zb[i], zb[j])))
    for w in (2, 3):
        candidates.append(tuple(
            sum((w ** i) * x for i, x in enumerate(col)) for col in zip(*zb)
        ))
    for z in candidates:
        z = tuple(fld.coerce(x) for x in z)
        # multiplication by z restricted to the center, in center coordinates
        cols = []
        for b in zb:
            prod = a.multiply(z, b)
            coords = center_coords(prod)
            if coords is None:
                cols = None
                break
            cols.append(list(coords))
        if cols is None:
            continue
        mz = ExactMatrix.from_cols(cols, fld)
        coeffs = _min_poly_of_matrix(mz)
        if len(coeffs) - 1 != s:
            continue
        roots = _poly_roots(coeffs, fld)
        if roots is None:
            continue
        idems = []
        for lam in roots:
            # e_lam = prod_{mu != lam} (z - mu) / (lam - mu), computed in a
            e = a.unit
            for mu in roots:
                if mu == lam:
                    continue
                shifted = tuple(
                    fld.coerce(zc - fld.coerce(mu) * uc) for zc, uc in zip(z, a.unit)
                )
                e = a.multiply(e, shifted)
                scale = fld.invert(fld.coerce(fld.coerce(lam) - fld.coerce(mu)))
                e = tuple(fld.coerce(x * scale) for x in e)
            idems.append(e)
        total = [fld.zero] * a.dim
        ok = True
        for e in idems:
            if a.multiply(e, e) != e:
                ok = False
                break
            total = [t + x for t, x in zip(total, e)]
        if ok and tuple(fld.coerce(t) for t in total) == a.unit:
            for i in range(len(idems)):
                for j in range(i + 1, len(idems)):
                    if any(x for x in a.multiply(idems[i], idems[j])):
                        ok = False
        if ok:
            return idems
    return None


def block_dimensions(a: FinAlgebra):
    """Dimensions of the central-idempotent blocks a*e, or None."""
    idems = central_primitive_idempotents(a)
    if idems is None:
        return None
    return [rank(a.right_mult_of_vector(e)) for e in idems]


def corner_algebra(a: FinAlgebra, e) -> tuple[FinAlgebra, ExactMatrix]:
    """Subalgebra e*a*e for a central idempotent e, with unit e.

    Returns the algebra and the dim(a) x dim(corner) inclusion matrix.
    """
    fld = a.field
    le = a.left_mult_of_vector(e)
    acc = _Rref(a.dim, fld)
    basis = []
    for j in range(a.dim):
        col = le.col(j)
        if acc.insert(list(col)):
            basis.append(col)
    incl = ExactMatrix.from_cols(basis, fld)
    prods = {}
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            w = a.multiply(u, v)
            coords = solve_affine(incl, w)
            if coords is None:
                raise PreconditionError("corner not closed under multiplication")
            prods[(i, j)] = tuple((k, c) for k, c in enumerate(coords) if c)
    ucoords = solve_affine(incl, tuple(fld.coerce(x) for x in e))
    if ucoords is None:
        raise PreconditionError("idempotent not in its own corner")
    return FinAlgebra(len(basis), fld, prods, ucoords, label=f"corner({a.label})"), incl


# -- endomorphism algebra / Morita transport ----------------------------


def endomorphism_algebra(p: AlgModule, test_modules=()) -> tuple[FinAlgebra, list[ExactMatrix], Report]:
    """End(p) with multiplication u * v := v o u, plus the evaluation
    check p (x)_End Hom(p, X) -> X for each test module X.

    Returns (algebra, intertwiner basis, report).  The report records,
    per test module, the dimensions and the rank of the induced map; the
    evaluation is an isomorphism exactly when full rank at equal dims.
    """
    if p.dim == 0:
        raise PreconditionError("endomorphism algebra of the zero module refused")
    fld = p.algebra.field
    basis = hom_space(p, p)
    n = len(basis)
    prods = {}
    for i, fi in enumerate(basis):
        for j, fj in enumerate(basis):
            comp = fj @ fi  # product i*j := f_j o f_i
            coords = coords_in_span(basis, comp)
            if coords is None:
                raise PreconditionError("endomorphism composite escapes the hom basis")
            prods[(i, j)] = tuple((k, c) for k, c in enumerate(coords) if c)
    ident = ExactMatrix.identity(p.dim, fld)
    unit = coords_in_span(basis, ident)
    end_alg = FinAlgebra(n, fld, prods, unit, label=f"end({p.side})")

    # p as a right End(p)-module: x * f := f(x)
    p_right = AlgModule(end_alg, "right", p.dim, basis, validate=False)

    rep = Report()
    for idx, x in enumerate(test_modules):
        homs = hom_space(p, x)
        # Hom(p, x) as a left End(p)-module: f * g := g o f
        left_action = []
        for f in basis:
            cols = []
            for g in homs:
                coords = coords_in_span(homs, g @ f)
                cols.append(list(coords))
            left_action.append(
                ExactMatrix.from_cols(cols, fld) if homs else ExactMatrix.zeros(0, 0, fld)
            )
        hom_left = AlgModule(end_alg, "left", len(homs), left_action, validate=False)
        tdim, proj = tensor_over_algebra(p_right, hom_left)
        # evaluation p (x) Hom(p, x) -> x ; column (v, gamma) holds g_gamma(v)
        ev_cols = []
        for v in range(p.dim):
            for g in homs:
                ev_cols.append(list(g.col(v)))
        ev = (ExactMatrix.from_cols(ev_cols, fld) if ev_cols
              else ExactMatrix.zeros(x.dim, 0, fld))
        induced = factor_through(proj, ev)
        ok = induced is not None and tdim == x.dim and rank(induced) == x.dim
        rep.details[f"test_{idx}"] = {
            "tensor_dim": tdim,
            "target_dim": x.dim,
            "rank": None if induced is None else rank(induced),
            "iso": ok,
        }
        if not ok:
            rep.fail(f"evaluation not an isomorphism for test module {idx}")
    return end_alg, basis, rep
