"""Exact dense linear algebra over Q and over prime fields.

Everything downstream (module homs, cokernels of balancing maps, trace
forms, centers) reduces to the routines in this file.  Scalars are
``fractions.Fraction`` for the rationals and least nonnegative residues
(plain ``int``) for a prime field; no floating point anywhere.  All
values are immutable after construction and every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class FieldMismatchError(ValueError):
    """Operands live over different fields."""


class DimensionMismatchError(ValueError):
    """Operand shapes are incompatible."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Ground field: the rationals, or Z/p for a prime p."""

    kind: str  # "rational" | "prime"
    p: int = 0

    def __post_init__(self):
        if self.kind == "rational":
            if self.p != 0:
                raise ValueError("rational field takes no modulus")
        elif self.kind == "prime":
            if not _is_prime(self.p):
                raise ValueError(f"modulus {self.p} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec("rational")

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec("prime", p)

    @property
    def zero(self):
        return Fraction(0) if self.kind == "rational" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "rational" else 1

    def coerce(self, x):
        """Canonical form of a scalar: lowest terms, or least residue."""
        if self.kind == "rational":
            return x if isinstance(x, Fraction) else Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator not a unit mod {self.p}")
            return x.numerator * pow(x.denominator, self.p - 2, self.p) % self.p
        return int(x) % self.p

    def invert(self, x):
        if self.kind == "rational":
            return Fraction(1) / x
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, self.p - 2, self.p)

    def neg(self, x):
        return -x if self.kind == "rational" else (-x) % self.p

    def __str__(self):
        return "Q" if self.kind == "rational" else f"F{self.p}"


QQ = FieldSpec.rationals()


def GF(p: int) -> FieldSpec:
    return FieldSpec.prime(p)


class ExactMatrix:
    """Immutable dense matrix over a FieldSpec, row-major storage."""

    __slots__ = ("rows", "cols", "field", "data", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable, field: FieldSpec):
        if rows < 0 or cols < 0:
            raise DimensionMismatchError("negative dimensions")
        data = tuple(field.coerce(x) for x in entries)
        if len(data) != rows * cols:
            raise DimensionMismatchError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(data)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("ExactMatrix is immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def _raw(rows: int, cols: int, data, field: FieldSpec) -> "ExactMatrix":
        """Internal constructor for entries already in canonical form."""
        m = object.__new__(ExactMatrix)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "data", tuple(data))
        object.__setattr__(m, "_hash", None)
        return m

    @staticmethod
    def from_rows(rows_seq: Sequence[Sequence], field: FieldSpec) -> "ExactMatrix":
        rows = len(rows_seq)
        cols = len(rows_seq[0]) if rows else 0
        flat = [x for row in rows_seq for x in row]
        return ExactMatrix(rows, cols, flat, field)

    @staticmethod
    def from_cols(cols_seq: Sequence[Sequence], field: FieldSpec) -> "ExactMatrix":
        cols = len(cols_seq)
        rows = len(cols_seq[0]) if cols else 0
        flat = [cols_seq[j][i] for i in range(rows) for j in range(cols)]
        return ExactMatrix(rows, cols, flat, field)

    @staticmethod
    def identity(n: int, field: FieldSpec) -> "ExactMatrix":
        one, zero = field.one, field.zero
        return ExactMatrix._raw(n, n, [one if i == j else zero for i in range(n) for j in range(n)], field)

    @staticmethod
    def zeros(rows: int, cols: int, field: FieldSpec) -> "ExactMatrix":
        return ExactMatrix._raw(rows, cols, [field.zero] * (rows * cols), field)

    # -- basic access ------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.data[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.data[i * self.cols + j] for i in range(self.rows))

    def to_lists(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.field == other.field
            and self.data == other.data
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.rows, self.cols, self.field, self.data))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        if self.rows * self.cols <= 36:
            return f"ExactMatrix({self.to_lists()}, {self.field})"
        return f"ExactMatrix({self.rows}x{self.cols} over {self.field})"

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for x in self.data)

    # -- arithmetic --------------------------------------------------

    def _check_field(self, other: "ExactMatrix"):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError("shape mismatch in add")
        if self.field.kind == "prime":
            p = self.field.p
            return ExactMatrix._raw(self.rows, self.cols,
                                    [(a + b) % p for a, b in zip(self.data, other.data)], self.field)
        return ExactMatrix._raw(self.rows, self.cols,
                                [a + b for a, b in zip(self.data, other.data)], self.field)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError("shape mismatch in sub")
        if self.field.kind == "prime":
            p = self.field.p
            return ExactMatrix._raw(self.rows, self.cols,
                                    [(a - b) % p for a, b in zip(self.data, other.data)], self.field)
        return ExactMatrix._raw(self.rows, self.cols,
                                [a - b for a, b in zip(self.data, other.data)], self.field)

    def scale(self, scalar) -> "ExactMatrix":
        c = self.field.coerce(scalar)
        if self.field.kind == "prime":
            p = self.field.p
            return ExactMatrix._raw(self.rows, self.cols, [a * c % p for a in self.data], self.field)
        return ExactMatrix._raw(self.rows, self.cols, [a * c for a in self.data], self.field)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self.mul(other)

    def mul(self, other: "ExactMatrix") -> "ExactMatrix":
        """Matrix product, skipping zero entries of the left factor.

        Action matrices in this artifact are mostly permutation-like, so
        the nnz(left) * cols(right) bound matters more than cubic worst case.
        """
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        n, m, q = self.rows, self.cols, other.cols
        zero = self.field.zero
        out = [zero] * (n * q)
        a, b = self.data, other.data
        for i in range(n):
            ai = i * m
            oi = i * q
            for k in range(m):
                aik = a[ai + k]
                if aik:
                    bk = k * q
                    for j in range(q):
                        bkj = b[bk + j]
                        if bkj:
                            out[oi + j] += aik * bkj
        if self.field.kind == "prime":
            p = self.field.p
            out = [x % p for x in out]
        return ExactMatrix._raw(n, q, out, self.field)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix._raw(
            self.cols, self.rows,
            [self.data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
            self.field,
        )

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        """Kronecker product; pair basis (i, j) in lexicographic order."""
        self._check_field(other)
        n, m = self.rows, self.cols
        r, s = other.rows, other.cols
        zero = self.field.zero
        out = [zero] * (n * r * m * s)
        for i in range(n):
            for k in range(m):
                a = self.data[i * m + k]
                if not a:
                    continue
                for j in range(r):
                    base = (i * r + j) * (m * s) + k * s
                    brow = j * s
                    for l in range(s):
                        b = other.data[brow + l]
                        if b:
                            out[base + l] = a * b
        if self.field.kind == "prime":
            p = self.field.p
            out = [x % p for x in out]
        return ExactMatrix._raw(n * r, m * s, out, self.field)

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_field(other)
        if self.rows != other.rows:
            raise DimensionMismatchError("hstack row mismatch")
        flat = []
        for i in range(self.rows):
            flat.extend(self.row(i))
            flat.extend(other.row(i))
        return ExactMatrix._raw(self.rows, self.cols + other.cols, flat, self.field)

    def vstack(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_field(other)
        if self.cols != other.cols:
            raise DimensionMismatchError("vstack col mismatch")
        return ExactMatrix._raw(self.rows + other.rows, self.cols, self.data + other.data, self.field)

    def trace(self):
        if self.rows != self.cols:
            raise DimensionMismatchError("trace of non-square matrix")
        t = self.field.zero
        for i in range(self.rows):
            t += self.data[i * self.cols + i]
        return self.field.coerce(t)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix times column vector, returned as a plain tuple."""
        if len(vec) != self.cols:
            raise DimensionMismatchError("vector length mismatch")
        v = [self.field.coerce(x) for x in vec]
        zero = self.field.zero
        out = []
        for i in range(self.rows):
            s = zero
            base = i * self.cols
            for k, vk in enumerate(v):
                if vk:
                    a = self.data[base + k]
                    if a:
                        s += a * vk
            out.append(self.field.coerce(s))
        return tuple(out)


# -- row reduction core ----------------------------------------------


class _Rref:
    """Reduced row echelon accumulator; rows are inserted one at a time.

    Rows are stored sparsely (dict column -> scalar, pivot entry 1) and
    kept fully reduced, so kernel extraction, membership tests and
    cokernel projections are direct reads.  Sparse storage is what keeps
    the permutation-like matrices of this artifact near-linear.
    """

    __slots__ = ("ncols", "field", "pivots", "rows")

    def __init__(self, ncols: int, field: FieldSpec):
        self.ncols = ncols
        self.field = field
        self.pivots: list[int] = []         # pivot column of each stored row
        self.rows: list[dict] = []          # sparse rows, row[pivot] == 1

    def reduce_vector(self, vec: list) -> list:
        """Reduce vec (dense list, consumed) modulo the current row space."""
        prime = self.field.kind == "prime"
        p = self.field.p
        for r, pc in enumerate(self.pivots):
            c = vec[pc]
            if c:
                for j, val in self.rows[r].items():
                    vec[j] -= c * val
                if prime:
                    for j in self.rows[r]:
                        vec[j] %= p
        if prime:
            return [x % p for x in vec]
        return vec

    def insert(self, vec) -> bool:
        """Insert a row (dense sequence); True if it increased the rank."""
        fld = self.field
        vec = self.reduce_vector(list(vec))
        pc = next((j for j, x in enumerate(vec) if x), -1)
        if pc < 0:
            return False
        inv = fld.invert(vec[pc])
        if fld.kind == "prime":
            p = fld.p
            new = {j: x * inv % p for j, x in enumerate(vec) if x * inv % p}
        else:
            new = {j: x * inv for j, x in enumerate(vec) if x}
        new[pc] = fld.one
        for r in range(len(self.rows)):
            row = self.rows[r]
            c = row.get(pc)
            if c:
                merged = dict(row)
                for j, val in new.items():
                    t = merged.get(j, fld.zero) - c * val
                    if fld.kind == "prime":
                        t %= fld.p
                    if t:
                        merged[j] = t
                    else:
                        merged.pop(j, None)
                self.rows[r] = merged
        at = next((k for k, q in enumerate(self.pivots) if q > pc), len(self.pivots))
        self.pivots.insert(at, pc)
        self.rows.insert(at, new)
        return True

    def insert_sparse(self, entries) -> bool:
        """Insert a row given as an iterable of (col, coeff) pairs."""
        vec = [self.field.zero] * self.ncols
        for j, c in entries:
            vec[j] += c
        return self.insert(vec)

    @property
    def rank(self) -> int:
        return len(self.rows)


class _SparseEchelon:
    """Row echelon accumulator for very sparse, very wide problems.

    Rows are kept in (non-reduced) echelon form during insertion, which
    makes each insert proportional to the fill it actually touches; a
    final back-substitution pass produces the fully reduced rows the
    cokernel extraction needs.
    """

    __slots__ = ("ncols", "field", "pivot_map", "rows", "pivots")

    def __init__(self, ncols: int, field: FieldSpec):
        self.ncols = ncols
        self.field = field
        self.pivot_map: dict = {}   # pivot column -> row index
        self.pivots: list[int] = []
        self.rows: list[dict] = []  # sparse rows, support in [pivot, ncols)

    def insert_sparse(self, entries) -> bool:
        import heapq

        fld = self.field
        prime = fld.kind == "prime"
        p = fld.p
        vec: dict = {}
        for j, c in entries:
            vec[j] = vec.get(j, 0) + c
        if prime:
            vec = {j: c % p for j, c in vec.items() if c % p}
        else:
            vec = {j: c for j, c in vec.items() if c}
        heap = list(vec)
        heapq.heapify(heap)
        while heap:
            j = heapq.heappop(heap)
            c = vec.get(j)
            if not c:
                continue
            r = self.pivot_map.get(j)
            if r is None:
                inv = fld.invert(c)
                if prime:
                    row = {k: v * inv % p for k, v in vec.items() if v * inv % p}
                else:
                    row = {k: v * inv for k, v in vec.items() if v}
                row[j] = fld.one
                self.pivot_map[j] = len(self.rows)
                self.pivots.append(j)
                self.rows.append(row)
                return True
            del vec[j]
            row = self.rows[r]
            for k, v in row.items():
                if k == j:
                    continue
                t = vec.get(k, 0) - c * v
                if prime:
                    t %= p
                if t:
                    if k not in vec:
                        heapq.heappush(heap, k)
                    vec[k] = t
                else:
                    vec.pop(k, None)
        return False

    def reduced(self):
        """Back-substitute to fully reduced rows; returns (pivots, rows)
        with pivots sorted ascending and rows aligned."""
        fld = self.field
        prime = fld.kind == "prime"
        p = fld.p
        order = sorted(range(len(self.rows)), key=lambda r: self.pivots[r],
                       reverse=True)
        for idx in order:
            row = self.rows[idx]
            own = self.pivots[idx]
            merged = dict(row)
            for k, v in row.items():
                if k == own:
                    continue
                r2 = self.pivot_map.get(k)
                if r2 is None:
                    continue
                other = self.rows[r2]
                c = merged.get(k)
                if not c:
                    continue
                for kk, vv in other.items():
                    t = merged.get(kk, fld.zero) - c * vv
                    if prime:
                        t %= p
                    if t:
                        merged[kk] = t
                    else:
                        merged.pop(kk, None)
            self.rows[idx] = merged
        pairs = sorted(zip(self.pivots, self.rows))
        pivots = [pc for pc, _ in pairs]
        rows = [row for _, row in pairs]
        return pivots, rows

    @property
    def rank(self) -> int:
        return len(self.rows)


def _rref_of(m: ExactMatrix) -> _Rref:
    acc = _Rref(m.cols, m.field)
    for i in range(m.rows):
        acc.insert(list(m.row(i)))
    return acc


def rank(m: ExactMatrix) -> int:
    return _rref_of(m).rank


def kernel_basis(m: ExactMatrix) -> list[tuple]:
    """Basis of the right null space {v : m v = 0}, as column tuples.

    Size is cols - rank; free variables are set to 1 in column order.
    """
    acc = _rref_of(m)
    fld = m.field
    pivset = dict((pc, r) for r, pc in enumerate(acc.pivots))
    basis = []
    one, zero = fld.one, fld.zero
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [zero] * m.cols
        v[free] = one
        for pc, r in pivset.items():
            c = acc.rows[r].get(free)
            if c:
                v[pc] = fld.neg(c)
        basis.append(tuple(v))
    return basis


def kernel_matrix(m: ExactMatrix) -> ExactMatrix:
    """Kernel basis packed as the columns of a cols x nullity matrix."""
    basis = kernel_basis(m)
    if not basis:
        return ExactMatrix.zeros(m.cols, 0, m.field)
    return ExactMatrix.from_cols(basis, m.field)


def cokernel(m: ExactMatrix) -> tuple[ExactMatrix, int]:
    """Projection onto coker(m) = target / im(m).

    Returns (projection, dim) with projection of full row rank,
    projection @ m = 0, and dim = rows(m) - rank(m).  On the complement
    of the pivot coordinates of im(m) the projection restricts to the
    identity, hence is invertible on a complement of the image.
    """
    acc = _Rref(m.rows, m.field)
    for j in range(m.cols):
        acc.insert(list(m.col(j)))
    proj, dim, _ = _cokernel_of_image(acc.pivots, acc.rows, m.rows, m.field)
    return proj, dim


def cokernel_from_columns(columns, nrows: int, field: FieldSpec) -> tuple[ExactMatrix, int]:
    """Cokernel of the map whose image is spanned by the given columns.

    Columns are iterables of (row_index, coeff) pairs; the matrix itself
    is never materialized, which matters for the wide balancing maps.
    """
    proj, dim, _ = cokernel_with_support(columns, nrows, field)
    return proj, dim


def cokernel_with_support(columns, nrows: int, field: FieldSpec):
    """Like cokernel_from_columns but also returns the target coordinates
    on which the projection restricts to the identity (the coordinates
    that survive into the quotient basis)."""
    acc = _SparseEchelon(nrows, field)
    for col in columns:
        if acc.rank == nrows:
            break
        acc.insert_sparse(col)
    pivots, rows = acc.reduced()
    return _cokernel_of_image(pivots, rows, nrows, field)


def _cokernel_of_image(pivots, rows, nrows: int, fld: FieldSpec):
    pivs = set(pivots)
    free = [i for i in range(nrows) if i not in pivs]
    dim = len(free)
    one, zero = fld.one, fld.zero
    # The projection sends v to its reduction modulo the image, read off on
    # the free coordinates; it is the identity there and kills the image.
    proj = [[zero] * nrows for _ in range(dim)]
    freepos = {t: r for r, t in enumerate(free)}
    for r, t in enumerate(free):
        proj[r][t] = one
    for rr, pc in enumerate(pivots):
        for j, val in rows[rr].items():
            r = freepos.get(j)
            if r is not None and val:
                proj[r][pc] = fld.neg(val)
    if dim:
        return ExactMatrix.from_rows(proj, fld), dim, free
    return ExactMatrix.zeros(0, nrows, fld), dim, free


def solve_affine(m: ExactMatrix, b: Sequence):
    """Some x with m x = b, or None if the system is inconsistent."""
    if len(b) != m.rows:
        raise DimensionMismatchError("right-hand side length mismatch")
    fld = m.field
    bb = ExactMatrix(m.rows, 1, [fld.coerce(x) for x in b], fld)
    x = solve_matrix(m, bb)
    return None if x is None else x.col(0)


def solve_matrix(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix | None:
    """Some X with a X = b (multi right-hand side), or None."""
    a._check_field(b)
    if a.rows != b.rows:
        raise DimensionMismatchError("solve shape mismatch")
    aug = a.hstack(b)
    acc = _rref_of(aug)
    for r, pc in enumerate(acc.pivots):
        if pc >= a.cols:
            return None  # pivot in the augmented block: inconsistent
    fld = a.field
    zero = fld.zero
    out = [[zero] * b.cols for _ in range(a.cols)]
    for r, pc in enumerate(acc.pivots):
        row = acc.rows[r]
        for j, val in row.items():
            if j >= a.cols:
                out[pc][j - a.cols] = val
    return ExactMatrix.from_rows(out, fld) if a.cols else ExactMatrix.zeros(0, b.cols, fld)


def factor_through(p: ExactMatrix, m: ExactMatrix) -> ExactMatrix | None:
    """Some Y with Y p = m; None if m does not factor through p."""
    yt = solve_matrix(p.transpose(), m.transpose())
    return None if yt is None else yt.transpose()


def mul_block_kron_right(p: ExactMatrix, h: ExactMatrix, nblocks: int) -> ExactMatrix:
    """p @ (I_nblocks kron h) without materializing the Kronecker factor.

    p has nblocks column blocks of width h.rows; each block is multiplied
    by h independently.  Needed where the Kronecker factor would be huge
    and almost entirely structural zeros.
    """
    if p.cols != nblocks * h.rows:
        raise DimensionMismatchError("block structure mismatch")
    p._check_field(h)
    fld = p.field
    hr, hc = h.rows, h.cols
    out = [fld.zero] * (p.rows * nblocks * hc)
    pd, hd = p.data, h.data
    for r in range(p.rows):
        bi = r * p.cols
        bo = r * (nblocks * hc)
        for w in range(nblocks):
            base_in = bi + w * hr
            base_out = bo + w * hc
            for cp in range(hr):
                v = pd[base_in + cp]
                if v:
                    hrow = cp * hc
                    for c in range(hc):
                        hv = hd[hrow + c]
                        if hv:
                            out[base_out + c] += v * hv
    if fld.kind == "prime":
        pp = fld.p
        out = [x % pp for x in out]
    return ExactMatrix._raw(p.rows, nblocks * hc, out, fld)


def mul_block_kron_left(p: ExactMatrix, a: ExactMatrix, block: int) -> ExactMatrix:
    """p @ (a kron I_block) without materializing the Kronecker factor.

    p has a.rows column blocks of width block: the result's block w' sums
    p's block w weighted by a[w, w'].
    """
    if p.cols != a.rows * block:
        raise DimensionMismatchError("block structure mismatch")
    p._check_field(a)
    fld = p.field
    out = [fld.zero] * (p.rows * a.cols * block)
    pd, ad = p.data, a.data
    for r in range(p.rows):
        bi = r * p.cols
        bo = r * (a.cols * block)
        for w in range(a.rows):
            arow = w * a.cols
            base_in = bi + w * block
            for wp in range(a.cols):
                av = ad[arow + wp]
                if av:
                    base_out = bo + wp * block
                    for c in range(block):
                        v = pd[base_in + c]
                        if v:
                            out[base_out + c] += v * av
    if fld.kind == "prime":
        pp = fld.p
        out = [x % pp for x in out]
    return ExactMatrix._raw(p.rows, a.cols * block, out, fld)


def coords_in_span(basis: Sequence[ExactMatrix], target: ExactMatrix):
    """Coordinates of target in the span of basis matrices, or None.

    All matrices must share shape and field; compares flattened vectors.
    """
    if not basis:
        return None if not target.is_zero() else tuple()
    fld = target.field
    a = ExactMatrix.from_cols([b.data for b in basis], fld)
    x = solve_affine(a, list(target.data))
    return x
