import random
from fractions import Fraction

import pytest

from boxcat.exactla import (
    DimensionMismatchError,
    ExactMatrix,
    FieldSpec,
    GF,
    QQ,
    cokernel,
    factor_through,
    kernel_basis,
    rank,
    solve_affine,
    solve_matrix,
)


def random_matrix(rng, rows, cols, field, lo=-3, hi=3):
    return ExactMatrix(rows, cols, [rng.randint(lo, hi) for _ in range(rows * cols)], field)


def test_field_spec_validation():
    assert QQ.kind == "rational"
    assert GF(7).p == 7
    with pytest.raises(ValueError):
        FieldSpec("prime", 6)
    with pytest.raises(ValueError):
        FieldSpec("real")


def test_scalar_canonical_forms():
    assert QQ.coerce(Fraction(2, 4)) == Fraction(1, 2)
    assert GF(7).coerce(-1) == 6
    assert GF(7).coerce(Fraction(1, 2)) == 4  # 2 * 4 = 8 = 1 mod 7
    assert GF(5).invert(3) == 2


def test_kernel_of_identity_is_empty():
    assert kernel_basis(ExactMatrix.identity(2, QQ)) == []


def test_kernel_of_row_vector():
    m = ExactMatrix(1, 2, [1, 1], QQ)
    (v,) = kernel_basis(m)
    assert m.apply(v) == (Fraction(0),)
    # spans the same line as (1, -1)
    assert v[0] * Fraction(-1) == v[1]


def test_rank_nullity_on_random_matrices():
    rng = random.Random(7)
    for field in (QQ, GF(5)):
        for _ in range(20):
            m = random_matrix(rng, 5, 8, field)
            ker = kernel_basis(m)
            assert rank(m) + len(ker) == m.cols
            for v in ker:
                assert all(x == field.zero for x in m.apply(v))


def test_kernel_size_against_independent_row_reduction():
    # independent oracle: crude elimination over Fractions, no pivots kept
    def crude_rank(rows):
        rows = [list(map(Fraction, r)) for r in rows]
        rk = 0
        ncols = len(rows[0])
        used = [False] * len(rows)
        for c in range(ncols):
            piv = next((i for i in range(len(rows))
                        if not used[i] and rows[i][c] != 0), None)
            if piv is None:
                continue
            used[piv] = True
            rk += 1
            for i in range(len(rows)):
                if i != piv and rows[i][c] != 0:
                    f = rows[i][c] / rows[piv][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[piv])]
        return rk

    rng = random.Random(11)
    for _ in range(10):
        m = random_matrix(rng, 5, 8, QQ)
        r = crude_rank(m.to_lists())
        assert rank(m) == r
        assert len(kernel_basis(m)) == 8 - r


def test_cokernel_zero_map():
    proj, dim = cokernel(ExactMatrix.zeros(3, 2, QQ))
    assert dim == 3
    assert proj == ExactMatrix.identity(3, QQ)


def test_cokernel_identity():
    proj, dim = cokernel(ExactMatrix.identity(4, QQ))
    assert dim == 0
    assert proj.rows == 0 and proj.cols == 4


def test_cokernel_rank_two_map():
    # rank-2 map from k^4 to k^3
    m = ExactMatrix.from_rows(
        [[1, 0, 1, 2], [0, 1, 1, 3], [1, 1, 2, 5]], QQ
    )
    assert rank(m) == 2
    proj, dim = cokernel(m)
    assert dim == 1
    assert (proj @ m).is_zero()
    assert rank(proj) == dim


def test_cokernel_projection_properties_random():
    rng = random.Random(3)
    for field in (QQ, GF(7)):
        for _ in range(15):
            m = random_matrix(rng, 6, 4, field)
            proj, dim = cokernel(m)
            assert dim == 6 - rank(m)
            assert (proj @ m).is_zero()
            assert rank(proj) == dim


def test_solve_affine_identity():
    m = ExactMatrix.identity(3, QQ)
    assert solve_affine(m, [1, 2, 3]) == (1, 2, 3)


def test_solve_affine_underdetermined():
    m = ExactMatrix(1, 2, [1, 1], QQ)
    x = solve_affine(m, [0])
    assert m.apply(x) == (0,)


def test_solve_affine_inconsistent():
    m = ExactMatrix(1, 1, [0], QQ)
    assert solve_affine(m, [1]) is None


def test_solve_affine_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        solve_affine(ExactMatrix.identity(2, QQ), [1, 2, 3])


def test_solve_matrix_multi_rhs():
    rng = random.Random(5)
    a = random_matrix(rng, 4, 4, QQ)
    while rank(a) < 4:
        a = random_matrix(rng, 4, 4, QQ)
    b = random_matrix(rng, 4, 2, QQ)
    x = solve_matrix(a, b)
    assert a @ x == b


def test_factor_through():
    rng = random.Random(9)
    p = random_matrix(rng, 2, 5, QQ)
    while rank(p) < 2:
        p = random_matrix(rng, 2, 5, QQ)
    y0 = random_matrix(rng, 3, 2, QQ)
    m = y0 @ p
    y = factor_through(p, m)
    assert y @ p == m


def test_prime_field_agrees_with_rationals_mod_p():
    # with tiny integer entries and a large prime, no denominator ever
    # hits the modulus, so ranks agree
    rng = random.Random(13)
    p = 1000003
    for _ in range(10):
        entries = [rng.randint(-3, 3) for _ in range(4 * 6)]
        mq = ExactMatrix(4, 6, entries, QQ)
        mp = ExactMatrix(4, 6, entries, GF(p))
        assert rank(mq) == rank(mp)
        assert len(kernel_basis(mq)) == len(kernel_basis(mp))


def test_matmul_kron_transpose():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]], QQ)
    b = ExactMatrix.from_rows([[0, 1], [1, 0]], QQ)
    assert (a @ b).to_lists() == [[2, 1], [4, 3]]
    assert a.transpose().to_lists() == [[1, 3], [2, 4]]
    k = a.kron(b)
    assert k.rows == 4 and k.cols == 4
    # (a kron b)[(i,j),(k,l)] = a[i,k] b[j,l] with lexicographic pairs
    for i in range(2):
        for j in range(2):
            for kk in range(2):
                for l in range(2):
                    assert k[i * 2 + j, kk * 2 + l] == a[i, kk] * b[j, l]


def test_matrix_immutable_and_hashable():
    m = ExactMatrix.identity(2, QQ)
    with pytest.raises(AttributeError):
        m.rows = 3
    assert hash(m) == hash(ExactMatrix.identity(2, QQ))
    assert m == ExactMatrix.identity(2, QQ)


def test_zero_sized_matrices():
    z = ExactMatrix.zeros(0, 3, QQ)
    assert kernel_basis(z) and len(kernel_basis(z)) == 3
    proj, dim = cokernel(ExactMatrix.zeros(3, 0, QQ))
    assert dim == 3
    assert rank(z) == 0
