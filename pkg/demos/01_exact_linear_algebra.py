"""Tour of the exact linear algebra substrate.

Everything in this package reduces to kernels, cokernels and solves over
the rationals or a prime field, with no floating point anywhere.
"""

from fractions import Fraction

from boxcat.exactla import ExactMatrix, GF, QQ, cokernel, kernel_basis, rank, solve_affine


def show(rows):
    return [[str(x) for x in row] for row in rows]


print("== exact kernels ==")
m = ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6]], QQ)
print(f"matrix {show(m.to_lists())} has rank {rank(m)}")
for v in kernel_basis(m):
    print(f"  kernel vector {[str(x) for x in v]} maps to zero: "
          f"{all(x == 0 for x in m.apply(v))}")

print()
print("== cokernels are quotient projections ==")
m = ExactMatrix.from_rows([[1, 0], [0, 1], [1, 1]], QQ)
proj, dim = cokernel(m)
print(f"coker of a rank-2 map into k^3 has dimension {dim}")
print(f"projection rows: {show(proj.to_lists())}")
print(f"projection kills the image: {(proj @ m).is_zero()}")

print()
print("== solving exactly, also mod p ==")
a = ExactMatrix.from_rows([[2, 1], [1, 1]], QQ)
print(f"2x + y = 1, x + y = 3  ->  {[str(x) for x in solve_affine(a, [1, 3])]}")
a7 = ExactMatrix.from_rows([[2, 1], [1, 1]], GF(7))
print(f"same system mod 7     ->  {solve_affine(a7, [1, 3])}")

print()
print("== rationals stay in lowest terms ==")
h = ExactMatrix.from_rows(
    [[Fraction(1, i + j + 1) for j in range(4)] for i in range(4)], QQ
)
print(f"4x4 Hilbert matrix has rank {rank(h)} (exactly, no epsilons)")
