"""Graded vector spaces over a finite group: tensor products, strict
associativity, and rigid duals with exact zigzag witnesses.
"""

from boxcat.exactla import QQ
from boxcat.groups import symmetric_group
from boxcat.gradedcat import (
    dual_object_with_zigzag,
    graded_object_from_dims,
    line_object,
    tensor_objects,
    unit_object,
)

S3 = symmetric_group(3)

print("== objects are dimension vectors over the group ==")
u = graded_object_from_dims(S3, (1, 0, 2, 0, 0, 1))
v = graded_object_from_dims(S3, (0, 1, 0, 1, 0, 0))
print(f"u has dims {u.dims()}, v has dims {v.dims()}")
print(f"u (x) v has dims {tensor_objects(u, v).dims()}  (grade convolution)")

print()
print("== one-dimensional objects multiply like group elements ==")
k2, k3 = line_object(S3, 2), line_object(S3, 3)
print(f"k_2 (x) k_3 sits in grade {tensor_objects(k2, k3).grades[0]}"
      f" = 2 * 3 in the group")

print()
print("== strict associativity: iterated tensors agree on the nose ==")
left = tensor_objects(tensor_objects(u, v), k2)
right = tensor_objects(u, tensor_objects(v, k2))
print(f"(u v) k == u (v k): {left == right}")

print()
print("== duals invert grades; zigzags close exactly ==")
dd = dual_object_with_zigzag(u, QQ)
print(f"dual dims: {dd.dual.dims()}")
print(f"zigzag composites equal identity matrices: {dd.report.ok}")
print(f"double dual is u again: {dual_object_with_zigzag(dd.dual, QQ).dual == u}")
print(f"the unit object is self-dual: "
      f"{dual_object_with_zigzag(unit_object(S3), QQ).dual == unit_object(S3)}")
