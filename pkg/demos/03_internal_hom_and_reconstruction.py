"""Module categories over graded vector spaces: internal homs computed
grade by grade, the internal endomorphism algebra of a module object,
and reconstruction of the module category from a projective generator.
"""

from boxcat.exactla import QQ
from boxcat.groups import cyclic_group
from boxcat.gradedcat import (
    free_right_module,
    graded_group_algebra,
    graded_object_from_dims,
    regular_right_module,
)
from boxcat.modcat import (
    end_comparison_to_algebra,
    generator_check,
    internal_end,
    internal_hom,
    reconstruction_counit_check,
    reconstruction_unit_check,
)

Z2 = cyclic_group(2)
B = graded_group_algebra(Z2, QQ)
reg = regular_right_module(B)

print("== the internal end of the regular module ==")
ih = internal_hom(reg, reg)
print(f"component dimensions per grade: {ih.component_dims()}")
print("(one dimension per group element: the group algebra itself)")

endalg, ih = internal_end(reg)
cmp = end_comparison_to_algebra(reg, endalg, ih)
print(f"after normalizing along evaluation-at-the-unit, its structure")
print(f"constants equal the group algebra's exactly: {cmp.ok}")

print()
print("== free modules are generators ==")
p = free_right_module(B, graded_object_from_dims(Z2, (1, 1)))
xs = [reg, p, free_right_module(B, graded_object_from_dims(Z2, (0, 2)))]
rep = generator_check(p, xs)
print(f"evaluation maps onto every test object are surjective: {rep.ok}")

print()
print("== reconstruction: unit and counit are isomorphisms ==")
endp, ihp = internal_end(p)
from boxcat.gradedcat import regular_right_module as rrm

unit_rep = reconstruction_unit_check(p, rrm(endp), ihp)
print(f"unit check (rank {unit_rep.details['unit_rank']} of "
      f"{unit_rep.details['source_dim']}): {unit_rep.ok}")
counit_rep = reconstruction_counit_check(p, reg, endp, ihp)
print(f"counit check (rank {counit_rep.details['counit_rank']} of "
      f"{counit_rep.details['target_dim']}): {counit_rep.ok}")
