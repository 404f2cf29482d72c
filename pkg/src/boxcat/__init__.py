"""boxcat: balanced tensor products of module categories, computed exactly.

For a finite group K and graded algebra objects A, B in the category of
K-graded vector spaces, the package realizes the product of their module
categories as the category of graded A-B-bimodules, and verifies the
structural identities (internal homs, duals, balancing coherence, Morita
reconstruction, simple counts) with exact linear algebra over Q or F_p.
"""

from .exactla import ExactMatrix, FieldSpec, GF, QQ
from .groups import FiniteGroup, cyclic_group, symmetric_group
from .algebra import FinAlgebra, AlgModule, AlgBimodule

__all__ = [
    "ExactMatrix",
    "FieldSpec",
    "GF",
    "QQ",
    "FiniteGroup",
    "cyclic_group",
    "symmetric_group",
    "FinAlgebra",
    "AlgModule",
    "AlgBimodule",
]

__version__ = "0.1.0"
