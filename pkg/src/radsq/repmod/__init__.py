"""Modules over radical-square-zero quiver algebras."""

from .decompose import (
    Decomposition,
    EndAlgebra,
    decompose,
    is_indecomposable,
    is_isomorphic,
    iso_indecomposable,
    sort_key,
)
from .presentation import (
    Cover,
    Presentation,
    cokernel_of,
    free_hom,
    min_proj_presentation,
    projective_cover,
)
from .rep import (
    Morphism,
    Rep,
    change_basis,
    direct_sum,
    dualize,
    dualize_morphism,
    encode,
    free_module,
    hom_basis,
    hom_dim,
    hom_matrix,
    parts,
    quotient,
    submodule,
    validate,
)

__all__ = [
    "Cover",
    "Decomposition",
    "EndAlgebra",
    "Morphism",
    "Presentation",
    "Rep",
    "change_basis",
    "cokernel_of",
    "decompose",
    "direct_sum",
    "dualize",
    "dualize_morphism",
    "encode",
    "free_hom",
    "free_module",
    "hom_basis",
    "hom_dim",
    "hom_matrix",
    "is_indecomposable",
    "is_isomorphic",
    "iso_indecomposable",
    "min_proj_presentation",
    "parts",
    "projective_cover",
    "quotient",
    "sort_key",
    "submodule",
    "validate",
]
