from ar_window.modcat.algebra import (
    AlgebraPresentation,
    Arrow,
    PathAlgebra,
    QPath,
    Relation,
    check_presentation,
)
from ar_window.modcat.annihilator import IdealInAlgebra, annihilator, is_faithful
from ar_window.modcat.decomposition import (
    are_isomorphic,
    decompose,
    indecomposable_summands,
    is_indecomposable,
)
from ar_window.modcat.duality import (
    ProjectivePresentation,
    ar_inverse,
    ar_translate,
    dual,
    dual_morphism,
    minimal_projective_presentation,
    transpose,
)
from ar_window.modcat.homs import HomSpace, Morphism, end, endomorphism_radical, hom
from ar_window.modcat.representation import (
    Representation,
    composition_factor_vector,
    direct_sum,
    injective,
    is_sincere,
    projective,
    regular_module,
    simple,
    standard_modules,
)
from ar_window.modcat.submodules import (
    cokernel,
    image,
    kernel,
    quotient,
    radical_of_module,
    socle,
    submodule,
    top,
)
from ar_window.modcat.textio import (
    dumps_algebra,
    dumps_module,
    loads_algebra,
    loads_module,
    read_algebra,
    read_module,
)

__all__ = [
    "AlgebraPresentation",
    "Arrow",
    "PathAlgebra",
    "QPath",
    "Relation",
    "check_presentation",
    "IdealInAlgebra",
    "annihilator",
    "is_faithful",
    "are_isomorphic",
    "decompose",
    "indecomposable_summands",
    "is_indecomposable",
    "ProjectivePresentation",
    "ar_inverse",
    "ar_translate",
    "dual",
    "dual_morphism",
    "minimal_projective_presentation",
    "transpose",
    "HomSpace",
    "Morphism",
    "end",
    "endomorphism_radical",
    "hom",
    "Representation",
    "composition_factor_vector",
    "direct_sum",
    "injective",
    "is_sincere",
    "projective",
    "regular_module",
    "simple",
    "standard_modules",
    "cokernel",
    "image",
    "kernel",
    "quotient",
    "radical_of_module",
    "socle",
    "submodule",
    "top",
    "dumps_algebra",
    "dumps_module",
    "loads_algebra",
    "loads_module",
    "read_algebra",
    "read_module",
]
