"""Partition combinatorics, symmetric group and GL representations, Schur functor calculus."""
from ._backend import BACKEND
from .cache import clear_caches, set_cache_size
from .characters import (
    CharacterTable,
    ClassPartition,
    character_table,
    dim_gl,
    dim_sym,
    dim_sym_det,
    dim_sym_hook,
    kronecker,
    mn_character,
    z,
)
from .errors import IntegrityError, ResourceLimitError, SchurKitError, ValidationError
from .lr import (
    LRQuery,
    lr_coefficient,
    lr_tableaux,
    pieri,
    reading_word,
    remove_box,
    restrict_branch,
    stretched_coefficient,
    tensor_expand,
)
from .partitions import (
    Cell,
    FrobeniusCoords,
    Partition,
    SkewShape,
    add_strips,
    contents,
    frobenius,
    from_frobenius,
    hook_lengths,
    is_horizontal_strip,
    is_vertical_strip,
    parse_partition,
    partitions,
    remove_strips,
    transpose,
)
from .resolutions import (
    DegreeSequence,
    GradedComplex,
    PureResolutionPlan,
    efw_plan,
    exactness_report,
    koszul_complex,
    plan_betti_table,
    plan_from_degree_sequence,
    validate_plan,
)
from .tca import (
    FreeModuleSpec,
    PolynomialTcaSpec,
    free_module_hilbert,
    hypermatching_count,
    koszul_generators,
    tca_decompose,
)
from .vcat import (
    BiVObject,
    VirtualVObject,
    VObject,
    coaddition,
    compose,
    compose_transpose,
    comultiplication,
    dual,
    ell,
    enhanced_hilbert,
    evaluate_at_rank,
    higher_derivative,
    hilbert_series,
    matchings,
    pointwise_tensor,
    regular,
    schur_derivative,
    simple,
    tensor,
    transpose_object,
    truncate_rows,
)

__version__ = "0.1.0"
