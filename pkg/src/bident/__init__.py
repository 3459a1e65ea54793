"""Arithmetical structures on bident graphs, counted and enumerated exactly."""

from .core import (
    BidentShape,
    ExactMatrix,
    LinearSystemViolated,
    NonIntegralD,
    NonPositiveEntry,
    NotPrimitive,
    Structure,
    StructureError,
    d_from_r,
    laplacian_variant,
    rank,
    validate,
)
from .critical import (
    CriticalGroupRecord,
    N_of,
    critical_group,
    group_order,
    lorenzini_order,
    max_even_order,
    max_order,
    min_vertices,
    order_distribution,
    order_witness,
    smith_normal_form,
)
from .euclid import F, F_fast, F_from_quotients, chain, continuant, quotients
from .smooth import (
    count_smooth,
    enumerate_smooth,
    n_of_pair,
    smooth_from_pair,
    smooth_from_triple,
)
from .transform import (
    SubdivisionSequence,
    apply_sequence,
    ballot,
    canonicalize_sequence,
    catalan,
    count_total,
    smooth_ancestor,
    smooth_at,
    subdivide_at,
)

__version__ = "0.1.0"
