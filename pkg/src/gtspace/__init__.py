"""Finite strong generalized topological spaces and mappings between them."""

from .core import (
    GtSpace,
    closure,
    derived_set,
    interior,
    is_closed,
    is_open,
    is_topology,
    neighborhood_core,
    opens_at,
    space_from_doc,
    space_to_doc,
    validate_gt,
)
from .enumeration import (
    CanonicalForm,
    EnumBounds,
    canonicalize,
    canonicalize_pair,
    enumerate_strong_gts,
    enumerate_surjections,
    random_instance,
)
from .errors import GtError
from .mapping import (
    ClassificationVector,
    GtMapping,
    classify,
    classify_full,
    image,
    is_g_closed,
    is_g_continuous,
    is_g_open,
    is_g_pseudo_open,
    is_g_quotient,
    is_hereditarily,
    make_mapping,
    mapping_from_doc,
    mapping_to_doc,
    preimage,
    quotient_gt,
    restrict,
)
from .subspace import (
    SubspaceEmbedding,
    closed_trace_witness,
    induce_subspace,
    relative_closure,
    relative_interior,
)
from .verify import (
    Exhausted,
    VerifyReport,
    Witness,
    check_witness,
    confirm_minimal,
    mine_counterexample,
    mine_preset,
    run_suite,
)

__version__ = "0.1.0"
