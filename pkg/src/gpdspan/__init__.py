"""Spans of finite groupoids, their 2-cells, and the linear shadows they cast.

Sets of size at most ``maxCard`` stand in for the groupoid of all finite
sets; every result is exact inside a window that shrinks by one for each
creation or annihilation letter involved.
"""

__version__ = "0.1.0"

from .groups import PermutationGroup, symmetric_group, young_subgroup
from .groupoid import (
    Functor,
    NaturalIso,
    SkeletalGroupoid,
    fs_truncated,
    groupoid_cardinality,
    groupoids_equivalent,
    point,
)
from .spans import (
    Span,
    annihilation_span,
    compose_spans,
    creation_span,
    dagger,
    direct_sum,
    identity_span,
    spans_isomorphic,
    tameness_report,
    word_span,
    zero_span,
)
from .twocells import (
    TwoCell,
    converse_two_cell,
    equivalent_two_cells,
    generator_two_cell,
    horizontal_compose,
    identity_two_cell,
    vertical_compose,
    whisker,
)
from .diagrams import TwoCellTerm, eval_one_cell, eval_two_cell, run_relation_catalog, trace_histories
from .young import (
    dimension,
    irreducible_character,
    mn_character,
    partitions_of,
    path_count,
    skew_character,
    specht_generators,
)
from .fock import (
    degroupoidify_span,
    explicit_mu_action,
    khovanov_iso_check,
    module_block,
    number_block,
    path_block,
    stuff_type_gf,
    vacuum_moment,
)
from .sln import e_span, f_span, n_span, poly_operator_matrix, verify_sln_relation

compose = compose_spans

__all__ = [
    "Functor",
    "NaturalIso",
    "PermutationGroup",
    "SkeletalGroupoid",
    "Span",
    "TwoCell",
    "TwoCellTerm",
    "__version__",
    "annihilation_span",
    "compose",
    "compose_spans",
    "converse_two_cell",
    "creation_span",
    "dagger",
    "degroupoidify_span",
    "dimension",
    "direct_sum",
    "e_span",
    "equivalent_two_cells",
    "eval_one_cell",
    "eval_two_cell",
    "explicit_mu_action",
    "f_span",
    "fs_truncated",
    "generator_two_cell",
    "groupoid_cardinality",
    "groupoids_equivalent",
    "horizontal_compose",
    "identity_span",
    "identity_two_cell",
    "irreducible_character",
    "khovanov_iso_check",
    "mn_character",
    "module_block",
    "n_span",
    "number_block",
    "partitions_of",
    "path_block",
    "path_count",
    "point",
    "poly_operator_matrix",
    "run_relation_catalog",
    "skew_character",
    "spans_isomorphic",
    "specht_generators",
    "stuff_type_gf",
    "symmetric_group",
    "tameness_report",
    "trace_histories",
    "vacuum_moment",
    "verify_sln_relation",
    "vertical_compose",
    "whisker",
    "word_span",
    "young_subgroup",
    "zero_span",
]
