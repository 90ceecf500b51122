"""Exact arithmetic on the forest of positive linear fractional transformations."""

from .cf import (
    PlftContinuedFraction,
    RootReport,
    ancestors_of_rational,
    cf_of_rational,
    cf_variants,
    decompose_special,
    evaluate_cf,
    evaluate_plft_cf,
    is_descendant_rational,
    limit_checks,
    lr_on_cf,
    orphan_root_cf,
    plft_cf_expand,
    rootz_check,
)
from .census import (
    CensusRow,
    SeriesPoint,
    harmonic_double_sum,
    harmonic_double_sum_reference,
    census_row,
    census_rows,
    divisor_sigma,
    divisor_tau,
    enumerate_orphans,
    h_closed,
    h_direct,
    nu2,
    ratio_series,
    summatory_h,
)
from .complex_forest import (
    ChainStep,
    GaussianRational,
    OrphanParams,
    ancestor_chain,
    apply_complex_move,
    complex_parent,
    epsilon_u,
    in_d0,
    is_complex_orphan,
    replay_chain,
)
from .errors import InternalInvariantError
from .plft import IDENTITY, LEFT, RIGHT, Plft, Word, apply_word, format_word, parse_word, root_by_iteration

__all__ = [
    "CensusRow",
    "ChainStep",
    "GaussianRational",
    "IDENTITY",
    "InternalInvariantError",
    "LEFT",
    "OrphanParams",
    "Plft",
    "PlftContinuedFraction",
    "RIGHT",
    "RootReport",
    "SeriesPoint",
    "Word",
    "ancestor_chain",
    "ancestors_of_rational",
    "apply_complex_move",
    "apply_word",
    "harmonic_double_sum",
    "harmonic_double_sum_reference",
    "census_row",
    "census_rows",
    "cf_of_rational",
    "cf_variants",
    "complex_parent",
    "decompose_special",
    "divisor_sigma",
    "divisor_tau",
    "enumerate_orphans",
    "epsilon_u",
    "evaluate_cf",
    "evaluate_plft_cf",
    "format_word",
    "h_closed",
    "h_direct",
    "in_d0",
    "is_complex_orphan",
    "is_descendant_rational",
    "limit_checks",
    "lr_on_cf",
    "nu2",
    "orphan_root_cf",
    "parse_word",
    "plft_cf_expand",
    "ratio_series",
    "replay_chain",
    "root_by_iteration",
    "rootz_check",
    "summatory_h",
]
