"""Tight lower bounds for symmetric f-divergences via binary divergences."""

from ._divbound import (
    AlignmentError,
    BinaryDivergence,
    BoundResult,
    ConditionCertificate,
    ConditionError,
    ConstructionError,
    DiscreteDist,
    DomainError,
    FGenerator,
    IneqReport,
    MarkovSystem,
    Moments,
    MomentSpec,
    OracleOptions,
    OracleResult,
    SearchError,
    ThermoReport,
    TwoPointAttainment,
    ValidationError,
    align_supports,
    bhattacharyya_coefficient,
    bhattacharyya_relation,
    binary_entropy,
    binary_pair,
    catalog,
    catalog_generator,
    check_condition,
    concavity_check_G_squared,
    evolve,
    f_divergence,
    hellinger_td_bound,
    inverse_G,
    js_linear_minorant_check,
    js_td_bound,
    lemma3_pair,
    make_binary,
    min_symmetrized_given_moments,
    min_symmetrized_given_td,
    moments,
    sedrakyan_check,
    symmetrized_divergence,
    td_two_point_attainment,
    theorem1_bound,
    theorem2_bound,
    theorem2_s,
    thermo_report,
    tku_bound,
    total_variation,
    triangular_discrimination,
    tv_bound,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
