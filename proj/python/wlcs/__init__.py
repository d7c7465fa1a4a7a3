"""Exact weighted-LCS toolkit: solvers, approximation schemes, threshold
unification, and hardness-reduction instance generators, all in exact
rational arithmetic."""

from ._core import (
    Alphabet,
    ApproxResult,
    EmbedResult,
    Graph,
    Instance,
    ParseError,
    PtasResult,
    Rational,
    ResourceLimitError,
    Sat13Formula,
    SolveResult,
    SubsetProductInstance,
    UnifiedInstance,
    ValidationError,
    VerifyResult,
    WeightedSequence,
    Witness,
    WitnessShapeError,
    appendix_counterexample,
    brute_force_opt,
    dfs_oracle,
    embed_dp,
    embedding_probability,
    eptas,
    forward_map_witness,
    ksubset_to_wlcs,
    map_witness_back,
    mul_many,
    pareto_opt,
    parse_instance,
    parse_witness,
    perfect_code_exists,
    perfect_code_to_ksubset,
    planted_answer,
    ptas_core,
    quantize_cost,
    sat13_exists,
    sat13_to_ksubset,
    serialize_instance,
    serialize_witness,
    sieve_primes,
    solve,
    structurally_equal,
    subs_membership,
    subset_product_exists,
    subset_product_to_wlcs,
    unify,
    unify_thresholds,
    validate,
    verify_witness,
)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
