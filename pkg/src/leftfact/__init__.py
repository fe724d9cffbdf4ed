"""Left factorial arithmetic.

K(n) = !n = 0! + 1! + ... + (n-1)!, its summation identities, the prime
divisibility question gcd(!p, p!) = 2, the analytic extension K(z) with its
poles and closed form, and a family of prime-square sequence problems.
Exact integer work never round-trips through floats; float work always
carries an error estimate.
"""

from .analytic import (
    BridgeReport,
    PoleError,
    PoleInfo,
    QuadratureConfig,
    QuadratureError,
    QuadratureResult,
    asymptotic_ratio,
    congruence_bridge,
    euler_constant,
    gamma,
    k_continued,
    k_integral,
    k_integral_detailed,
    k_slavic,
    pole_residue,
    slavic_constant_block,
)
from .exact import (
    IDENTITY_IDS,
    StirlingTable,
    alternating_divisor_hits,
    alternating_factorial,
    evaluate_identity,
    gcd_pair,
    iter_left_factorials,
    left_factorial,
    partial_sum_gcd,
    pole_residue_fraction,
    stirling_table,
    weighted_sum,
)
from .factorint import DEFAULT_EFFORT, Factorization, factorize, is_probable_prime
from .harness import (
    Checkpoint,
    CheckpointCorrupt,
    CheckpointError,
    CheckpointMismatch,
    FileSink,
    LedgerWriter,
    canonical_lines,
    ensure_compatible,
    load_checkpoint,
    write_checkpoint,
)
from .modular import (
    MAX_MODULUS,
    VARIANTS,
    CostModel,
    ResidueResult,
    VerificationRecord,
    cost_model,
    derangement_number,
    floor_factorial_over_e,
    kh_equivalent_residue,
    residue_backward_s,
    residue_direct,
    residue_forward_t,
    residue_forward_v,
    residue_mod_p_squared,
)
from .primes import (
    GoodPrimeResult,
    PrimeSieve,
    SignStatistics,
    TripletReport,
    build_sieve,
    count_pair_progressions,
    good_prime_check,
    p_set,
    pi_sequence,
    s_sequence,
    sign_statistics,
    sum_inequality_scan,
)
from .sweeps import (
    CHUNK_PRIMES,
    MAX_SWEEP_PRIME,
    MemorySink,
    a_set_scan,
    batch_residues,
    h4_witness_search,
    kh2_scan,
    kh_sweep,
    residue_summatory,
)

__version__ = "1.0.0"

__all__ = [
    "BridgeReport",
    "PoleError",
    "PoleInfo",
    "QuadratureConfig",
    "QuadratureError",
    "QuadratureResult",
    "asymptotic_ratio",
    "congruence_bridge",
    "euler_constant",
    "gamma",
    "k_continued",
    "k_integral",
    "k_integral_detailed",
    "k_slavic",
    "pole_residue",
    "slavic_constant_block",
    "IDENTITY_IDS",
    "StirlingTable",
    "alternating_divisor_hits",
    "alternating_factorial",
    "evaluate_identity",
    "gcd_pair",
    "iter_left_factorials",
    "left_factorial",
    "partial_sum_gcd",
    "pole_residue_fraction",
    "stirling_table",
    "weighted_sum",
    "DEFAULT_EFFORT",
    "Factorization",
    "factorize",
    "is_probable_prime",
    "Checkpoint",
    "CheckpointCorrupt",
    "CheckpointError",
    "CheckpointMismatch",
    "FileSink",
    "LedgerWriter",
    "canonical_lines",
    "ensure_compatible",
    "load_checkpoint",
    "write_checkpoint",
    "MAX_MODULUS",
    "VARIANTS",
    "CostModel",
    "ResidueResult",
    "VerificationRecord",
    "cost_model",
    "derangement_number",
    "floor_factorial_over_e",
    "kh_equivalent_residue",
    "residue_backward_s",
    "residue_direct",
    "residue_forward_t",
    "residue_forward_v",
    "residue_mod_p_squared",
    "GoodPrimeResult",
    "PrimeSieve",
    "SignStatistics",
    "TripletReport",
    "build_sieve",
    "count_pair_progressions",
    "good_prime_check",
    "p_set",
    "pi_sequence",
    "s_sequence",
    "sign_statistics",
    "sum_inequality_scan",
    "CHUNK_PRIMES",
    "MAX_SWEEP_PRIME",
    "MemorySink",
    "a_set_scan",
    "batch_residues",
    "h4_witness_search",
    "kh2_scan",
    "kh_sweep",
    "residue_summatory",
]
