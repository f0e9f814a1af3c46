"""Desk-scale numerics around Landau's function, the logarithmic integral,
Chebyshev sums, zeta-zero constants and superchampion numbers."""

from .primes import (
    PrimeTable,
    SieveRangeError,
    build_prime_table,
    nth_prime,
    prime_count,
    prime_powers_upto,
)
from .logintegral import (
    LiConfig,
    LiDomainError,
    LiConvergenceError,
    SOLDNER_MU,
    li,
    Li,
    li_inverse,
    li_batch,
    li_inverse_batch,
)
from .landau import (
    Factorization,
    LandauTable,
    build_landau_table,
    factorization,
    landau_bruteforce,
    landau_exact,
    prime_bound,
)
from .chebyshev import (
    ChebyshevTables,
    REnvelope,
    R_value,
    build_R_envelope,
    build_chebyshev_tables,
    empirical_R_exponent,
    pi1,
    psi,
    theta,
)
from .zeros import CSum, ZeroTable, ZeroTableError, constant_c, load_zeros, load_zeros_file
from .champions import (
    Champion,
    champion_exponent,
    champion_for_n,
    champion_sequence,
    prime_entry_threshold,
    witness_W,
    x1_of_rho,
)
from .verify import (
    RangeReport,
    VerificationRow,
    VerifyDeps,
    a_n,
    build_deps,
    check_pi_le_li,
    check_theorem1,
    dn_lower_bound,
    run_range,
    threshold_scan,
)

__version__ = "0.1.0"
