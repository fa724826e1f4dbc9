"""Prime reciprocal digit statistics: d-sequences, bit censuses and zeta truncations."""
from .bitcensus import BitCensusRow, bit_census_table, constant_bit_census, ones_fraction_series, variable_bit_census
from .dseq import DigitRule, ReciprocalProfile, digit_at, expand, expand_fraction, profile
from .errors import BudgetExceeded, CapacityError, DomainError, TerminatingExpansionError
from .modarith import Factorization, factorize, is_max_length, mul_mod, multiplicative_order, pow_mod
from .primes import PrimeRange, is_prime, primes_in_range, sieve_upto
from .recipcensus import DigitTotals, NonMaxRun, RangeCensus, RunCriterion, digit_totals, find_nonmax_runs, imbalance_census
from .zeta import (
    MobiusTable,
    ZetaPartial,
    euler_product_inverse,
    log_euler_partial,
    mobius,
    mobius_partial_sum,
    mobius_sieve,
    zeta_partial_sum,
)

__version__ = "0.1.0"
