"""Approximating reals by sums of two rationals, and the modular-hyperbola,
exponential-sum and character-sum machinery around it."""

from .arith import (
    arithmetic_functions,
    coprime_count,
    fmt_rational,
    mod_inverse,
    primes_in_range,
    split_fraction,
)
from .characters import (
    CharacterTable,
    char_sum_max,
    character_table,
    orthogonality_check,
    solution_count_via_characters,
)
from .duo import (
    DuoApprox,
    brute_best_duo,
    duo_from_reduction,
    prime_grid_approx,
    trivial_duo,
    verify_lower_bound,
)
from .errors import (
    DuoratError,
    NotCoprime,
    PreconditionViolated,
    PrincipalCharacter,
    RangeTooLarge,
    RangeTooSmall,
)
from .harmonic import d_r_profile, et_inequality, s1_bound_thm7, s_sums_thm6
from .hyperbola import (
    Box,
    HyperbolaInstance,
    HyperbolaSolution,
    classify_interval,
    coverage_count,
    lift_and_factor_search,
    smallest_max_solution,
    solutions_in_box,
)
from .single import SingleApprox, best_single, convergents, dirichlet_approx

__version__ = "0.1.0"
