"""Differential uniformity of polynomials over F_{2^n}.

Field and polynomial arithmetic, the decomposition D_alpha f = g(x(x+alpha)),
Morse certification of g, membership in the exponent set M, DDT-based
differential uniformity, explicit bounds, and seeded experiments.
"""

from .bounds import BoundReport, cond_a_bound, cond_b_bound, min_n_guarantee, morse_alpha_bound
from .diffop import (
    LAlphaResult,
    b_ratio,
    compose_talpha,
    d_alpha,
    l_alpha,
    solve_triangular,
    trace_criterion,
)
from .errors import *  # noqa: F401,F403
from .field import (
    FieldCtx,
    element_of_order,
    fq_inv,
    fq_mul,
    fq_trace,
    mk_field,
    solve_artin_schreier,
)
from .harness import ExperimentConfig, ExperimentRecord, run_experiment, verify_paper_tables
from .morse import MorseReport, count_non_morse_alphas, is_morse
from .mset import MVerdict, condition_xm, gen_families, in_M, l_prime_ok, scan_l_primes, scan_M
from .poly import (
    FqPoly,
    derivative,
    hasse2,
    radical,
    resultant,
    roots_in_field,
    taylor_shift,
)
from .uniformity import DeltaResult, achieving_fraction, ddt_row, delta, splits_simply

__version__ = "0.1.0"
