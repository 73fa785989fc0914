"""Explicit witnesses for subword occurrences in base-q expansions of
polynomial values f(n) and exponential values m^n."""

from .exp_witness import construct_exp_witness, strip_p_part
from .explorer import FunctionSpec, ratio_target, scan
from .lifting import DiffData, diff_data_for, hensel_lift_poly, newton_lift
from .padic import BaseFactorization, PadicApprox, crt, factorize, pow_g, vp
from .poly_witness import (
    IntPoly,
    WitnessReport,
    construct_poly_witness,
    zero_block_witness,
)
from .words import (
    Expansion,
    Word,
    concat_power,
    count_in_integer,
    expansion,
    gamma,
    gamma_prime,
    occurrences,
    parse_word,
    split_leading_zeros,
    word_value,
)

__version__ = "0.1.0"
