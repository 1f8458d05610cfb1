"""Exact Witt-vector calculus of zeta functions over finite fields."""

from .endo import (
    EndoComplex,
    dsum,
    euler_char,
    euler_trace,
    from_witt,
    shift,
    tate_twist,
    tensor,
    trace_of_power,
    zeta,
)
from .exact import (
    Matrix,
    Polynomial,
    PowerSeries,
    char_series,
    kron_char_series,
    kronecker,
    rational_to_series,
    series_exp,
    series_log,
)
from .ffcount import (
    BudgetExceeded,
    NoRationalFit,
    PreconditionError,
    VarietySpec,
    check_functional_equation,
    check_weil_bound,
    count_points,
    counts_tower,
    reconstruct_zeta,
    verify_lefschetz,
)
from .finite_field import FieldElement, FiniteField, gf_make
from .motive import ZetaContext, euler_char_c, eval_zeta, point_counts
from .dsl import parse_motive, to_source
from .witt import GhostSequence, WittVector, from_counts, ghost, w_add, w_mul, w_neg, w_one

__version__ = "0.1.0"
