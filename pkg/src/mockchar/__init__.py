"""Kronecker symbols, automatic sequences, and mock character classification.

A mock character of mockulus q is a completely multiplicative function that
is q-automatic but not eventually periodic and vanishes exactly at 0 and at
the integers sharing a factor with a fixed d.  The canonical examples are
the Kronecker symbols (a|.) with a = 3 mod 4, the paperfolding sequence
(-1|.) among them; for every other a the symbol is an ordinary Dirichlet
character.  This package evaluates the symbols exactly, synthesizes the
digit automata, classifies arbitrary sample-able functions, and verifies
the analytic and power-series identities the family satisfies.
"""

from .analysis import (
    DistanceResult,
    LIdentityResult,
    PAPERFOLDING_PRODUCT_CONSTANT,
    SeriesValue,
    dirichlet_series_partial,
    general_product_residual,
    l_identity_residual,
    nonzero_density,
    paperfolding_product_partial,
    pretentious_distance,
    pretentious_distance_sq,
    triangle_defect,
    unit_complex,
)
from .automata import (
    DFAO,
    KernelOverflow,
    NotDetected,
    Periodic,
    PeriodVerdict,
    PrefixTooShortError,
    QKernel,
    compute_kernel,
    detect_eventual_period,
    dfao_eval,
    kernel_to_dfao,
    to_dot,
)
from .bfile import BFile, load_bfile, load_fixture, parse_bfile, serialize_bfile
from .classify import (
    CharacterVerdict,
    ClassifyParams,
    InconclusiveVerdict,
    InconsistentVerdict,
    MockClassification,
    MockVerdict,
    ZeroDivisor,
    ZeroSupportFailure,
    check_complete_multiplicativity,
    classify,
    kronecker_family_verdict,
    period_pattern,
    zero_support_divisor,
)
from .gf4 import (
    F4Series,
    SymbolEmbedding,
    build_G,
    build_R,
    coefficient_period_witness,
    f4_add,
    f4_mul,
    f4_pow,
    series_pow4,
    verify_functional_equation,
)
from .kronecker import (
    FactoredInteger,
    factor,
    kronecker,
    kronecker_factored,
    legendre_oracle,
    primes_up_to,
    symbol_at_two,
    valuation,
)
from .multiplicative import (
    MINUS_ONE,
    ONE,
    PAPERFOLDING,
    ZERO,
    ArithmeticFunction,
    DirichletCharacter,
    UnitValue,
    build_structured,
    character_from_symbols,
    character_from_table,
    decompose_structured,
    kronecker_character,
    kronecker_function,
    paperfolding,
    pointwise_product,
    reduce_periodic_cm,
)

__version__ = "0.1.0"
