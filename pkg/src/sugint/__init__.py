"""Non-additive integration over monotone measures with verified two-sided bounds.

The package evaluates threshold-supremum integrals (min-form, product-form,
conjunction-based, semicopula-based, and sign-symmetric variants), computes
closed-form lower/upper bounds of the integral of a transformed function in
terms of the integral of the function itself, checks every bound's
hypotheses, and stress-tests the whole catalog with an oracle-backed fuzzer.
"""

from .binops import MIN, OVEE, PLUS, PRODUCT, OpSpec, UnitOpSpec, builtin, check_flags, unit_op
from .bounds import BoundReport, Hypothesis, bound_ids, check_bound
from .errors import HypothesisError, InputError, NotEnumerableError, SearchError, SugintError
from .extreal import INF, ExtReal
from .instances import BoundContext, DiscreteInstance, IntervalInstance
from .integrals import (
    IntegralResult,
    generalized_integral,
    integrate_profile,
    q_integral,
    seminormed,
    shilkret,
    sugeno,
)
from .measures import (
    FiniteSpace,
    IntervalMeasure,
    MonotoneMeasure,
    SurvivalProfile,
    is_subadditive,
    is_superadditive,
    is_weakly_subadditive,
    is_weakly_superadditive,
    survival,
)
from .symmetric import (
    asymmetric_integral,
    mixed_monotone_bounds,
    split_parts,
    split_transform,
    symmetric_integral,
    upper_bound_001,
)
from .transforms import Expr, PiecewiseMap, SupportLine, affine_map, identity_map, power_map, quad_map
from .verify import (
    FuzzConfig,
    attainability_witness,
    fuzz,
    oracle_integral,
    random_instance,
    random_measure,
)

__version__ = "0.1.0"
