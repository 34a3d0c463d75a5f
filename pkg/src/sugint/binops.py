"""Binary aggregation operations and their declared structural flags.

An ``OpSpec`` wraps a nondecreasing binary operation on [0, inf]^2 together
with flags the bound evaluators rely on.  Monotonicity, boundary behavior,
subdistributivity, and associativity can be falsified on a sample grid by
``check_flags``; one-sided continuity cannot be decided from samples and is
therefore declared, never inferred (the documented trust boundary).

Operations defined on [0,1]^2 (fuzzy conjunctions, semicopulas) are extended
to [0, inf]^2 by clamping both inputs at 1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import InputError
from .extreal import ExtReal, as_ext, symmetric_max, xadd, xmul

FloatOp = Callable[[float, float], float]

DEFAULT_GRID: Tuple[float, ...] = (0.0, 0.1, 0.5, 1.0, 2.0, math.inf)


@dataclass(frozen=True)
class OpFlags:
    """Declared structure of a binary operation.

    ``left_cont_first``/``right_cont_first`` refer to one-sided continuity of
    x -> x o y for fixed y; ``left_cont_second`` to y -> x o y.
    ``subdistributive_add`` declares (a+b) o c <= (a o c) + (b o c).
    """

    nondecreasing: bool = True
    zero_absorbing: bool = True
    left_cont_first: bool = True
    right_cont_first: bool = True
    left_cont_second: bool = True
    subdistributive_add: bool = False
    associative: bool = False
    idempotent_on: Optional[Tuple[float, ...]] = None


@dataclass(frozen=True)
class OpSpec:
    """A named binary operation on [0, inf]^2 with declared flags.

    ``fn`` operates on raw floats (inf allowed) under the package's
    extended-real conventions.
    """

    name: str
    fn: FloatOp
    flags: OpFlags = field(default_factory=OpFlags)

    def __call__(self, a, b) -> ExtReal:
        return ExtReal(self.fn(as_ext(a), as_ext(b)))


@dataclass(frozen=True)
class MixedOpSpec:
    """A nondecreasing operation taking (nonnegative, nonpositive) -> real."""

    name: str
    fn: FloatOp
    nondecreasing: bool = True

    def __call__(self, a, b) -> ExtReal:
        a, b = as_ext(a), as_ext(b)
        if a < 0 or b > 0:
            raise InputError(f"{self.name} expects (nonnegative, nonpositive) arguments")
        return ExtReal(self.fn(a, b))


def _min(a: float, b: float) -> float:
    return b if b < a else a


MIN = OpSpec(
    "min",
    _min,
    OpFlags(subdistributive_add=True, associative=True, idempotent_on=None),
)

# x -> x*y is continuous on [0, inf) for finite y; at y = inf right-continuity
# fails at 0, which never arises under the p < inf / mu(A) < inf preconditions.
PRODUCT = OpSpec(
    "product",
    xmul,
    OpFlags(subdistributive_add=True, associative=True),
)

PLUS = MixedOpSpec("plus", xadd)
OVEE = MixedOpSpec("ovee", symmetric_max)

# Hand-built nondecreasing op whose first section x -> x o y is only
# right-continuous (jumps at integers); exercises the non-left-continuous path.
CEIL_MIN = OpSpec(
    "ceil_min",
    lambda a, b: _min(math.ceil(a) if math.isfinite(a) else a, b),
    OpFlags(left_cont_first=False),
)


# -- [0,1]^2 operations ----------------------------------------------------------


@dataclass(frozen=True)
class UnitOpSpec:
    """A nondecreasing operation on [0,1]^2 (t-norm, fuzzy conjunction, semicopula)."""

    name: str
    fn: FloatOp
    left_cont_first: bool = True
    left_cont_second: bool = True

    def __call__(self, a, b) -> ExtReal:
        a, b = as_ext(a), as_ext(b)
        if not (0.0 <= a <= 1.0 and 0.0 <= b <= 1.0):
            raise InputError(f"{self.name} is defined on [0,1]^2")
        return ExtReal(self.fn(a, b))

    def is_fuzzy_conjunction(self) -> bool:
        f = self.fn
        return f(1.0, 1.0) == 1.0 and f(0.0, 1.0) == 0.0 and f(1.0, 0.0) == 0.0 and f(0.0, 0.0) == 0.0

    def is_semicopula(self, grid: Sequence[float] = (0.0, 0.25, 0.5, 0.75, 1.0)) -> bool:
        if not self.is_fuzzy_conjunction():
            return False
        return all(self.fn(a, 1.0) == a and self.fn(1.0, a) == a for a in grid)


TNORM_MIN = UnitOpSpec("min", _min)
TNORM_PRODUCT = UnitOpSpec("product", lambda a, b: a * b)
TNORM_LUKASIEWICZ = UnitOpSpec("lukasiewicz", lambda a, b: max(0.0, a + b - 1.0))

_UNIT_OPS: Dict[str, UnitOpSpec] = {
    "min": TNORM_MIN,
    "product": TNORM_PRODUCT,
    "lukasiewicz": TNORM_LUKASIEWICZ,
}


def unit_op(name: str) -> UnitOpSpec:
    try:
        return _UNIT_OPS[name]
    except KeyError:
        raise InputError(f"unknown [0,1]-operation {name!r}; known: {sorted(_UNIT_OPS)}") from None


def fuzzy_conjunction_to_circ(conj: UnitOpSpec) -> OpSpec:
    """Lift a fuzzy conjunction to [0, inf]^2 via a o b = (b ^ 1) conj (a ^ 1).

    The argument swap makes sup_t {t o mu({f>=t})} equal to
    sup_t {mu({f>=t}) conj t}; a o 0 = 0 follows from 0 <= 0 conj a <= 0 conj 1 = 0.
    Left-continuity of x -> x o y is inherited from the conjunction's second
    coordinate.
    """
    if not conj.is_fuzzy_conjunction():
        raise InputError(f"{conj.name} violates the fuzzy-conjunction boundary conditions")
    f = conj.fn
    return OpSpec(
        f"qconj:{conj.name}",
        lambda a, b: f(_min(b, 1.0), _min(a, 1.0)),
        OpFlags(left_cont_first=conj.left_cont_second, right_cont_first=False, left_cont_second=conj.left_cont_first),
    )


def semicopula_to_circ(semi: UnitOpSpec) -> OpSpec:
    """Lift a [0,1]^2 operation to [0, inf]^2 via a o b = S(a ^ 1, b ^ 1).

    Evaluation only needs the fuzzy-conjunction boundary (which makes the
    lift zero-absorbing); the neutral element of a true semicopula is a
    hypothesis of the bound, not of the integral.
    """
    if not semi.is_fuzzy_conjunction():
        raise InputError(f"{semi.name} violates the fuzzy-conjunction boundary conditions")
    f = semi.fn
    return OpSpec(
        f"semicopula:{semi.name}",
        lambda a, b: f(_min(a, 1.0), _min(b, 1.0)),
        OpFlags(left_cont_first=semi.left_cont_first, right_cont_first=False, left_cont_second=semi.left_cont_second),
    )


def builtin(name: str):
    """Resolve an operation name as used on the wire / CLI.

    Plain names: ``min``, ``product``, ``ceil_min``, ``plus``, ``ovee``.
    Prefixed: ``qconj:<tnorm>`` and ``semicopula:<name>``.
    """
    plain = {"min": MIN, "product": PRODUCT, "ceil_min": CEIL_MIN, "plus": PLUS, "ovee": OVEE}
    if name in plain:
        return plain[name]
    if name.startswith("qconj:"):
        return fuzzy_conjunction_to_circ(unit_op(name.split(":", 1)[1]))
    if name.startswith("semicopula:"):
        return semicopula_to_circ(unit_op(name.split(":", 1)[1]))
    raise InputError(f"unknown operation {name!r}")


# -- flag checking ----------------------------------------------------------------


@dataclass(frozen=True)
class FlagCheck:
    flag: str
    declared: bool
    passed: bool
    witnesses: Tuple[Tuple[float, ...], ...]


@dataclass(frozen=True)
class FlagReport:
    op: str
    checks: Tuple[FlagCheck, ...]

    @property
    def consistent(self) -> bool:
        """Every declared-true flag passed its sampled check."""
        return all(c.passed for c in self.checks if c.declared)


def check_flags(op: OpSpec, grid: Sequence[float] = DEFAULT_GRID, max_witnesses: int = 8) -> FlagReport:
    """Falsify declared flags on all grid pairs/triples.

    Continuity flags are out of scope here (not decidable from samples);
    everything else is checked exhaustively over the grid.
    """
    g = sorted({as_ext(x) for x in grid})
    if 0.0 not in g:
        raise InputError("check grid must contain 0")
    f = op.fn
    checks: List[FlagCheck] = []

    bad: List[Tuple[float, ...]] = []
    for a, b in itertools.product(g, repeat=2):
        for c, d in itertools.product(g, repeat=2):
            if a <= c and b <= d and f(a, b) > f(c, d):
                bad.append((a, b, c, d))
                if len(bad) >= max_witnesses:
                    break
    checks.append(FlagCheck("nondecreasing", op.flags.nondecreasing, not bad, tuple(bad)))

    bad = [(a,) for a in g if f(a, 0.0) != 0.0][:max_witnesses]
    checks.append(FlagCheck("zero_absorbing", op.flags.zero_absorbing, not bad, tuple(bad)))

    bad = []
    for a, b, c in itertools.product(g, repeat=3):
        try:
            if f(xadd(a, b), c) > xadd(f(a, c), f(b, c)) + 1e-12:
                bad.append((a, b, c))
        except ArithmeticError:
            continue
        if len(bad) >= max_witnesses:
            break
    checks.append(FlagCheck("subdistributive_add", op.flags.subdistributive_add, not bad, tuple(bad)))

    bad = []
    for a, b, c in itertools.product(g, repeat=3):
        if f(f(a, b), c) != f(a, f(b, c)):
            bad.append((a, b, c))
            if len(bad) >= max_witnesses:
                break
    checks.append(FlagCheck("associative", op.flags.associative, not bad, tuple(bad)))

    if op.flags.idempotent_on is not None:
        bad = [(a,) for a in op.flags.idempotent_on if f(a, a) != a][:max_witnesses]
        checks.append(FlagCheck("idempotent_on", True, not bad, tuple(bad)))

    return FlagReport(op.name, tuple(checks))


def check_mixed_monotone(op: MixedOpSpec, pos_grid: Sequence[float], neg_grid: Sequence[float]) -> Optional[Tuple[float, ...]]:
    """Falsify monotonicity of a mixed op on a (nonneg x nonpos) grid; None if clean."""
    pg = sorted(as_ext(x) for x in pos_grid)
    ng = sorted(as_ext(x) for x in neg_grid)
    f = op.fn
    for a, c in itertools.combinations_with_replacement(pg, 2):
        for b, d in itertools.combinations_with_replacement(ng, 2):
            if f(a, b) > f(c, d):
                return (a, b, c, d)
    return None
