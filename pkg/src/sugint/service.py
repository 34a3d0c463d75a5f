"""HTTP service exposing the engine: integrate, bound, verify, fuzz, reproduce.

The pydantic models here define the wire formats; the CLI is a thin client of
this app (in-process by default, remote with --server).  Infinities travel as
the strings "inf"/"-inf".

Instance JSON (discrete):
    {"n": 3, "measure": {"": 0, "0": 0.5, "0,1": 1.0, ...}, "A": [0, 1],
     "f": [1, 2, 0.5], "mode": "strict"}
Measure keys are comma-separated sorted element indices; "" is the empty set.

Transform JSON:
    {"segments": [{"lo": 0, "hi": "inf", "kind": "power", "params": [1, 2],
                   "mono": "inc"}], "domain": "nonneg"}
Kinds: const [c] | affine [a0, a1] | quad [a, b, c] | power [coef, e]
     | affpow [d, c, a, b, g, e] meaning d + c*(a + b*x**g)**e.

Profile JSON: like a transform but nonincreasing with a finite top; an
optional "lipschitz" field tightens the search certificates.
"""

from __future__ import annotations

from typing import Dict, List, Literal, Optional, Tuple, Union

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import binops
from .bounds import BoundReport, bound_ids, check_bound, resolve
from .errors import HypothesisError, InputError, SugintError
from .extreal import format_number, parse_number
from .fixtures import FixtureReport, run_all, run_fixture
from .instances import BoundContext, DiscreteInstance, IntervalInstance
from .integrals import generalized_integral, integrate_profile
from .measures import (
    FiniteSpace,
    MonotoneMeasure,
    SurvivalProfile,
    is_subadditive,
    is_superadditive,
    is_weakly_subadditive,
    is_weakly_superadditive,
)
from .symmetric import asymmetric_integral, symmetric_integral
from .transforms import PiecewiseMap
from .verify import FuzzConfig, fuzz

Number = Union[float, int, str]


# -- wire models -----------------------------------------------------------------


class InstanceSpec(BaseModel):
    n: int
    measure: Dict[str, Number]
    A: List[int]
    f: List[Number]
    mode: Literal["strict", "closure"] = "strict"


class SegmentSpec(BaseModel):
    lo: Number
    hi: Number
    kind: Literal["const", "affine", "quad", "power", "affpow"]
    params: List[float]
    mono: Literal["inc", "dec", "const"]


class TransformSpec(BaseModel):
    segments: List[SegmentSpec]
    domain: Literal["nonneg", "real"] = "nonneg"


class ProfileSpec(BaseModel):
    segments: List[SegmentSpec]
    lipschitz: Optional[float] = None


class IntervalSpec(BaseModel):
    muA: Number
    f_profile: Optional[ProfileSpec] = None
    hf_profile: Optional[ProfileSpec] = None
    f_range: Optional[Tuple[float, float]] = None
    fplus_profile: Optional[ProfileSpec] = None
    fminus_profile: Optional[ProfileSpec] = None
    h1f_profile: Optional[ProfileSpec] = None
    h2f_profile: Optional[ProfileSpec] = None
    declared: List[str] = Field(default_factory=list)


class IntegrateRequest(BaseModel):
    op: str = "min"
    instance: Optional[InstanceSpec] = None
    profile: Optional[ProfileSpec] = None
    tol: float = 1e-9
    symmetric: bool = False
    star: Optional[Literal["plus", "ovee"]] = None
    nu: Optional[InstanceSpec] = None


class IntegrateResponse(BaseModel):
    value: Number
    mode: str
    error_bound: Optional[float] = None
    argmax_t: Optional[Number] = None


class BoundInstanceSpec(BaseModel):
    instance: Optional[InstanceSpec] = None
    interval: Optional[IntervalSpec] = None
    H: TransformSpec
    op: str = "min"
    tnorm: Optional[str] = None
    semicopula: Optional[str] = None
    star: Literal["plus", "ovee"] = "plus"
    companion_op: Optional[str] = None
    m_p: Optional[float] = None
    c_pivot: Optional[float] = None
    a0: Optional[float] = None


class BoundRequest(BaseModel):
    id: str
    instance: BoundInstanceSpec
    tol: float = 1e-9
    profile_tol: float = 1e-10


class HypothesisModel(BaseModel):
    name: str
    holds: bool
    detail: str = ""


class BoundResponse(BaseModel):
    bound_id: str
    direction: str
    lhs: Number
    rhs: Number
    hypotheses: List[HypothesisModel]
    holds: bool
    slack: Number
    hypotheses_ok: bool
    minimizer: Optional[float] = None
    notes: List[str] = Field(default_factory=list)


class VerifyRequest(BaseModel):
    predicate: Literal[
        "monotone", "weakly-subadditive", "weakly-superadditive", "subadditive", "superadditive"
    ]
    instance: InstanceSpec
    A: Optional[List[int]] = None


class VerifyResponse(BaseModel):
    predicate: str
    holds: bool
    witness: Optional[List[List[int]]] = None
    detail: str = ""


class FuzzRequest(BaseModel):
    seed: int = 0
    trials: int = 100
    n_min: int = 2
    n_max: int = 6
    kind: str = "general"
    bounds: List[str] = Field(default_factory=list)
    tol: float = 1e-9
    resample_budget: int = 100


class ViolationModel(BaseModel):
    bound_id: str
    lhs: Number
    rhs: Number
    slack: Number
    refutable: bool
    trial: int
    instance: dict
    hypotheses: List[HypothesisModel]
    shrink_steps: int


class FuzzResponse(BaseModel):
    trials: int
    evaluated: Dict[str, int]
    skipped: Dict[str, int]
    violations: List[ViolationModel]
    digest: str
    clean: bool


class ReproduceRequest(BaseModel):
    fixture: str = "all"
    q: Optional[float] = None


class CheckModel(BaseModel):
    name: str
    expected: Optional[Number] = None
    actual: Optional[Number] = None
    tol: float
    passed: bool
    note: str = ""


class FixtureModel(BaseModel):
    fixture: str
    title: str
    passed: bool
    checks: List[CheckModel]
    notes: List[str] = Field(default_factory=list)


class ReproduceResponse(BaseModel):
    fixtures: List[FixtureModel]
    passed: bool


# -- parsing helpers ----------------------------------------------------------------


def parse_instance(spec: InstanceSpec) -> DiscreteInstance:
    space = FiniteSpace(spec.n)
    values: Dict[int, float] = {}
    for key, raw in spec.measure.items():
        idxs = [] if key.strip() == "" else [int(part) for part in key.split(",")]
        mask = space.mask_of(idxs)
        if mask in values:
            raise InputError(f"duplicate measure key {key!r}")
        values[mask] = parse_number(raw)
    measure = MonotoneMeasure(space, values, spec.mode)
    return DiscreteInstance(measure, space.mask_of(spec.A), tuple(parse_number(v) for v in spec.f))


def parse_transform(spec: TransformSpec) -> PiecewiseMap:
    return PiecewiseMap.from_json(spec.model_dump())


def parse_profile(spec: Optional[ProfileSpec]) -> Optional[SurvivalProfile]:
    if spec is None:
        return None
    pm = PiecewiseMap.from_json({"segments": [s.model_dump() for s in spec.segments], "domain": "nonneg"})
    return pm.as_profile(spec.lipschitz)


def _plain_op(name: str) -> binops.OpSpec:
    op = binops.builtin(name)
    if not isinstance(op, binops.OpSpec):
        raise InputError(f"{name!r} is not a binary operation on [0, inf]^2")
    return op


def _star_op(name: str) -> binops.MixedOpSpec:
    op = binops.builtin(name)
    if not isinstance(op, binops.MixedOpSpec):
        raise InputError(f"{name!r} is not a mixing operation")
    return op


def build_context(spec: BoundInstanceSpec, tol: float, profile_tol: float) -> BoundContext:
    if (spec.instance is None) == (spec.interval is None):
        raise InputError("exactly one of 'instance' and 'interval' must be given")
    if spec.instance is not None:
        inst = parse_instance(spec.instance)
    else:
        iv = spec.interval
        inst = IntervalInstance(
            mu_A=parse_number(iv.muA),
            f_profile=parse_profile(iv.f_profile),
            hf_profile=parse_profile(iv.hf_profile),
            f_range=iv.f_range,
            fplus_profile=parse_profile(iv.fplus_profile),
            fminus_profile=parse_profile(iv.fminus_profile),
            h1f_profile=parse_profile(iv.h1f_profile),
            h2f_profile=parse_profile(iv.h2f_profile),
            declared=frozenset(iv.declared),
        )
    return BoundContext(
        inst,
        H=parse_transform(spec.H),
        op=_plain_op(spec.op),
        conj=binops.unit_op(spec.tnorm) if spec.tnorm else None,
        semi=binops.unit_op(spec.semicopula) if spec.semicopula else None,
        star=_star_op(spec.star),
        companion=_plain_op(spec.companion_op) if spec.companion_op else None,
        m_p=spec.m_p,
        c_pivot=spec.c_pivot,
        a0=spec.a0,
        tol=tol,
        profile_tol=profile_tol,
    )


def _bound_response(report: BoundReport) -> BoundResponse:
    return BoundResponse(
        bound_id=report.bound_id,
        direction=report.direction,
        lhs=format_number(float(report.lhs)),
        rhs=format_number(float(report.rhs)),
        hypotheses=[HypothesisModel(name=h.name, holds=h.holds, detail=h.detail) for h in report.hypotheses],
        holds=report.holds,
        slack=format_number(report.slack),
        hypotheses_ok=report.hypotheses_ok,
        minimizer=report.minimizer,
        notes=list(report.notes),
    )


def _fixture_model(report: FixtureReport) -> FixtureModel:
    return FixtureModel(
        fixture=report.fixture,
        title=report.title,
        passed=report.passed,
        checks=[
            CheckModel(
                name=c.name,
                expected=None if c.expected is None else format_number(c.expected),
                actual=None if c.actual is None else format_number(c.actual),
                tol=c.tol,
                passed=c.passed,
                note=c.note,
            )
            for c in report.checks
        ],
        notes=list(report.notes),
    )


# -- app ----------------------------------------------------------------------------


app = FastAPI(
    title="sugint",
    description="Sugeno-type integrals and their two-sided bound verification over monotone measures",
    version="0.1.0",
)


@app.exception_handler(SugintError)
def _sugint_error_handler(_req: Request, exc: SugintError):
    status = 422 if isinstance(exc, HypothesisError) else 400
    return JSONResponse(
        status_code=status,
        content={"error": {"kind": type(exc).__name__, "detail": str(exc)}},
    )


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok"}


@app.get("/bounds")
def list_bounds() -> dict:
    return {"bounds": bound_ids(include_refutable=True)}


@app.post("/integrate", response_model=IntegrateResponse)
def integrate(req: IntegrateRequest) -> IntegrateResponse:
    if req.symmetric:
        if req.instance is None:
            raise InputError("symmetric integration needs a discrete instance")
        if req.star is None:
            raise InputError("symmetric integration needs --star plus|ovee")
        inst = parse_instance(req.instance)
        star = _star_op(req.star)
        if req.nu is not None:
            nu_inst = parse_instance(req.nu)
            if nu_inst.measure.space.n != inst.measure.space.n:
                raise InputError("nu must live on the same space")
            value = asymmetric_integral(
                _plain_op(req.op), star, inst.measure, nu_inst.measure, inst.A, inst.f
            )
        else:
            value = symmetric_integral(inst.measure, inst.A, inst.f, star)
        return IntegrateResponse(value=format_number(float(value)), mode="exact")
    if (req.instance is None) == (req.profile is None):
        raise InputError("exactly one of 'instance' and 'profile' must be given")
    op = _plain_op(req.op)
    if req.instance is not None:
        inst = parse_instance(req.instance)
        result = generalized_integral(op, inst.measure, inst.A, inst.f)
    else:
        result = integrate_profile(op, parse_profile(req.profile), req.tol)
    return IntegrateResponse(
        value=format_number(float(result.value)),
        mode=result.mode,
        error_bound=result.error_bound,
        argmax_t=format_number(result.argmax_t),
    )


@app.post("/bound", response_model=BoundResponse)
def bound(req: BoundRequest) -> BoundResponse:
    ctx = build_context(req.instance, req.tol, req.profile_tol)
    return _bound_response(check_bound(ctx, req.id, req.tol))


@app.post("/verify", response_model=VerifyResponse)
def verify_predicate(req: VerifyRequest) -> VerifyResponse:
    inst = parse_instance(req.instance)
    measure, space = inst.measure, inst.measure.space
    if req.predicate == "monotone":
        report = measure.validate_monotone()
        witness = [[list(space.indices_of(a)), list(space.indices_of(b))] for a, b in report.violations]
        return VerifyResponse(
            predicate=req.predicate,
            holds=report.valid,
            witness=[w for pair in witness for w in pair] or None,
            detail="mu(empty)=0 and inclusion monotonicity" if report.valid else "violating covering pairs listed",
        )
    if req.predicate in ("weakly-subadditive", "weakly-superadditive"):
        mask = space.mask_of(req.A) if req.A is not None else inst.A
        pred = is_weakly_subadditive if req.predicate == "weakly-subadditive" else is_weakly_superadditive
        res = pred(measure, mask)
    else:
        pred = is_subadditive if req.predicate == "subadditive" else is_superadditive
        res = pred(measure)
    witness = None if res.witness is None else [list(space.indices_of(m)) for m in res.witness]
    return VerifyResponse(predicate=req.predicate, holds=res.holds, witness=witness)


@app.post("/fuzz", response_model=FuzzResponse)
def fuzz_endpoint(req: FuzzRequest) -> FuzzResponse:
    for b in req.bounds:
        resolve(b)
    cfg = FuzzConfig(
        seed=req.seed,
        trials=req.trials,
        n_min=req.n_min,
        n_max=req.n_max,
        measure_kind=req.kind,
        bounds=tuple(req.bounds),
        tol=req.tol,
        resample_budget=req.resample_budget,
    )
    report = fuzz(cfg)
    return FuzzResponse(
        trials=req.trials,
        evaluated=report.evaluated,
        skipped=report.skipped,
        violations=[
            ViolationModel(
                bound_id=v.bound_id,
                lhs=format_number(v.lhs),
                rhs=format_number(v.rhs),
                slack=format_number(v.slack),
                refutable=v.refutable,
                trial=v.trial,
                instance=v.instance,
                hypotheses=[HypothesisModel(name=n, holds=h, detail=d) for n, h, d in v.hypotheses],
                shrink_steps=v.shrink_steps,
            )
            for v in report.violations
        ],
        digest=report.digest,
        clean=report.clean,
    )


@app.post("/reproduce", response_model=ReproduceResponse)
def reproduce(req: ReproduceRequest) -> ReproduceResponse:
    if req.fixture == "all":
        reports = run_all(req.q)
    else:
        reports = [run_fixture(req.fixture, req.q)]
    models = [_fixture_model(r) for r in reports]
    return ReproduceResponse(fixtures=models, passed=all(m.passed for m in models))
