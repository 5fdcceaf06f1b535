"""FastAPI wiring over the core package.

Every endpoint delegates to a plain handler function taking a request
model and returning a response model; the CLI calls the same handlers in
process, so the HTTP layer adds transport and error mapping only.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from ..analysis import (
    AnalysisConfig,
    build_hole,
    stage_beta,
    stage_certify,
    stage_components,
    stage_filtration,
    stage_witness,
    export_dot,
    run_analysis,
)
from ..brackets import inner_sft
from ..components import transitive_filtration
from ..errors import ConfigError, ExclusionLabError
from ..genericity import sample_rectangle_genericity
from ..systems import SystemSpec
from .models import (
    AnalyzeRequest,
    AnalyzeResponse,
    BetaConfig,
    BetaRequest,
    BetaResponse,
    CertifyRequest,
    CertifyResponse,
    ComponentsRequest,
    ComponentsResponse,
    ExportDotRequest,
    ExportDotResponse,
    FiltrationRequest,
    FiltrationResponse,
    HealthResponse,
    SampleRequest,
    SampleResponse,
    WitnessRequest,
    WitnessResponse,
)


def _cfg(system, hole, **extra) -> AnalysisConfig:
    return AnalysisConfig(system=system, hole=hole, **extra)


def handle_analyze(req: AnalyzeRequest) -> AnalyzeResponse:
    return AnalyzeResponse(report=run_analysis(req.config))


def handle_certify(req: CertifyRequest) -> CertifyResponse:
    cfg = _cfg(req.system, req.hole, n_max=req.n_max)
    sys = SystemSpec(cfg.system.kind, cfg.system.branches)
    hole, _ = build_hole(cfg)
    return CertifyResponse(**stage_certify(sys, hole, cfg))


def handle_components(req: ComponentsRequest) -> ComponentsResponse:
    cfg = _cfg(req.system, req.hole, depth=req.depth)
    sys = SystemSpec(cfg.system.kind, cfg.system.branches)
    hole, _ = build_hole(cfg)
    return ComponentsResponse(**stage_components(sys, hole, cfg))


def handle_filtration(req: FiltrationRequest) -> FiltrationResponse:
    cfg = _cfg(req.system, req.hole, depth=req.depth, n_max=req.n_max)
    sys = SystemSpec(cfg.system.kind, cfg.system.branches)
    hole, _ = build_hole(cfg)
    return FiltrationResponse(**stage_filtration(sys, hole, cfg))


def handle_beta(req: BetaRequest) -> BetaResponse:
    cfg = AnalysisConfig(
        system={"kind": "baker", "branches": req.branches},
        beta=BetaConfig(
            t=req.t,
            branches=req.branches,
            language_len=req.language_len,
            verify_res=req.verify_res,
        ),
    )
    return BetaResponse(result=stage_beta(cfg))


def handle_witness(req: WitnessRequest) -> WitnessResponse:
    cfg = _cfg(req.system, req.hole, witness_closed=req.closed)
    sys = SystemSpec(cfg.system.kind, cfg.system.branches)
    hole, _ = build_hole(cfg)
    return WitnessResponse(**stage_witness(sys, hole, cfg))


def handle_sample(req: SampleRequest) -> SampleResponse:
    report = sample_rectangle_genericity(
        req.seed, req.count, req.corner_depth, tuple(req.n_max_list)
    )
    return SampleResponse(report=report.to_json())


def handle_export_dot(req: ExportDotRequest) -> ExportDotResponse:
    cfg = _cfg(req.system, req.hole, depth=req.depth)
    sys = SystemSpec(cfg.system.kind, cfg.system.branches)
    hole, _ = build_hole(cfg)
    if req.target == "sft":
        return ExportDotResponse(dot=export_dot(inner_sft(sys, hole, cfg.depth)))
    return ExportDotResponse(dot=export_dot(transitive_filtration(sys, hole, cfg.depth)))


def create_app() -> FastAPI:
    app = FastAPI(title="exclusionlab")

    @app.exception_handler(ConfigError)
    async def _config_error(request, exc: ConfigError):
        detail = [{"path": p, "message": m} for p, m in exc.problems]
        return JSONResponse(status_code=422, content={"detail": detail})

    @app.exception_handler(ExclusionLabError)
    async def _domain_error(request, exc: ExclusionLabError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/healthz", response_model=HealthResponse)
    def healthz() -> HealthResponse:
        return HealthResponse()

    @app.post("/analyze", response_model=AnalyzeResponse)
    def analyze(req: AnalyzeRequest) -> AnalyzeResponse:
        return handle_analyze(req)

    @app.post("/certify", response_model=CertifyResponse)
    def certify(req: CertifyRequest) -> CertifyResponse:
        return handle_certify(req)

    @app.post("/components", response_model=ComponentsResponse)
    def components(req: ComponentsRequest) -> ComponentsResponse:
        return handle_components(req)

    @app.post("/filtration", response_model=FiltrationResponse)
    def filtration(req: FiltrationRequest) -> FiltrationResponse:
        return handle_filtration(req)

    @app.post("/beta", response_model=BetaResponse)
    def beta(req: BetaRequest) -> BetaResponse:
        return handle_beta(req)

    @app.post("/witness-even", response_model=WitnessResponse)
    def witness_even(req: WitnessRequest) -> WitnessResponse:
        return handle_witness(req)

    @app.post("/sample", response_model=SampleResponse)
    def sample(req: SampleRequest) -> SampleResponse:
        return handle_sample(req)

    @app.post("/export-dot", response_model=ExportDotResponse)
    def export_dot_route(req: ExportDotRequest) -> ExportDotResponse:
        return handle_export_dot(req)

    return app


app = create_app()

__all__ = [
    "app",
    "create_app",
    "handle_analyze",
    "handle_beta",
    "handle_certify",
    "handle_components",
    "handle_export_dot",
    "handle_filtration",
    "handle_sample",
    "handle_witness",
]
