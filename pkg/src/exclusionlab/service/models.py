"""Request and response bodies for the HTTP service.

Requests reuse the analysis config vocabulary (fraction strings, interval
and rectangle holes); responses carry the same JSON documents the core
produces, so CLI output is identical whether it runs in process or against
a server.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from ..analysis import BetaConfig, HoleConfig, SystemConfig


class AnalyzeRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    config: dict


class AnalyzeResponse(BaseModel):
    report: dict


class CertifyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    system: SystemConfig
    hole: HoleConfig = HoleConfig()
    n_max: int = Field(default=12, ge=1)


class CertifyResponse(BaseModel):
    stabilization: dict
    escape: dict
    entropy: str | None = None
    forbidden: list[str] | None = None


class ComponentsRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    system: SystemConfig
    hole: HoleConfig = HoleConfig()
    depth: int = Field(default=6, ge=1)


class ComponentsResponse(BaseModel):
    depth: int
    count: int
    components: list[dict]


class FiltrationRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    system: SystemConfig
    hole: HoleConfig = HoleConfig()
    depth: int = Field(default=6, ge=1)
    n_max: int = Field(default=12, ge=1)


class FiltrationResponse(BaseModel):
    forest: dict
    bound: dict | None = None


class BetaRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    t: str
    branches: int = Field(default=2, ge=2)
    language_len: int = Field(default=8, ge=1)
    verify_res: bool = False


class BetaResponse(BaseModel):
    result: dict


class WitnessRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    system: SystemConfig
    hole: HoleConfig = HoleConfig()
    closed: bool = False


class WitnessResponse(BaseModel):
    kind: str
    index: int
    points: list[dict]
    facts: list[str]


class SampleRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    seed: int
    count: int = Field(ge=1)
    corner_depth: int = Field(default=8, ge=1)
    n_max_list: list[int] = [4, 8, 12]


class SampleResponse(BaseModel):
    report: dict


class ExportDotRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    system: SystemConfig
    hole: HoleConfig = HoleConfig()
    depth: int = Field(default=6, ge=1)
    target: Literal["sft", "forest"] = "sft"


class ExportDotResponse(BaseModel):
    dot: str


class HealthResponse(BaseModel):
    status: str = "ok"


__all__ = [
    "AnalyzeRequest",
    "AnalyzeResponse",
    "BetaConfig",
    "BetaRequest",
    "BetaResponse",
    "CertifyRequest",
    "CertifyResponse",
    "ComponentsRequest",
    "ComponentsResponse",
    "ExportDotRequest",
    "ExportDotResponse",
    "FiltrationRequest",
    "FiltrationResponse",
    "HealthResponse",
    "SampleRequest",
    "SampleResponse",
    "WitnessRequest",
    "WitnessResponse",
]
