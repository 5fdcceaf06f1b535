"""One-shot analysis pipeline over a JSON config, plus DOT export.

The config names a system, a hole, and a subset of stages; the report
collects every stage's output in a single JSON document with per-stage
timings.  All rationals travel as exact fraction strings and entropies as
fixed 10-digit decimals.  Schema violations surface as JSON-pointer paths.
"""

from __future__ import annotations

import time
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .beta import (
    BetaThreshold,
    beta_itinerary,
    beta_language,
    classify_beta_threshold,
    expansion_length,
    is_beta_number,
    verify_beta_res,
)
from .brackets import (
    Certificate,
    bracket_report,
    certify_escape,
    certify_stabilization,
    inner_sft,
)
from .components import (
    ComponentForest,
    check_component_bound,
    forest_dot,
    transitive_filtration,
)
from .errors import ConfigError
from .evenshift import ies_even_witness, res_even_witness
from .holes import Hole1D, Hole2D, Rect, hole1d_from_intervals, hole2d_from_rects
from .jsonio import code_json, entropy_str, frac_str
from .sft import Sft, sft_components, sft_dot, sft_entropy
from .systems import SystemSpec
from .words import word_str

Stage = Literal["bracket", "certify", "components", "filtration", "beta", "witness"]


class SystemConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")
    kind: Literal["circle", "baker"]
    branches: int = Field(default=2, ge=2)


class RectConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")
    x: tuple[str, str]
    y: tuple[str, str] | None = None
    full_height: bool = False


class HoleConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")
    intervals: list[tuple[str, str]] | None = None
    rects: list[RectConfig] | None = None


class BetaConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")
    t: str
    branches: int = Field(default=2, ge=2)
    language_len: int = Field(default=8, ge=1)
    verify_res: bool = False


class AnalysisConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")
    system: SystemConfig
    hole: HoleConfig = HoleConfig()
    pipeline: list[Stage] = ["bracket", "certify"]
    depth: int = Field(default=6, ge=1)
    n_max: int = Field(default=12, ge=1)
    beta: BetaConfig | None = None
    witness_closed: bool = False
    seed: int | None = None


def parse_config(doc: dict) -> AnalysisConfig:
    try:
        return AnalysisConfig.model_validate(doc)
    except ValidationError as e:
        problems = [
            ("/" + "/".join(str(part) for part in err["loc"]), err["msg"])
            for err in e.errors()
        ]
        raise ConfigError(problems) from None


def _parse_frac(text: str, pointer: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ConfigError([(pointer, f"not a fraction: {text!r}")]) from None
    return v


def build_hole(cfg: AnalysisConfig):
    kind = cfg.system.kind
    hc = cfg.hole
    if kind == "circle":
        if hc.rects is not None:
            raise ConfigError([("/hole/rects", "circle systems take intervals")])
        pairs = [
            (
                _parse_frac(lo, f"/hole/intervals/{i}/0"),
                _parse_frac(hi, f"/hole/intervals/{i}/1"),
            )
            for i, (lo, hi) in enumerate(hc.intervals or [])
        ]
        try:
            return hole1d_from_intervals(pairs)
        except ValueError as e:
            raise ConfigError([("/hole/intervals", str(e))]) from None
    if hc.intervals is not None:
        raise ConfigError([("/hole/intervals", "stacked systems take rects")])
    rects = []
    for i, rc in enumerate(hc.rects or []):
        x = (
            _parse_frac(rc.x[0], f"/hole/rects/{i}/x/0"),
            _parse_frac(rc.x[1], f"/hole/rects/{i}/x/1"),
        )
        if rc.full_height:
            y = (Fraction(0), Fraction(1))
        elif rc.y is None:
            raise ConfigError([(f"/hole/rects/{i}/y", "required unless full_height")])
        else:
            y = (
                _parse_frac(rc.y[0], f"/hole/rects/{i}/y/0"),
                _parse_frac(rc.y[1], f"/hole/rects/{i}/y/1"),
            )
        try:
            rects.append(Rect(x, y, full_height=rc.full_height))
        except ValueError as e:
            raise ConfigError([(f"/hole/rects/{i}", str(e))]) from None
    try:
        return hole2d_from_rects(rects)
    except ValueError as e:
        raise ConfigError([("/hole/rects", str(e))]) from None


def hole_json(hole) -> list:
    if isinstance(hole, Hole1D):
        return [[frac_str(lo), frac_str(hi)] for lo, hi in hole.arcs]
    return [
        {
            "x": [frac_str(r.x[0]), frac_str(r.x[1])],
            "y": [frac_str(r.y[0]), frac_str(r.y[1])],
            "full_height": r.full_height,
        }
        for r in hole.rects
    ]


def _sft_summary(s: Sft) -> dict:
    return {
        "window": s.window,
        "sided": s.sided,
        "forbidden_count": len(s.forbidden),
        "vertex_count": len(s.alive()),
        "entropy": entropy_str(sft_entropy(s)),
    }


def stage_bracket(sys: SystemSpec, hole, cfg: AnalysisConfig) -> dict:
    pair = bracket_report(sys, hole, cfg.depth)
    return {
        "depth": pair.depth,
        "inner": _sft_summary(pair.inner),
        "outer": _sft_summary(pair.outer),
    }


def stage_certify(sys: SystemSpec, hole, cfg: AnalysisConfig) -> dict:
    stab = certify_stabilization(sys, hole, cfg.n_max)
    esc = certify_escape(sys, hole, cfg.n_max)
    out: dict = {"stabilization": stab.to_json(), "escape": esc.to_json()}
    if isinstance(stab, Certificate):
        out["entropy"] = entropy_str(sft_entropy(stab.sft))
        out["forbidden"] = sorted(word_str(w) for w in stab.sft.forbidden)
    return out


def stage_components(sys: SystemSpec, hole, cfg: AnalysisConfig) -> dict:
    s = inner_sft(sys, hole, cfg.depth)
    comps = sft_components(s)
    items = []
    for c in comps:
        succ = c.successors()
        vs = c.alive()
        items.append(
            {
                "vertices": len(vs),
                "entropy": entropy_str(sft_entropy(c)),
                "countable": all(len(succ.get(v, ())) == 1 for v in vs),
            }
        )
    return {"depth": cfg.depth, "count": len(comps), "components": items}


def stage_filtration(sys: SystemSpec, hole, cfg: AnalysisConfig) -> dict:
    forest = transitive_filtration(sys, hole, cfg.depth)
    out: dict = {"forest": forest.to_json()}
    if sys.kind == "circle":
        out["bound"] = check_component_bound(sys, hole, cfg.n_max).to_json()
    return out


def stage_beta(cfg: AnalysisConfig) -> dict:
    if cfg.beta is None:
        raise ConfigError([("/beta", "required when the pipeline includes beta")])
    bc = cfg.beta
    t = _parse_frac(bc.t, "/beta/t")
    try:
        bt = BetaThreshold(t, bc.branches)
    except ValueError as e:
        raise ConfigError([("/beta/t", str(e))]) from None
    ok, fail = is_beta_number(bt)
    if not ok:
        return {"is_beta_number": False, "failure_index": fail}
    tag, evidence = classify_beta_threshold(bt)
    out = {
        "is_beta_number": True,
        "classification": tag,
        "evidence": evidence,
        "itinerary": code_json(beta_itinerary(bt)),
        "expansion_length": expansion_length(bt),
        "language_len": bc.language_len,
        "language_size": len(beta_language(bt, bc.language_len)),
    }
    if bc.verify_res:
        out["verify_res"] = verify_beta_res(bt, bc.language_len).to_json()
    return out


def stage_witness(sys: SystemSpec, hole, cfg: AnalysisConfig) -> dict:
    if sys.branches != 2:
        raise ConfigError(
            [("/system/branches", "even shift arguments need the binary system")]
        )
    if sys.kind == "circle":
        w = ies_even_witness(hole, closed=cfg.witness_closed)
    else:
        w = res_even_witness(sys, hole, closed=cfg.witness_closed)
    return w.to_json()


def run_analysis(config: dict | AnalysisConfig) -> dict:
    """Run the configured stages and return one JSON-ready report."""
    cfg = config if isinstance(config, AnalysisConfig) else parse_config(config)
    sys = SystemSpec(cfg.system.kind, cfg.system.branches)
    hole, warnings = build_hole(cfg)
    report: dict = {
        "system": {"kind": sys.kind, "branches": sys.branches},
        "hole": {"normalized": hole_json(hole), "warnings": warnings},
        "stages": {},
        "timings": {},
    }
    if cfg.seed is not None:
        report["seed"] = cfg.seed
    runners = {
        "bracket": lambda: stage_bracket(sys, hole, cfg),
        "certify": lambda: stage_certify(sys, hole, cfg),
        "components": lambda: stage_components(sys, hole, cfg),
        "filtration": lambda: stage_filtration(sys, hole, cfg),
        "beta": lambda: stage_beta(cfg),
        "witness": lambda: stage_witness(sys, hole, cfg),
    }
    for stage in cfg.pipeline:
        t0 = time.perf_counter()
        report["stages"][stage] = runners[stage]()
        report["timings"][stage] = f"{time.perf_counter() - t0:.4f}"
    return report


def export_dot(obj: Sft | ComponentForest) -> str:
    """Deterministic DOT text for a shift graph or a component forest."""
    if isinstance(obj, Sft):
        return sft_dot(obj)
    if isinstance(obj, ComponentForest):
        return forest_dot(obj)
    raise TypeError(f"cannot export {type(obj).__name__} to DOT")


__all__ = [
    "AnalysisConfig",
    "BetaConfig",
    "HoleConfig",
    "RectConfig",
    "SystemConfig",
    "export_dot",
    "parse_config",
    "run_analysis",
]
