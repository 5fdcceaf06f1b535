"""HTTP service layer: request/response models, handlers, FastAPI app."""

from .app import (
    app,
    create_app,
    handle_analyze,
    handle_beta,
    handle_certify,
    handle_components,
    handle_export_dot,
    handle_filtration,
    handle_sample,
    handle_witness,
)

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
