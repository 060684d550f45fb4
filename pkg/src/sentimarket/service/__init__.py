"""HTTP service wrapping the pipeline. The CLI talks to this app in
process; ``sentimarket serve`` runs it behind uvicorn."""

from .app import app, create_app

__all__ = ["app", "create_app"]
