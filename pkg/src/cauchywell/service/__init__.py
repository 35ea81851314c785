"""HTTP service wrapping the solver core."""

from .app import app, create_app

__all__ = ["app", "create_app"]
