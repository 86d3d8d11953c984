"""Reference HTTP embedding service for the lyreval remote provider."""

from .app import create_app
from .config import DEFAULT_MODEL, ServiceConfig

__all__ = ["DEFAULT_MODEL", "ServiceConfig", "create_app"]
__version__ = "0.1.0"
