"""Service configuration."""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_MODEL = "sentence-transformers/all-MiniLM-L6-v2"


@dataclass(frozen=True)
class ServiceConfig:
    model: str = DEFAULT_MODEL
    host: str = "127.0.0.1"
    port: int = 8987
    max_batch_size: int = 128
    translator_url: str | None = None  # enables the /translate passthrough when set

    def __post_init__(self) -> None:
        if self.max_batch_size < 1:
            raise ValueError("max_batch_size must be at least 1")

    @classmethod
    def from_env(cls, **overrides) -> "ServiceConfig":
        values = {
            "model": os.environ.get("EMBED_SERVICE_MODEL", DEFAULT_MODEL),
            "host": os.environ.get("EMBED_SERVICE_HOST", "127.0.0.1"),
            "port": int(os.environ.get("EMBED_SERVICE_PORT", "8987")),
            "max_batch_size": int(os.environ.get("EMBED_SERVICE_MAX_BATCH", "128")),
            "translator_url": os.environ.get("EMBED_SERVICE_TRANSLATOR_URL") or None,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
