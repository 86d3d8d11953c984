"""HTTP embedding service.

Wire contract:

    GET  /health  -> {"status": "ok", "model": str}
    POST /embed   {"texts": [str, ...]}
                  -> {"model": str, "dimension": int, "vectors": [[float, ...], ...]}
    POST /translate (optional passthrough) {"texts": [...], "from": "JA"|"KO"}
                  -> {"texts": [...]}

Malformed bodies get HTTP 400; batches over the configured limit get 413.
The model is loaded once and shared read-only across requests; inference
is deterministic (same text -> identical vector within a process).
"""

from __future__ import annotations

import threading
from typing import Callable, Protocol, Sequence

import requests
from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse

from .config import ServiceConfig


class Encoder(Protocol):
    model_name: str
    dimension: int

    def encode(self, texts: Sequence[str]) -> list[list[float]]: ...


class SentenceTransformerEncoder:
    """Wraps a sentence-transformers model; falls back to the local cache when offline."""

    def __init__(self, model_name: str):
        self.model_name = model_name
        self._model = self._load(model_name)
        self.dimension = int(self._model.get_sentence_embedding_dimension())
        self._lock = threading.Lock()

    @staticmethod
    def _load(model_name: str):
        from sentence_transformers import SentenceTransformer

        try:
            return SentenceTransformer(model_name)
        except Exception:
            # no network: retry against the local cache only
            return SentenceTransformer(model_name, local_files_only=True)

    def encode(self, texts: Sequence[str]) -> list[list[float]]:
        with self._lock:
            vectors = self._model.encode(
                list(texts), convert_to_numpy=True, show_progress_bar=False
            )
        return [[float(x) for x in row] for row in vectors]


def create_app(
    config: ServiceConfig | None = None,
    encoder_factory: Callable[[str], Encoder] | None = None,
) -> FastAPI:
    """Build the FastAPI app; ``encoder_factory`` lets tests inject a fake encoder."""
    config = config or ServiceConfig.from_env()
    factory = encoder_factory or SentenceTransformerEncoder
    app = FastAPI(title="embed-service")
    state = {"encoder": None}
    state_lock = threading.Lock()

    def encoder() -> Encoder:
        with state_lock:
            if state["encoder"] is None:
                state["encoder"] = factory(config.model)
            return state["encoder"]

    async def _json_body(request: Request) -> dict:
        try:
            data = await request.json()
        except Exception:
            raise HTTPException(status_code=400, detail="request body must be JSON")
        if not isinstance(data, dict):
            raise HTTPException(status_code=400, detail="request body must be a JSON object")
        return data

    def _texts_field(data: dict) -> list[str]:
        texts = data.get("texts")
        if not isinstance(texts, list) or not all(isinstance(t, str) for t in texts):
            raise HTTPException(status_code=400, detail="'texts' must be a list of strings")
        if not texts:
            raise HTTPException(status_code=400, detail="'texts' must be non-empty")
        if len(texts) > config.max_batch_size:
            raise HTTPException(
                status_code=413,
                detail=f"batch of {len(texts)} exceeds the limit of {config.max_batch_size}",
            )
        return texts

    @app.get("/health")
    def health():
        return {"status": "ok", "model": config.model}

    @app.post("/embed")
    async def embed(request: Request):
        data = await _json_body(request)
        texts = _texts_field(data)
        enc = encoder()
        vectors = enc.encode(texts)
        return {"model": config.model, "dimension": enc.dimension, "vectors": vectors}

    @app.post("/translate")
    async def translate(request: Request):
        if config.translator_url is None:
            raise HTTPException(status_code=404, detail="translation passthrough is not enabled")
        data = await _json_body(request)
        texts = _texts_field(data)
        source = data.get("from")
        if source not in ("JA", "KO", "EN"):
            raise HTTPException(status_code=400, detail="'from' must be one of JA, KO, EN")
        if source == "EN":
            return {"texts": texts}
        try:
            resp = requests.post(
                f"{config.translator_url.rstrip('/')}/translate",
                json={"texts": texts, "from": source},
                timeout=60,
            )
            resp.raise_for_status()
            payload = resp.json()
        except (requests.RequestException, ValueError) as e:
            return JSONResponse(status_code=502, content={"detail": f"upstream translator failed: {e}"})
        out = payload.get("texts")
        if not isinstance(out, list) or len(out) != len(texts):
            return JSONResponse(status_code=502, content={"detail": "upstream returned a mismatched list"})
        return {"texts": out}

    return app
