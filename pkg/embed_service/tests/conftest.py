import hashlib

import pytest
from fastapi.testclient import TestClient

from embed_service.app import create_app
from embed_service.config import ServiceConfig


class FakeEncoder:
    """Deterministic hash-based stand-in; no model weights needed."""

    dimension = 8

    def __init__(self, model_name: str):
        self.model_name = model_name

    def encode(self, texts):
        out = []
        for text in texts:
            digest = hashlib.blake2b(text.encode("utf-8"), digest_size=self.dimension).digest()
            out.append([b / 255.0 for b in digest])
        return out


@pytest.fixture
def client():
    config = ServiceConfig(model="fake-model", max_batch_size=4)
    app = create_app(config, encoder_factory=FakeEncoder)
    return TestClient(app)


@pytest.fixture
def client_with_translator_factory():
    def build(translator_url):
        config = ServiceConfig(model="fake-model", max_batch_size=4, translator_url=translator_url)
        return TestClient(create_app(config, encoder_factory=FakeEncoder))

    return build


@pytest.fixture(scope="session")
def real_model_client():
    """Real sentence-transformers backend; skipped when weights are unavailable."""
    config = ServiceConfig()
    app = create_app(config)
    client = TestClient(app)
    try:
        response = client.post("/embed", json={"texts": ["warmup"]})
    except Exception as e:  # model load failed (no weights, no network)
        pytest.skip(f"reference model unavailable: {e}")
    if response.status_code != 200:
        pytest.skip(f"reference model unavailable: {response.status_code} {response.text[:200]}")
    return client
