"""Embedding and translation providers.

Three embedding providers ship with the package:

* StubEmbeddingProvider — deterministic hashed character-n-gram counts;
  fully offline, used by the test suite.
* FileEmbeddingProvider — precomputed text->vector maps from a JSON file.
* RemoteEmbeddingProvider — speaks the HTTP contract
  ``POST /embed {"texts": [...]} -> {"model", "dimension", "vectors"}``
  with a ``GET /health`` check at construction time.

Translation is a capability contract (identity on English); a remote
implementation speaks ``POST /translate {"texts": [...], "from": ...}``.
All providers are safe for concurrent calls; the cache serializes access
with a lock.
"""

from __future__ import annotations

import hashlib
import json
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np
import requests

from .documents import Language
from .errors import DomainError, ProviderError, ValidationError


@dataclass(frozen=True)
class EmbeddingVector:
    values: np.ndarray
    norm: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "norm", float(np.linalg.norm(self.values)))

    @property
    def dimension(self) -> int:
        return int(self.values.shape[0])

    def cosine(self, other: "EmbeddingVector") -> float:
        if self.norm == 0.0 or other.norm == 0.0:
            raise DomainError("cosine similarity is undefined for a zero-norm embedding")
        return float(np.dot(self.values, other.values) / (self.norm * other.norm))

    def to_list(self) -> list[float]:
        return [float(x) for x in self.values]


def _as_vector(values: Sequence[float]) -> EmbeddingVector:
    return EmbeddingVector(np.asarray(values, dtype=np.float64))


class EmbeddingProvider(ABC):
    provider_id: str
    dimension: int

    @abstractmethod
    def embed(self, text: str) -> EmbeddingVector: ...

    def embed_many(self, texts: Sequence[str]) -> list[EmbeddingVector]:
        return [self.embed(t) for t in texts]


class StubEmbeddingProvider(EmbeddingProvider):
    """Hashed character-n-gram frequency vectors; deterministic across runs."""

    def __init__(self, dimension: int = 256, ngram_sizes: tuple[int, ...] = (1, 2, 3)):
        self.dimension = dimension
        self.ngram_sizes = ngram_sizes
        self.provider_id = f"stub-ngram-{dimension}"

    def _bucket(self, gram: str) -> int:
        digest = hashlib.blake2b(gram.encode("utf-8"), digest_size=8).digest()
        return int.from_bytes(digest, "big") % self.dimension

    def embed(self, text: str) -> EmbeddingVector:
        counts = np.zeros(self.dimension, dtype=np.float64)
        for n in self.ngram_sizes:
            for i in range(len(text) - n + 1):
                counts[self._bucket(text[i : i + n])] += 1.0
        return EmbeddingVector(counts)


class FileEmbeddingProvider(EmbeddingProvider):
    """Reads a precomputed JSON map: {"dimension", "provider_id", "vectors": {text: [...]}}."""

    def __init__(self, dimension: int, provider_id: str, vectors: dict[str, EmbeddingVector]):
        self.dimension = dimension
        self.provider_id = provider_id
        self._vectors = vectors

    @classmethod
    def from_path(cls, path: str | Path) -> "FileEmbeddingProvider":
        path = Path(path)
        data = json.loads(path.read_text(encoding="utf-8"))
        for key in ("dimension", "provider_id", "vectors"):
            if key not in data:
                raise ValidationError(f"{path}: embedding file missing {key!r}")
        dimension = data["dimension"]
        vectors: dict[str, EmbeddingVector] = {}
        for text, values in data["vectors"].items():
            if len(values) != dimension:
                raise ValidationError(
                    f"{path}: vector for {text!r} has length {len(values)}, expected {dimension}"
                )
            vectors[text] = _as_vector(values)
        return cls(dimension=dimension, provider_id=data["provider_id"], vectors=vectors)

    def embed(self, text: str) -> EmbeddingVector:
        try:
            return self._vectors[text]
        except KeyError:
            raise ProviderError(f"no precomputed embedding for text: {text!r}") from None


class RemoteEmbeddingProvider(EmbeddingProvider):
    """HTTP client for the embedding wire contract; health-checked at construction."""

    def __init__(self, base_url: str, *, batch_size: int = 64, timeout: float = 30.0):
        self.base_url = base_url.rstrip("/")
        self.batch_size = batch_size
        self.timeout = timeout
        health = self.health()
        self.model = health.get("model", "unknown")
        self.provider_id = f"remote:{self.model}"
        self.dimension = 0  # learned from the first /embed response

    def health(self) -> dict:
        try:
            resp = requests.get(f"{self.base_url}/health", timeout=self.timeout)
            resp.raise_for_status()
            data = resp.json()
        except (requests.RequestException, ValueError) as e:
            raise ProviderError(f"embedding service health check failed for {self.base_url}: {e}") from e
        if data.get("status") != "ok":
            raise ProviderError(f"embedding service unhealthy: {data!r}")
        return data

    def embed(self, text: str) -> EmbeddingVector:
        return self.embed_many([text])[0]

    def embed_many(self, texts: Sequence[str]) -> list[EmbeddingVector]:
        out: list[EmbeddingVector] = []
        for start in range(0, len(texts), self.batch_size):
            chunk = list(texts[start : start + self.batch_size])
            try:
                resp = requests.post(
                    f"{self.base_url}/embed", json={"texts": chunk}, timeout=self.timeout
                )
                resp.raise_for_status()
                data = resp.json()
            except (requests.RequestException, ValueError) as e:
                raise ProviderError(f"embed request failed: {e}") from e
            vectors = data.get("vectors")
            if not isinstance(vectors, list) or len(vectors) != len(chunk):
                raise ProviderError(f"embedding service returned {len(vectors or [])} vectors for {len(chunk)} texts")
            dimension = data.get("dimension")
            if self.dimension == 0:
                self.dimension = int(dimension)
            elif dimension != self.dimension:
                raise ProviderError(f"embedding dimension changed mid-session: {dimension} != {self.dimension}")
            out.extend(_as_vector(v) for v in vectors)
        return out


class EmbeddingCache:
    """Thread-safe (provider_id, trimmed text) -> vector cache.

    Cache keys trim surrounding whitespace; no other normalization.
    """

    def __init__(self) -> None:
        self._store: dict[tuple[str, str], EmbeddingVector] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._store)

    def get_many(self, provider: EmbeddingProvider, texts: Sequence[str]) -> list[EmbeddingVector]:
        keys = [(provider.provider_id, t.strip()) for t in texts]
        with self._lock:
            missing = [k[1] for k in dict.fromkeys(keys) if k not in self._store]
        if missing:
            fresh = provider.embed_many(missing)
            with self._lock:
                for text, vec in zip(missing, fresh):
                    self._store[(provider.provider_id, text)] = vec
        with self._lock:
            return [self._store[k] for k in keys]

    def get(self, provider: EmbeddingProvider, text: str) -> EmbeddingVector:
        return self.get_many(provider, [text])[0]


class TranslationProvider(ABC):
    @abstractmethod
    def translate(self, text: str, from_language: Language) -> str:
        """English rendering of ``text``; must be the identity for English input."""

    def translate_many(self, texts: Sequence[str], from_language: Language) -> list[str]:
        return [self.translate(t, from_language) for t in texts]


class RemoteTranslationProvider(TranslationProvider):
    def __init__(self, base_url: str, *, timeout: float = 30.0):
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout

    def translate(self, text: str, from_language: Language) -> str:
        return self.translate_many([text], from_language)[0]

    def translate_many(self, texts: Sequence[str], from_language: Language) -> list[str]:
        if from_language is Language.EN:
            return list(texts)
        try:
            resp = requests.post(
                f"{self.base_url}/translate",
                json={"texts": list(texts), "from": from_language.value},
                timeout=self.timeout,
            )
            resp.raise_for_status()
            data = resp.json()
        except (requests.RequestException, ValueError) as e:
            raise ProviderError(f"translate request failed: {e}") from e
        out = data.get("texts")
        if not isinstance(out, list) or len(out) != len(texts):
            raise ProviderError("translation service returned a mismatched text list")
        return [str(t) for t in out]
