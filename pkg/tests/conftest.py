import numpy as np
import pytest

from lyreval.documents import (
    Language,
    Line,
    LyricsDocument,
    Section,
    SongMetadata,
    load_document,
)
from lyreval.providers import EmbeddingProvider, EmbeddingVector, StubEmbeddingProvider

from pathlib import Path

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def twinkle_en():
    return load_document(DATA / "twinkle_en.json")


@pytest.fixture(scope="session")
def twinkle_ja():
    return load_document(DATA / "twinkle_ja.json")


@pytest.fixture(scope="session")
def twinkle_ko():
    return load_document(DATA / "twinkle_ko.json")


@pytest.fixture(scope="session")
def snowman_en():
    return load_document(DATA / "snowman_en.json")


@pytest.fixture(scope="session")
def stub_provider():
    return StubEmbeddingProvider()


class FixedVectorProvider(EmbeddingProvider):
    """Maps exact (stripped) texts to preset vectors; unknown texts are an error."""

    def __init__(self, vectors: dict[str, list[float]], provider_id: str = "fixed-test"):
        self._vectors = {k: np.asarray(v, dtype=np.float64) for k, v in vectors.items()}
        self.dimension = len(next(iter(self._vectors.values())))
        self.provider_id = provider_id

    def embed(self, text: str) -> EmbeddingVector:
        return EmbeddingVector(self._vectors[text.strip()])


@pytest.fixture
def fixed_provider_factory():
    return FixedVectorProvider


def make_doc(section_texts, language=Language.EN, glosses=None, title="Test Song"):
    """Build a document from [[line, ...], ...]; glosses mirrors the shape when given."""
    sections = []
    for si, lines in enumerate(section_texts):
        built = []
        for li, text in enumerate(lines):
            gloss = glosses[si][li] if glosses is not None else None
            built.append(Line(text=text, gloss=gloss))
        sections.append(Section(tuple(built)))
    metadata = SongMetadata(
        title=title, artist="Test", genre="test",
        original_language=language, official=True,
    )
    return LyricsDocument(language=language, metadata=metadata, sections=tuple(sections))


@pytest.fixture
def doc_builder():
    return make_doc
