"""Quantitative evaluation of singable lyric translations (EN/JA/KO).

Four metrics over line- and section-aligned lyric pairs: line syllable
count distance, phoneme repetition similarity, musical structure
distance, and section-wise semantic similarity.
"""

from .corpus import CorpusLoadResult, SkippedPair, load_corpus
from .documents import (
    AlignedPair,
    Language,
    Line,
    LyricsDocument,
    Section,
    SongMetadata,
    dump_document,
    load_document,
    make_aligned_pair,
    parse_document,
)
from .errors import (
    AlignmentError,
    ConfigurationError,
    DomainError,
    DroppedTextWarning,
    KanjiNotSupportedError,
    LyrevalError,
    ParseError,
    ProviderError,
    ValidationError,
)
from .evaluate import (
    GroupKey,
    GroupStats,
    MetricReport,
    MetricValue,
    evaluate_corpus,
    evaluate_pair,
    grouped_averages,
)
from .metrics import (
    DissimilarityMatrix,
    SectionPhoStats,
    line_syllable_count_distance,
    musical_structure_distance,
    pho_profile,
    phoneme_distinct2,
    phoneme_repetition_similarity,
    section_dissimilarity,
    self_dissimilarity_matrix,
    spearman,
    structure_distance_between,
)
from .phonology import (
    EOS,
    Lexicon,
    MergeTable,
    PhonemeSequence,
    apply_merge_table,
    count_syllables,
    default_lexicon,
    default_merge_tables,
    load_merge_tables,
    phonemize,
    phonemize_section,
)
from .providers import (
    EmbeddingCache,
    EmbeddingProvider,
    EmbeddingVector,
    FileEmbeddingProvider,
    RemoteEmbeddingProvider,
    RemoteTranslationProvider,
    StubEmbeddingProvider,
    TranslationProvider,
)
from .semantics import (
    CrossScapeGrid,
    cross_scape,
    english_text,
    line_wise_semantic_similarity,
    section_similarity_matrix,
    semantic_similarity,
    sts,
)

__version__ = "0.1.0"
