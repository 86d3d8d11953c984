"""English phonemization and syllable counting.

Pronunciations come from a pronouncing-dictionary lexicon (ARPABET
symbols, stress digits stripped at load). A compact lexicon covering
common lyric vocabulary ships with the package; any file in the standard
``WORD  PH1 PH2 ...`` layout can be swapped in.

Out-of-lexicon words fall back to a deterministic grapheme rule set:
consonant letters map to their nearest ARPABET consonant (with the usual
digraphs: ch, sh, th, ph, wh, ng, ck; 'qu' is treated as 'qw'),
contiguous vowel-letter groups map to a canonical vowel, a silent final
'e' is dropped, and doubled letters collapse. The fallback syllable count
is the number of vowel groups after dropping a silent final 'e',
minimum 1.
"""

from __future__ import annotations

import re
import warnings
from importlib import resources
from pathlib import Path

from ..errors import DroppedTextWarning, ParseError
from .sequences import EOS  # noqa: F401  (re-exported for callers working at token level)

VOWELS = frozenset("AA AE AH AO AW AY EH ER EY IH IY OW OY UH UW".split())
CONSONANTS = frozenset("B CH D DH F G HH JH K L M N NG P R S SH T TH V W Y Z ZH".split())
INVENTORY = VOWELS | CONSONANTS

_STRESS_DIGITS = str.maketrans("", "", "012")


class Lexicon:
    """Case-insensitive word -> ARPABET phoneme list mapping."""

    def __init__(self, entries: dict[str, tuple[str, ...]]):
        self._entries = entries

    @classmethod
    def from_file(cls, path: str | Path) -> "Lexicon":
        """Load a pronouncing-dictionary file: one ``WORD  PH1 PH2 ...`` entry per line.

        Lines starting with ';;;' are comments. Variant entries like
        ``WORD(1)`` are ignored in favor of the base entry. Stress digits
        are stripped; symbols outside the ARPABET inventory are rejected.
        """
        entries: dict[str, tuple[str, ...]] = {}
        path = Path(path)
        for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith(";;;"):
                continue
            parts = line.split()
            if len(parts) < 2:
                raise ParseError(f"{path}:{lineno}: expected 'WORD PH1 PH2 ...'")
            word = parts[0].casefold()
            if "(" in word:  # alternate pronunciation; keep only the base entry
                continue
            phones = tuple(p.translate(_STRESS_DIGITS) for p in parts[1:])
            bad = [p for p in phones if p not in INVENTORY]
            if bad:
                raise ParseError(f"{path}:{lineno}: unknown phoneme symbol(s) {bad} for {parts[0]!r}")
            entries.setdefault(word, phones)
        return cls(entries)

    def lookup(self, word: str) -> tuple[str, ...] | None:
        return self._entries.get(word.casefold())

    def __contains__(self, word: str) -> bool:
        return word.casefold() in self._entries

    def __len__(self) -> int:
        return len(self._entries)


_default_lexicon: Lexicon | None = None


def default_lexicon() -> Lexicon:
    global _default_lexicon
    if _default_lexicon is None:
        ref = resources.files("lyreval.phonology").joinpath("data/english_lexicon.txt")
        with resources.as_file(ref) as path:
            _default_lexicon = Lexicon.from_file(path)
    return _default_lexicon


_VOWEL_LETTERS = frozenset("aeiouy")

# Common vowel digraphs; any unlisted group falls back to its first letter.
_VOWEL_GROUPS = {
    "ee": "IY", "ea": "IY", "ie": "IY", "ey": "IY",
    "oo": "UH", "ue": "UH", "ui": "UH",
    "ou": "AW", "ow": "AW",
    "ai": "EY", "ay": "EY", "ei": "EY",
    "oi": "OY", "oy": "OY",
    "au": "AO", "aw": "AO",
    "oa": "OW", "oe": "OW",
}
_VOWEL_SINGLE = {"a": "AE", "e": "EH", "i": "IH", "o": "AA", "u": "AH", "y": "IH"}

_CONSONANT_DIGRAPHS = {
    "ch": ("CH",), "sh": ("SH",), "th": ("TH",), "ph": ("F",),
    "wh": ("W",), "ng": ("NG",), "ck": ("K",),
}
_CONSONANT_SINGLE = {
    "b": ("B",), "c": ("K",), "d": ("D",), "f": ("F",), "g": ("G",),
    "h": ("HH",), "j": ("JH",), "k": ("K",), "l": ("L",), "m": ("M",),
    "n": ("N",), "p": ("P",), "q": ("K",), "r": ("R",), "s": ("S",),
    "t": ("T",), "v": ("V",), "w": ("W",), "x": ("K", "S"), "z": ("Z",),
}


def _strip_silent_e(word: str) -> str:
    if len(word) > 2 and word.endswith("e") and not word.endswith("ee"):
        if any(ch in _VOWEL_LETTERS for ch in word[:-1]):
            return word[:-1]
    return word


def _letter_groups(word: str) -> list[str]:
    """Split into maximal runs of vowel letters / consonant letters."""
    groups = []
    for m in re.finditer(r"[aeiouy]+|[^aeiouy]+", word):
        groups.append(m.group(0))
    return groups


def fallback_phonemes(word: str) -> tuple[str, ...]:
    """Deterministic grapheme-to-phoneme rules for out-of-lexicon words."""
    word = re.sub(r"[^a-z]", "", word.casefold())
    if not word:
        return ()
    word = _strip_silent_e(word.replace("qu", "qw"))
    phones: list[str] = []
    for group in _letter_groups(word):
        if group[0] in _VOWEL_LETTERS:
            phones.append(_VOWEL_GROUPS.get(group, _VOWEL_SINGLE[group[0]]))
            continue
        i = 0
        while i < len(group):
            pair = group[i : i + 2]
            if pair in _CONSONANT_DIGRAPHS:
                phones.extend(_CONSONANT_DIGRAPHS[pair])
                i += 2
                continue
            ch = group[i]
            if i + 1 < len(group) and group[i + 1] == ch:  # doubled letter
                i += 1
                continue
            phones.extend(_CONSONANT_SINGLE.get(ch, ()))
            i += 1
    return tuple(phones)


def fallback_syllables(word: str) -> int:
    """Vowel-letter groups after dropping a silent final 'e'; minimum 1."""
    word = re.sub(r"[^a-z]", "", word.casefold())
    if not word:
        return 0
    word = _strip_silent_e(word.replace("qu", "qw"))
    groups = sum(1 for g in _letter_groups(word) if g[0] in _VOWEL_LETTERS)
    return max(groups, 1)


def word_phonemes(word: str, lexicon: Lexicon) -> tuple[str, ...]:
    found = lexicon.lookup(word)
    if found is not None:
        return found
    return fallback_phonemes(word)


def word_syllables(word: str, lexicon: Lexicon) -> int:
    found = lexicon.lookup(word)
    if found is not None:
        return sum(1 for p in found if p in VOWELS)
    return fallback_syllables(word)


_WORD_CHARS = re.compile(r"[a-z']+")
_PUNCT_OR_SPACE = re.compile(r"[\s\.,!\?;:\"\(\)\[\]\{\}…—–\-_/\\&\*#@%\+=<>~`^|’‘“”]+")


def line_words(text: str) -> list[str]:
    """Tokenize a line into lowercase words; hyphens split, punctuation strips.

    Characters that are neither word characters nor ordinary punctuation
    (digits, other scripts) are dropped with a DroppedTextWarning.
    """
    lowered = text.casefold().replace("’", "'")
    cleaned = _PUNCT_OR_SPACE.sub(" ", lowered)
    words = []
    dropped = []
    for token in cleaned.split():
        match = _WORD_CHARS.findall(token)
        kept = "".join(match)
        leftover = re.sub(r"[a-z']", "", token)
        if leftover:
            dropped.append(leftover)
        word = kept.strip("'")
        if word:
            words.append(word)
    if dropped:
        warnings.warn(
            f"dropped unpronounceable characters from English line: {''.join(dropped)!r}",
            DroppedTextWarning,
            stacklevel=2,
        )
    return words


def line_phonemes(text: str, lexicon: Lexicon) -> list[str]:
    phones: list[str] = []
    for word in line_words(text):
        phones.extend(word_phonemes(word, lexicon))
    return phones


def line_syllables(text: str, lexicon: Lexicon) -> int:
    return sum(word_syllables(w, lexicon) for w in line_words(text))
