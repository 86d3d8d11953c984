"""Japanese kana phonemization and mora counting.

Input is expected in kana (hiragana or katakana); kanji is rejected with
KanjiNotSupportedError rather than silently mis-counted. Each mora yields
an optional consonant token plus a vowel token. Palatalized morae keep
their palatalized vowel (きゃ -> K, YA), so YA/YU/YO stay distinct from
A/U/O. The moraic nasal ん yields NN, the sokuon っ yields the geminate
marker Q, and the long-vowel mark ー repeats the preceding vowel. Each of
ん, っ, and ー counts as one mora; small ゃゅょ (and small vowel kana)
attach to the preceding mora.
"""

from __future__ import annotations

import warnings

from ..errors import DroppedTextWarning, KanjiNotSupportedError

VOWEL_TOKENS = frozenset({"A", "I", "U", "E", "O", "YA", "YU", "YO"})
CONSONANT_TOKENS = frozenset({"K", "G", "S", "Z", "T", "D", "N", "H", "B", "P", "M", "R", "W", "NN", "Q"})
INVENTORY = VOWEL_TOKENS | CONSONANT_TOKENS

MORAIC_NASAL = "NN"
GEMINATE = "Q"
LONG_VOWEL_MARK = "ー"

# Base kana -> (consonant or None, vowel). ぢ/づ map to their modern
# pronunciations; を to its plain vowel.
_ROWS = {
    "あいうえお": None,
    "かきくけこ": "K",
    "がぎぐげご": "G",
    "さしすせそ": "S",
    "ざじずぜぞ": "Z",
    "たちつてと": "T",
    "なにぬねの": "N",
    "はひふへほ": "H",
    "ばびぶべぼ": "B",
    "ぱぴぷぺぽ": "P",
    "まみむめも": "M",
    "らりるれろ": "R",
}
_VOWEL_ORDER = ("A", "I", "U", "E", "O")

_KANA: dict[str, tuple[str | None, str]] = {}
for row, consonant in _ROWS.items():
    for kana, vowel in zip(row, _VOWEL_ORDER):
        _KANA[kana] = (consonant, vowel)
_KANA.update(
    {
        "だ": ("D", "A"), "ぢ": ("Z", "I"), "づ": ("Z", "U"), "で": ("D", "E"), "ど": ("D", "O"),
        "や": (None, "YA"), "ゆ": (None, "YU"), "よ": (None, "YO"),
        "わ": ("W", "A"), "ゐ": ("W", "I"), "ゑ": ("W", "E"), "を": (None, "O"),
        "ゔ": ("B", "U"),
    }
)

_SMALL_Y = {"ゃ": "YA", "ゅ": "YU", "ょ": "YO"}
_SMALL_VOWEL = {"ぁ": "A", "ぃ": "I", "ぅ": "U", "ぇ": "E", "ぉ": "O", "ゎ": "A"}
_NON_MORAIC = set(_SMALL_Y) | set(_SMALL_VOWEL)

_PUNCT = set(" \t、。，．・「」『』（）()!！?？…〜～―,.;:'\"-")


def kata_to_hira(text: str) -> str:
    """Convert katakana to hiragana; everything else passes through."""
    out = []
    for ch in text:
        code = ord(ch)
        if 0x30A1 <= code <= 0x30F6 or code in (0x30FD, 0x30FE):
            out.append(chr(code - 0x60))
        else:
            out.append(ch)
    return "".join(out)


def _is_kanji(ch: str) -> bool:
    code = ord(ch)
    return (
        0x3400 <= code <= 0x4DBF
        or 0x4E00 <= code <= 0x9FFF
        or 0xF900 <= code <= 0xFAFF
        or ch == "々"
    )


def _check_no_kanji(text: str) -> None:
    for ch in text:
        if _is_kanji(ch):
            raise KanjiNotSupportedError(
                f"Japanese input must be kana; found kanji {ch!r} in {text!r}"
            )


def line_phonemes(text: str) -> list[str]:
    """Phoneme tokens for one kana line (no end-of-line marker)."""
    _check_no_kanji(text)
    hira = kata_to_hira(text)
    tokens: list[str] = []
    last_vowel_index = -1
    dropped: list[str] = []
    for ch in hira:
        if ch in _KANA:
            consonant, vowel = _KANA[ch]
            if consonant is not None:
                tokens.append(consonant)
            tokens.append(vowel)
            last_vowel_index = len(tokens) - 1
        elif ch in _SMALL_Y or ch in _SMALL_VOWEL:
            replacement = _SMALL_Y.get(ch) or _SMALL_VOWEL[ch]
            if last_vowel_index >= 0:
                tokens[last_vowel_index] = replacement
            else:
                dropped.append(ch)
        elif ch == "ん":
            tokens.append(MORAIC_NASAL)
        elif ch == "っ":
            tokens.append(GEMINATE)
        elif ch == LONG_VOWEL_MARK:
            if last_vowel_index >= 0:
                tokens.append(tokens[last_vowel_index])
                last_vowel_index = len(tokens) - 1
            else:
                dropped.append(ch)
        elif ch in _PUNCT:
            continue
        else:
            dropped.append(ch)
    if dropped:
        warnings.warn(
            f"dropped non-kana characters from Japanese line: {''.join(dropped)!r}",
            DroppedTextWarning,
            stacklevel=2,
        )
    return tokens


def mora_count(text: str) -> int:
    """Number of morae in a kana line.

    Small ゃゅょ (and small vowel kana) attach to the preceding mora;
    ん, っ, and ー each count as one. Unrecognized characters contribute
    zero.
    """
    _check_no_kanji(text)
    hira = kata_to_hira(text)
    count = 0
    for ch in hira:
        if ch in _NON_MORAIC:
            continue
        if ch in _KANA or ch in ("ん", "っ", LONG_VOWEL_MARK):
            count += 1
    return count
