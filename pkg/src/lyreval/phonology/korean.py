"""Korean hangul phonemization via jamo decomposition.

Each hangul syllable block decomposes into onset, nucleus, and optional
coda by Unicode arithmetic. Tokens are the compatibility-jamo characters
themselves. A silent onset ㅇ yields no token; the coda ㅇ (the velar
nasal) is kept. Syllable counting is simply the number of characters in
the hangul-syllables block.
"""

from __future__ import annotations

import warnings

from ..errors import DomainError, DroppedTextWarning

_BASE = 0xAC00
_LAST = 0xD7A3
_VCOUNT = 21
_TCOUNT = 28

ONSETS = tuple("ㄱㄲㄴㄷㄸㄹㅁㅂㅃㅅㅆㅇㅈㅉㅊㅋㅌㅍㅎ")
NUCLEI = tuple("ㅏㅐㅑㅒㅓㅔㅕㅖㅗㅘㅙㅚㅛㅜㅝㅞㅟㅠㅡㅢㅣ")
CODAS = (None,) + tuple("ㄱㄲㄳㄴㄵㄶㄷㄹㄺㄻㄼㄽㄾㄿㅀㅁㅂㅄㅅㅆㅇㅈㅊㅋㅌㅍㅎ")

INVENTORY = frozenset(ONSETS) | frozenset(NUCLEI) | frozenset(c for c in CODAS if c)

_SILENT_ONSET = "ㅇ"

_PUNCT = set(" \t.,!?;:'\"()[]…—–-~、。，．！？")


def is_hangul_syllable(ch: str) -> bool:
    return len(ch) == 1 and _BASE <= ord(ch) <= _LAST


def decompose_hangul(ch: str) -> tuple[str, str, str | None]:
    """Split one hangul syllable block into (onset, nucleus, coda-or-None)."""
    if not is_hangul_syllable(ch):
        raise DomainError(f"not a hangul syllable block: {ch!r}")
    index = ord(ch) - _BASE
    onset = index // (_VCOUNT * _TCOUNT)
    nucleus = (index % (_VCOUNT * _TCOUNT)) // _TCOUNT
    coda = index % _TCOUNT
    return ONSETS[onset], NUCLEI[nucleus], CODAS[coda]


def compose_hangul(onset: str, nucleus: str, coda: str | None = None) -> str:
    """Inverse of decompose_hangul; used by fixtures and tests."""
    try:
        l = ONSETS.index(onset)
        v = NUCLEI.index(nucleus)
        t = CODAS.index(coda)
    except ValueError as e:
        raise DomainError(f"invalid jamo for composition: {(onset, nucleus, coda)!r}") from e
    return chr(_BASE + (l * _VCOUNT + v) * _TCOUNT + t)


def line_phonemes(text: str) -> list[str]:
    """Jamo tokens for one line (no end-of-line marker); silent onsets dropped."""
    tokens: list[str] = []
    dropped: list[str] = []
    for ch in text:
        if is_hangul_syllable(ch):
            onset, nucleus, coda = decompose_hangul(ch)
            if onset != _SILENT_ONSET:
                tokens.append(onset)
            tokens.append(nucleus)
            if coda is not None:
                tokens.append(coda)
        elif ch in _PUNCT:
            continue
        else:
            dropped.append(ch)
    if dropped:
        warnings.warn(
            f"dropped non-hangul characters from Korean line: {''.join(dropped)!r}",
            DroppedTextWarning,
            stacklevel=2,
        )
    return tokens


def syllable_count(text: str) -> int:
    """Number of hangul syllable blocks; all other characters contribute zero."""
    return sum(1 for ch in text if is_hangul_syllable(ch))
